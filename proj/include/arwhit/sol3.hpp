#ifndef ARWHIT_SOL3_HPP
#define ARWHIT_SOL3_HPP

#include <array>
#include <functional>
#include <utility>

#include "arwhit/contour.hpp"

namespace arwhit {

// Parameter triple r = (r1, r2, r3) of the two-variable holonomic system.
// Series evaluation additionally requires the generic condition
// r_p - r_q not in 2Z for all p != q.
struct SolParams {
    std::array<cplx, 3> r{};
};

// Truncation policy for the double power series: m1 + m2 <= max_order,
// with early stop once two consecutive total-order blocks fall below
// rel_tail_tol relative to the running scale.
struct SeriesTruncation {
    int max_order = 120;
    double rel_tail_tol = 1e-14;
};

// A permutation (i, j, k) of {1, 2, 3}, 1-based.
using Perm3 = std::array<int, 3>;

// Distance from the difference r_p - r_q to the nearest even integer,
// minimized over all p != q. Series routines reject values below 1e-3.
double sol_genericity_margin(const SolParams& r);

// Coefficient C^{(i,j,k)}_{m1,m2} of the power-series solution, computed by
// the ratio recurrences anchored at C_{0,0} (itself from log-Gamma).
cplx sol_coeff(const SolParams& r, Perm3 perm, int m1, int m2);

// Power-series solution f^{(i,j,k)}_r(z1, z2)
//   = sum_{m1,m2 >= 0} C_{m1,m2} z1^{2 m1 + r_i} z2^{2 m2 - r_j}.
cplx sol_series(const SolParams& r, Perm3 perm, double z1, double z2,
                SeriesTruncation trunc = {});

// Sum of all six power-series solutions, accumulated in extended precision.
// Away from the origin the six series are exponentially larger than their
// sum, so summing six separately rounded values loses accuracy; this is the
// reliable series-side evaluation of the moderate-growth solution.
cplx sol_series_sum(const SolParams& r, double z1, double z2,
                    SeriesTruncation trunc = {});

// Moderate-growth solution: the (1/(4 pi i))^2 double Mellin-Barnes integral
// of Gamma((s1+r_1)/2)...Gamma((s2-r_3)/2) / Gamma((s1+s2)/2) times
// z1^{-s1} z2^{-s2}. Symmetric in (r1, r2, r3); equals the sum of the six
// series solutions when the generic condition holds.
cplx sol_mg(const SolParams& r, double z1, double z2);

// Residuals of the two defining differential equations applied to f at
// (z1, z2), using 4th-order central differences for the Euler operators
// z_i d/dz_i in the logarithmic variables u_i = log z_i with spacing h.
// Returns (second-order-equation residual, third-order-equation residual).
std::pair<cplx, cplx> sol_pde_residual(
    const SolParams& r, const std::function<cplx(double, double)>& f,
    double z1, double z2, double h);

} // namespace arwhit

#endif
