#ifndef ARWHIT_CONTOUR_HPP
#define ARWHIT_CONTOUR_HPP

#include <functional>

#include "arwhit/gammakernel.hpp"

namespace arwhit {

// A vertical integration line Re = real_part, truncated at |Im| <= half_height,
// discretized with the given step. half_height is adaptively doubled by the
// quadrature routines until the result stabilizes.
struct VerticalContour {
    double real_part = 1.0;
    double half_height = 16.0;
    double step = 0.1;
};

struct Contour2D {
    VerticalContour c1;
    VerticalContour c2;
};

struct IdentityReport {
    cplx lhs{};
    cplx rhs{};
    double rel_error = 0.0;
    long nodes_used = 0;
};

enum class Field { R, C };

enum class IdentityId {
    barnes_first,      // Barnes' lemma, both fields
    barnes_exchange,   // the a3/b3 exchange identity, both fields
    barnes_second,     // Barnes' second lemma, both fields
    barnes_second_sum, // the summed two-term real variant
    gauss_sum,         // binomial Gamma_C sum, complex field
    cr_barnes          // the mixed Gamma_R/Gamma_C Barnes evaluation
};

double rel_error_of(cplx lhs, cplx rhs);

// (2 pi i)^{-1} integral of f over the vertical line, trapezoid with
// tail-doubling until two successive truncations agree within tol.
// The integrand is passed in log form and exponentiated once per node.
cplx mb_integral_1d_log(const std::function<cplx(cplx)>& log_f,
                        VerticalContour contour, double tol = 1e-10,
                        long* nodes_used = nullptr);

// Same, with a plain (non-log) integrand. A value of exactly 0 is allowed.
cplx mb_integral_1d(const std::function<cplx(cplx)>& f,
                    VerticalContour contour, double tol = 1e-10,
                    long* nodes_used = nullptr);

// (2 pi i)^{-2} iterated double integral (inner variable s1, outer s2) of the
// log-form integrand. Callers supply any extra normalization themselves
// (e.g. an extra 1/4 for (1/(4 pi i))^2 conventions).
cplx mb_integral_2d_log(const std::function<cplx(cplx, cplx)>& log_f,
                        Contour2D contour, double tol = 1e-8,
                        long* nodes_used = nullptr);

cplx mb_integral_2d(const std::function<cplx(cplx, cplx)>& f,
                    Contour2D contour, double tol = 1e-8,
                    long* nodes_used = nullptr);

// Numerical check of the Mellin inversion identity
//   (2 pi i)^{-1} int_0^inf { int_t f(t) y^{-c t} dt } y^{c s} c dy/y = f(s)
// for a Gamma-built f supplied in log form. pole_bound is the abscissa r of
// the lemma (f holomorphic on Re > r); for y < 1 the inner line is moved down
// to just right of it, which keeps node magnitudes small and avoids
// catastrophic cancellation.
IdentityReport verify_mellin_inversion(const std::function<cplx(cplx)>& log_f,
                                       VerticalContour contour, cplx s, double c,
                                       double pole_bound, double tol = 1e-10);

// Evaluates one of the Gamma-integral identities numerically (lhs) and in
// closed form (rhs). Parameter layout:
//   barnes_first:      a1 a2 b1 b2
//   barnes_exchange:   a1 a2 a3 b1 b2 b3
//   barnes_second:     a1 a2 b1 b2 b3
//   barnes_second_sum: a1 a2 b1 b2 b3              (field R only)
//   gauss_sum:         z1 z2 m                      (field C only, m integer)
//   cr_barnes:         a1 a2 b1                     (field R carrier)
IdentityReport verify_identity(IdentityId which, Field field,
                               const std::vector<cplx>& params,
                               double tol = 1e-10);

} // namespace arwhit

#endif
