#ifndef ARWHIT_GAMMAKERNEL_HPP
#define ARWHIT_GAMMAKERNEL_HPP

#include <complex>

#include "arwhit/errors.hpp"

namespace arwhit {

using cplx = std::complex<double>;

// Configuration of the Gamma backend (rational-approximation order and the
// real-part cutoff below which the reflection formula is used).
struct GammaConfig {
    int series_terms = 15;            // >= 8
    double reflection_threshold = 0.5; // <= 0.5
};

enum class BesselMethod { integral, mellin_barnes, series };

// Gamma(z). Throws PoleError when z is (numerically) a non-positive integer.
cplx gamma(cplx z);

// log Gamma(z), accurate for all z off the pole set. The branch is only
// guaranteed up to 2*pi*i; exp(log_gamma(z)) == gamma(z) exactly, which is
// all downstream exponent-sum evaluation relies on.
cplx log_gamma(cplx z);

// Residue of Gamma at z = -m: (-1)^m / m!.
double gamma_residue(int m);

// Normalized factors: gamma_r(s) = pi^{-s/2} Gamma(s/2),
// gamma_c(s) = 2 (2 pi)^{-s} Gamma(s); and their logarithms.
cplx gamma_r(cplx s);
cplx gamma_c(cplx s);
cplx log_gamma_r(cplx s);
cplx log_gamma_c(cplx s);

// Pochhammer symbol (a)_i = a (a+1) ... (a+i-1); (a)_0 = 1.
cplx pochhammer(cplx a, int i);

// Extended-precision log Gamma (Spouge approximation in long double),
// for anchoring series whose terms cancel past double precision. Same
// branch caveat as log_gamma.
using lcplx = std::complex<long double>;
lcplx log_gamma_ld(lcplx z);

// Modified Bessel function of the second kind, K_r(z) for z > 0, by one of
// three independent routes: the real-line integral of exp(-z cosh u + r u),
// a Mellin-Barnes contour integral, or the symmetrized power series
// (requires non-integer r).
cplx bessel_k(cplx r, double z, BesselMethod method);

// Truncated series I^hat_r(z) = sum_k (-1)^k/k! Gamma(-r-k) (z/2)^{r+2k};
// requires non-integer r.
cplx bessel_i_hat(cplx r, double z, int terms);

// True when z is within tol of a non-positive integer (a Gamma pole).
bool near_gamma_pole(cplx z, double tol = 1e-8);

} // namespace arwhit

#endif
