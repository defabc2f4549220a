#ifndef ARWHIT_ZETA_HPP
#define ARWHIT_ZETA_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "arwhit/langlands.hpp"
#include "arwhit/whittaker.hpp"

namespace arwhit {

// ---------------------------------------------------------------------------
// Radial quadrature
//
// All zeta integrals are multiplicative-measure integrals over (0, inf)^d.
// They are computed by the trapezoid rule on a uniform grid in u = log y,
// which converges geometrically for integrands analytic in a strip and
// decaying at both ends. The grid must be wide enough that the integrand is
// negligible at the endpoints; otherwise ConvergenceRangeError is raised.
// ---------------------------------------------------------------------------

struct LogGrid {
    double u_min = -6.0;
    double u_max = 4.0;
    int nodes = 240;
};

struct ZetaConfig {
    LogGrid grid1{};           // y1 axis
    LogGrid grid2{};           // y2 axis (2D integrals only)
    double tol = 1e-8;         // reporting threshold used by verify_zeta
    double tail_tol = 1e-10;   // endpoint-to-total ratio guard
};

// Grid points y_i = exp(u_i) and the matching trapezoid weights for
// int f(y) dy/y (weight h, halved at the endpoints).
std::vector<double> grid_points(const LogGrid& g);
std::vector<double> grid_weights(const LogGrid& g);

// int_0^inf f(y) dy/y. Raises ConvergenceRangeError when the endpoint nodes
// carry more than tail_tol of the total absolute mass.
cplx radial_integral_1d(const std::function<cplx(double)>& f,
                        const LogGrid& g, double tail_tol = 1e-10);

// int int f(y1, y2) (dy1/y1)(dy2/y2), same endpoint guard per axis.
cplx radial_integral_2d(const std::function<cplx(double, double)>& f,
                        const LogGrid& g1, const LogGrid& g2,
                        double tail_tol = 1e-10);

// ---------------------------------------------------------------------------
// GL(2) x GL(1)
//
// Pairing against a character of R^x (parameter nu', delta') or C^x
// (parameter nu', d'). The value equals constant * L(s, pi x chi') with
// constant 1 over R and (eps i)^{-d'} over C.
// ---------------------------------------------------------------------------

cplx zeta_gl2_gl1(const RealGL2Rep& rep, cplx nu_p, int delta_p, int eps,
                  cplx s, const ZetaConfig& cfg = {});
cplx zeta_gl2_gl1(const ComplexRep& rep, cplx nu_p, int d_p, int eps, cplx s,
                  const ZetaConfig& cfg = {});

// The tensor-product parameter of the pair, for computing the expected
// L-factor of the GL(1) pairings.
WeilParam gl1_twist(const RealGL2Rep& rep, cplx nu_p, int delta_p);
WeilParam gl1_twist(const ComplexRep& rep, cplx nu_p, int d_p);

// ---------------------------------------------------------------------------
// GL(2) x GL(2)
//
// Rankin-Selberg pairing with the Gaussian Schwartz function. Over R the
// value equals L(s, pi x pi'); over C it equals c22_constant * L.
// ---------------------------------------------------------------------------

cplx zeta_gl2_gl2(const RealGL2Rep& rep, const RealGL2Rep& rep_p, int eps,
                  cplx s, const ZetaConfig& cfg = {});
cplx zeta_gl2_gl2(const ComplexRep& rep, const ComplexRep& rep_p, int eps,
                  cplx s, const ZetaConfig& cfg = {});

double c22_constant(const ComplexRep& rep, const ComplexRep& rep_p);

// ---------------------------------------------------------------------------
// GL(3) x GL(2)
//
// The pairing depends on the chosen K2-type vectors v, v' only through the
// invariant pairing <v, v'>; it is identically zero unless both sides
// restrict to the same K2-type. The engine precomputes the Whittaker values
// on the grid once and evaluates the normalized value Z / <v, v'> at any s;
// expected(s) = constant() * L(s).
// ---------------------------------------------------------------------------

class Gl3Gl2Engine {
public:
    Gl3Gl2Engine(const RealGL3Rep& rep3, const RealGL2Rep& rep2, int eps,
                 const ZetaConfig& cfg = {});
    Gl3Gl2Engine(const ComplexRep& rep3, const ComplexRep& rep2, int eps,
                 const ZetaConfig& cfg = {});

    // Z(s) normalized to <v, v'> = 1.
    cplx value(cplx s) const;
    // Predicted Z(s) / L(s): 1 over R, the binomial-factorial constant over C.
    cplx constant() const;
    cplx expected(cplx s) const;
    std::array<int, 2> lambda() const { return lambda_; }

private:
    Field field_;
    std::array<int, 2> lambda_{};
    cplx constant_ = 1.0;
    WeilParam tensor_{};
    double tail_tol_ = 1e-10;
    std::vector<double> y1s_, y2s_, w1_, w2_;
    // Per K2-type index q: GL(3) grid values (row-major over y1 x y2),
    // matching GL(2) radial values on the y1 grid, and the q-sum weight.
    struct Slice {
        std::vector<cplx> f3;
        std::vector<cplx> b2;
        double weight = 1.0;
    };
    std::vector<Slice> slices_;
    cplx p2_ = 0.0;            // y2 exponent carried by the GL(2) factor
    cplx s_shift1_, s_shift0_; // y1 exponent = s * s_shift1_ + s_shift0_
    cplx t_shift1_, t_shift0_; // y2 exponent likewise
};

// Full pairing at explicit K2-type data (lambda_v, q_v) on the GL(3) side
// and (lambda_vp, q_vp) on the GL(2) side; lambda_vp must be the K2-type the
// GL(2) family is defined at (its minimal one over R, the theorem-matched
// one over C). Returns exactly 0 when the K2-types do not match.
cplx zeta_gl3_gl2(const RealGL3Rep& rep3, const RealGL2Rep& rep2, int eps,
                  std::array<int, 2> lambda_v, int q_v,
                  std::array<int, 2> lambda_vp, int q_vp, cplx s,
                  const ZetaConfig& cfg = {});
cplx zeta_gl3_gl2(const ComplexRep& rep3, const ComplexRep& rep2, int eps,
                  std::array<int, 2> lambda_v, int q_v,
                  std::array<int, 2> lambda_vp, int q_vp, cplx s,
                  const ZetaConfig& cfg = {});

// The K2-type the complex pairing is carried by, and its matching constant
// C(chi, chi') with Z = C(chi, chi') <v, v'> L.
std::array<int, 2> c32_lambda(const ComplexRep& rep3, const ComplexRep& rep2);
double c32_constant(const ComplexRep& rep3, const ComplexRep& rep2);

// ---------------------------------------------------------------------------
// Suite verification
// ---------------------------------------------------------------------------

struct ZetaCase {
    std::string pairing;          // r21, c21, r22, c22, r32, c32
    RepParam rep;                 // the GL(2) or GL(3) side
    RepParam rep_p;               // second representation (r22/c22/r32/c32)
    cplx nu_p = 0.0;              // GL(1) character (r21/c21)
    int k_p = 0;                  // delta' or d' of the GL(1) character
    int eps = 1;
    std::vector<cplx> s_samples;
    std::string label;            // echoed into the reports
};

struct ZetaReport {
    std::string pairing;
    std::string label;
    cplx s = 0.0;
    cplx z_value = 0.0;
    cplx expected = 0.0;
    cplx constant_used = 1.0;
    double rel_error = 0.0;
    bool pass = false;
    std::string error;            // non-empty when evaluation failed
};

// Evaluates every (case, s) pair, isolating numerical failures per report.
std::vector<ZetaReport> verify_zeta(const std::vector<ZetaCase>& suite,
                                    const ZetaConfig& cfg = {});

} // namespace arwhit

#endif
