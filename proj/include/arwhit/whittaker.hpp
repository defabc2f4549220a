#ifndef ARWHIT_WHITTAKER_HPP
#define ARWHIT_WHITTAKER_HPP

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "arwhit/gammakernel.hpp"
#include "arwhit/langlands.hpp"
#include "arwhit/sol3.hpp"

namespace arwhit {

// Point y = diag(y1 y2, y2) of the GL(2) diagonal torus; the GL(3) families
// are evaluated at the embedded point diag(y1 y2, y2, 1).
struct TorusPoint {
    double y1 = 1.0;
    double y2 = 1.0;
};

enum class Gl2Method { closed_form, mellin_barnes };
enum class Gl3Method { mellin_barnes, series };

// ---------------------------------------------------------------------------
// Two-variable truncated Mellin-Barnes table
//
//   value(y1, y2) = (2 pi i)^{-2} int int exp(log_f(t1, t2))
//                   y1^{-k t1} y2^{-k t2} dt1 dt2
//
// over Re(t_i) = c_i, discretized by the trapezoid rule with the given step
// and |Im t_i| <= H, where H starts at half_height and doubles until the
// boundary node weights fall below boundary_tol of the largest weight.
// The node-weight matrix is computed once; evaluating a point or a tensor
// grid of points is then a weighted double sum. Immutable after
// construction, safe for concurrent reads.
//
// Weights and sums are kept in extended precision: the truncated sum
// cancels from the y^{-k c} term scale down to the y^{-k t_pole} value (and
// to the exponential decay at large y), so the accumulation noise floor
// directly limits how far into the tails a table stays usable.
// ---------------------------------------------------------------------------
class Mb2Table {
public:
    Mb2Table(const std::function<lcplx(lcplx, lcplx)>& log_f, double c1,
             double c2, double power_scale, double step = 0.1,
             double half_height = 10.0, double boundary_tol = 1e-13);

    cplx value(double y1, double y2) const;

    // Values on the tensor grid, row-major: out[i * y2s.size() + j] is the
    // value at (y1s[i], y2s[j]). Much cheaper than pointwise evaluation.
    std::vector<cplx> grid(const std::vector<double>& y1s,
                           const std::vector<double>& y2s) const;

    double half_height() const { return h_ * n1_; }
    long nodes() const { return long(2 * n1_ + 1) * long(2 * n2_ + 1); }

private:
    double c1_ = 0.0, c2_ = 0.0, k_ = 1.0, h_ = 0.1;
    int n1_ = 0, n2_ = 0;                     // nodes per half-axis
    std::vector<lcplx> g_;                    // (2n1+1) x (2n2+1) weights

    std::vector<lcplx> axis_powers(double y, double c, int n) const;
};

// A radial function on the torus expressed as a finite combination
//   F(y) = sum_t coeff_t y1^{p1_t} y2^{p2_t} T_t(y1, y2)
// of shared Mellin-Barnes tables. An empty combination is identically zero.
class RadialFamily {
public:
    struct Term {
        cplx coeff;
        cplx p1, p2;                               // powers of y1, y2
        std::shared_ptr<const Mb2Table> table;     // shared across terms
    };

    RadialFamily() = default;
    explicit RadialFamily(std::vector<Term> terms) : terms_(std::move(terms)) {}

    cplx value(TorusPoint y) const;
    std::vector<cplx> grid(const std::vector<double>& y1s,
                           const std::vector<double>& y2s) const;
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

// Optional knobs for the 2D tables (tests use them for contour-height
// doubling stability checks; the defaults match Mb2Table's).
struct Mb2Options {
    double step = 0.1;
    double half_height = 10.0;
    double boundary_tol = 1e-13;
};

// ---------------------------------------------------------------------------
// GL(2, R)
// ---------------------------------------------------------------------------

// Minimal K2-type of the representation: (delta1 - delta2, delta2) for a
// principal series, (kappa, 0) for a discrete series.
std::array<int, 2> gl2r_min_ktype(const RealGL2Rep& rep);

// Index set Q_lambda of the K2-type lambda: {0} if lambda1 = 0, else
// {+-lambda1}.
std::vector<int> ktype_indices_r(std::array<int, 2> lambda);

// Radial value of the normalized family at the minimal K2-type vector
// v_{lambda, q}, computable both by K-Bessel closed forms and by a 1D
// Mellin-Barnes integral.
cplx gl2r_whittaker(const RealGL2Rep& rep, int eps, int q, TorusPoint y,
                    Gl2Method method = Gl2Method::closed_form);

// The moderate-growth principal-series radial family at a general index
// q = delta1 - delta2 (mod 2), normalized so that the minimal-K-type members
// carry constant 1; used by the contiguity checks. Returns hat-phi_q(y1),
// i.e. the value with the y1^{1/2} y2^{nu1+nu2} prefactor stripped.
cplx gl2r_mb_family(const RealGL2Rep& rep, int q, double y1);

// ---------------------------------------------------------------------------
// GL(2, C)
// ---------------------------------------------------------------------------

// Psi(a1, a2)(y1) = 8 y1^{a1+a2} K_{a1-a2}(4 pi y1)
//                 = (2 pi i)^{-1} int Gamma_C(t+a1) Gamma_C(t+a2) y1^{-2t} dt.
cplx psi_pair(cplx a1, cplx a2, double y1);

// Radial value of the normalized family at the K2-type
// lambda = (d1 + l, d2 - l), vector v_{lambda, q} with 0 <= q <= d1-d2+2l.
// Two equivalent finite sums of Gamma_C-pair transforms are evaluated and
// cross-checked; disagreement beyond 1e-9 raises ExpressionMismatch.
cplx gl2c_whittaker(const ComplexRep& rep, int eps, int l, int q, TorusPoint y);

// The two expressions separately (expr = 1 or 2), for tests.
cplx gl2c_whittaker_expr(const ComplexRep& rep, int eps, int l, int q,
                         TorusPoint y, int expr);

// ---------------------------------------------------------------------------
// GL(3, R)
// ---------------------------------------------------------------------------

// Minimal K3-type (mu1, mu2): (delta1 - delta3, delta2) for a principal
// series with delta1 >= delta2 >= delta3, (kappa1, delta2) for a
// generalized principal series.
std::array<int, 2> gl3r_min_ktype(const RealGL3Rep& rep);

// Radial value at the basis vector u_l, l = (l1, l2, l3) with l_i >= 0 and
// l1 + l2 + l3 = mu1, at the torus point diag(y1 y2, y2, 1). The series
// method is the sol3-backed cross-check route, available for the spherical
// principal series (all delta = 0, l = 0) only.
cplx gl3r_whittaker(const RealGL3Rep& rep, int eps, std::array<int, 3> l,
                    TorusPoint y, Gl3Method method = Gl3Method::mellin_barnes);

// The same value as a reusable one-term family (table built once).
RadialFamily gl3r_u_family(const RealGL3Rep& rep, int eps,
                           std::array<int, 3> l, Mb2Options opt = {});

// The K2-restricted family at v_{lambda, q}, lambda in Lambda_2, as the
// case-classified finite combination of u_l values.
cplx gl3r_whittaker_k2(const RealGL3Rep& rep, int eps,
                       std::array<int, 2> lambda, int q, TorusPoint y);
RadialFamily gl3r_k2_family(const RealGL3Rep& rep, int eps,
                            std::array<int, 2> lambda, int q,
                            Mb2Options opt = {});

// ---------------------------------------------------------------------------
// GL(3, C)
// ---------------------------------------------------------------------------

// Exponent multi-indices (xi_1, xi_2, xi_3, xi~_1, xi~_2, xi~_3) of the
// basis vector l = (l1, l2, l3, l~1, l~2, l~3).
std::array<int, 6> gl3c_xi(const std::array<int, 6>& l);

// Radial value at u_l for l in S_{(d1,d2,d3)} (components >= 0,
// l1+l2+l3 = d1-d2, l~1+l~2+l~3 = d2-d3).
cplx gl3c_whittaker(const ComplexRep& rep, int eps, std::array<int, 6> l,
                    TorusPoint y);
RadialFamily gl3c_u_family(const ComplexRep& rep, int eps,
                           std::array<int, 6> l, Mb2Options opt = {});

// The K2-restricted family at v_{lambda, q}; requires d1 >= lambda2 and
// lambda1 >= d3. The value is identically zero for q outside the window
// [alpha_11, lambda1 - lambda2 + alpha_22].
cplx gl3c_whittaker_k2(const ComplexRep& rep, int eps,
                       std::array<int, 2> lambda, int q, TorusPoint y);
RadialFamily gl3c_k2_family(const ComplexRep& rep, int eps,
                            std::array<int, 2> lambda, int q,
                            Mb2Options opt = {});

// ---------------------------------------------------------------------------
// Invariant pairings
// ---------------------------------------------------------------------------

// R: <v_{lambda,q}, v_{lambda,q'}> = delta_{0, q+q'}.
// C: <v_{lambda,q}, v_{lambda~,q'}>
//      = (-1)^{lambda1-q} / binom(lambda1-lambda2, q) delta_{l1-l2, q+q'}.
double pairing(Field field, std::array<int, 2> lambda, int q, int qp);

// Exact binomial coefficient as a double; zero outside 0 <= k <= n.
double binom(int n, int k);

} // namespace arwhit

#endif
