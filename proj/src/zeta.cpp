#include "arwhit/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "arwhit/contour.hpp"
#include "arwhit/errors.hpp"
#include "arwhit/gammakernel.hpp"

namespace arwhit {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Table options for the GL(3, C) radial families. The complex pairing
// integrates the tables far into the large-y tails where their values are
// cancellation-limited, so the contour step and truncation must be tightened
// well past the pointwise-evaluation defaults: step 0.05 pushes trapezoid
// aliasing below 1e-27 and the 1e-18 boundary cut (reached at half-height
// 14 with the e^{-pi |t|} gamma decay) keeps the truncation noise floor
// below the integrand mass at the grid edges.
constexpr Mb2Options kC32Tables{0.05, 14.0, 1e-18};

void require(bool cond, const char* msg) {
    if (!cond) throw ConstraintViolation(msg);
}

cplx cpow(double y, cplx p) { return std::exp(p * std::log(y)); }

double minus1pow(long n) { return (n % 2) ? -1.0 : 1.0; }

// (eps * i)^n for integer n of either sign.
cplx eps_i_pow(int eps, long n) {
    const int m = int(((n % 4) + 4) % 4);
    cplx r = 1.0;
    const cplx b(0.0, double(eps));
    for (int k = 0; k < m; ++k) r *= b;
    return r;
}

double fact(int n) {
    require(n >= 0, "zeta: factorial of a negative integer");
    return std::tgamma(double(n) + 1.0);
}

void check_grid(const LogGrid& g) {
    require(g.nodes >= 2 && g.u_max > g.u_min,
            "zeta: log grid needs nodes >= 2 and u_max > u_min");
}

WeilSummand gl1_character(cplx nu, int k) {
    return {WeilSummand::Type::character, nu, k};
}

// y2 exponent carried by a GL(2, R) radial value at diag(y1 y2, y2).
cplx y2_exponent(const RealGL2Rep& rep) {
    return rep.kind == RealGL2Rep::Kind::ps ? rep.nu1 + rep.nu2 : 2.0 * rep.nu;
}

void guard_tail(double edge, double total, double tail_tol, const char* what) {
    if (total > 0.0 && edge > tail_tol * total)
        throw ConvergenceRangeError(std::string(what) +
                                    ": integrand not negligible at the grid "
                                    "boundary; widen the log grid or move s "
                                    "into the convergence range");
}

} // namespace

// ---------------------------------------------------------------------------
// Radial quadrature
// ---------------------------------------------------------------------------

std::vector<double> grid_points(const LogGrid& g) {
    check_grid(g);
    const double h = (g.u_max - g.u_min) / double(g.nodes - 1);
    std::vector<double> ys(g.nodes);
    for (int i = 0; i < g.nodes; ++i) ys[i] = std::exp(g.u_min + h * i);
    return ys;
}

std::vector<double> grid_weights(const LogGrid& g) {
    check_grid(g);
    const double h = (g.u_max - g.u_min) / double(g.nodes - 1);
    std::vector<double> ws(g.nodes, h);
    ws.front() = 0.5 * h;
    ws.back() = 0.5 * h;
    return ws;
}

cplx radial_integral_1d(const std::function<cplx(double)>& f, const LogGrid& g,
                        double tail_tol) {
    const auto ys = grid_points(g);
    const auto ws = grid_weights(g);
    cplx acc = 0.0;
    double total = 0.0, edge = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
        const cplx term = ws[i] * f(ys[i]);
        acc += term;
        const double a = std::abs(term);
        total += a;
        if (i == 0 || i + 1 == ys.size()) edge += a;
    }
    guard_tail(edge, total, tail_tol, "radial_integral_1d");
    return acc;
}

cplx radial_integral_2d(const std::function<cplx(double, double)>& f,
                        const LogGrid& g1, const LogGrid& g2, double tail_tol) {
    const auto y1s = grid_points(g1), y2s = grid_points(g2);
    const auto w1 = grid_weights(g1), w2 = grid_weights(g2);
    cplx acc = 0.0;
    double total = 0.0, edge = 0.0;
    for (size_t i = 0; i < y1s.size(); ++i) {
        for (size_t j = 0; j < y2s.size(); ++j) {
            const cplx term = w1[i] * w2[j] * f(y1s[i], y2s[j]);
            acc += term;
            const double a = std::abs(term);
            total += a;
            if (i == 0 || i + 1 == y1s.size() || j == 0 || j + 1 == y2s.size())
                edge += a;
        }
    }
    guard_tail(edge, total, tail_tol, "radial_integral_2d");
    return acc;
}

// ---------------------------------------------------------------------------
// GL(2) x GL(1)
// ---------------------------------------------------------------------------

cplx zeta_gl2_gl1(const RealGL2Rep& rep, cplx nu_p, int delta_p, int eps,
                  cplx s, const ZetaConfig& cfg) {
    require(delta_p == 0 || delta_p == 1, "zeta_gl2_gl1: delta' must be 0 or 1");
    require(eps == 1 || eps == -1, "zeta_gl2_gl1: eps must be +-1");
    auto w = [&](int q, double y1) {
        return gl2r_whittaker(rep, eps, q, {y1, 1.0});
    };
    // Sign-averaged radial integrand of the pairing, case-split on how the
    // parity data of pi lines up with delta'.
    std::function<cplx(double)> a;
    if (rep.kind == RealGL2Rep::Kind::ds) {
        a = [&](double y1) { return w(eps * rep.kappa, y1); };
    } else if (rep.delta1 == rep.delta2) {
        if (rep.delta2 == delta_p) {
            a = [&](double y1) { return 2.0 * w(0, y1); };
        } else {
            a = [&](double y1) { return 2.0 * y1 * w(0, y1); };
        }
    } else {
        const double sign = minus1pow(delta_p);
        a = [&](double y1) { return w(eps, y1) + sign * w(-eps, y1); };
    }
    return radial_integral_1d(
        [&](double y1) { return a(y1) * cpow(y1, s + nu_p - 0.5); }, cfg.grid1,
        cfg.tail_tol);
}

cplx zeta_gl2_gl1(const ComplexRep& rep, cplx nu_p, int d_p, int eps, cplx s,
                  const ZetaConfig& cfg) {
    require(rep.n == 2, "zeta_gl2_gl1: complex representation must be GL(2)");
    require(eps == 1 || eps == -1, "zeta_gl2_gl1: eps must be +-1");
    const int d1 = rep.chars[0].second, d2 = rep.chars[1].second;
    // Smallest K2-type lambda = (d1 + l0, d2 - l0) whose index range contains
    // the unitary-angle average q = lambda1 + d'.
    const int l0 = std::max({0, -d1 - d_p, d2 + d_p});
    const int q = d1 + l0 + d_p;
    return radial_integral_1d(
        [&](double y1) {
            return 2.0 * gl2c_whittaker(rep, eps, l0, q, {y1, 1.0}) *
                   cpow(y1, 2.0 * (s + nu_p) - 1.0);
        },
        cfg.grid1, cfg.tail_tol);
}

WeilParam gl1_twist(const RealGL2Rep& rep, cplx nu_p, int delta_p) {
    return tensor(weil_param(rep),
                  WeilParam{Field::R, {gl1_character(nu_p, delta_p)}});
}

WeilParam gl1_twist(const ComplexRep& rep, cplx nu_p, int d_p) {
    return tensor(weil_param(rep),
                  WeilParam{Field::C, {gl1_character(nu_p, d_p)}});
}

// ---------------------------------------------------------------------------
// GL(2) x GL(2)
// ---------------------------------------------------------------------------

cplx zeta_gl2_gl2(const RealGL2Rep& rep, const RealGL2Rep& rep_p, int eps,
                  cplx s, const ZetaConfig& cfg) {
    require(eps == 1 || eps == -1, "zeta_gl2_gl2: eps must be +-1");
    using K = RealGL2Rep::Kind;
    // The integral is symmetric in the two Whittaker functions once the
    // additive character is flipped, so normalize the case order.
    const bool swap_ps =
        rep.kind == K::ps && rep_p.kind == K::ps &&
        ((rep.delta1 == rep.delta2 && rep_p.delta1 != rep_p.delta2) ||
         (rep.delta1 == rep.delta2 && rep_p.delta1 == rep_p.delta2 &&
          rep.delta2 < rep_p.delta2));
    if ((rep.kind == K::ds && rep_p.kind == K::ps) ||
        (rep.kind == K::ds && rep_p.kind == K::ds && rep.kappa < rep_p.kappa) ||
        swap_ps)
        return zeta_gl2_gl2(rep_p, rep, -eps, s, cfg);

    auto w = [&](int q, double y1) {
        return gl2r_whittaker(rep, eps, q, {y1, 1.0});
    };
    auto wp = [&](int q, double y1) {
        return gl2r_whittaker(rep_p, -eps, q, {y1, 1.0});
    };

    // Reduced radial form: Z = pref * int A(y1) y1^{s-1} dy1/y1
    //                               * int e^{-pi y2^2} y2^{2s+m+p+p'} dy2/y2.
    std::function<cplx(double)> a;
    int m = 0;
    double pref = 2.0;
    if (rep.kind == K::ps && rep_p.kind == K::ps) {
        const bool dd = rep.delta1 != rep.delta2;
        const bool ddp = rep_p.delta1 != rep_p.delta2;
        if (!dd && !ddp) {
            if (rep.delta2 == rep_p.delta2) {
                pref = 4.0;
                a = [&](double y1) { return w(0, y1) * wp(0, y1); };
            } else {
                m = 2;
                a = [&](double y1) { return 2.0 * y1 * w(0, y1) * wp(0, y1); };
            }
        } else if (dd && !ddp) {
            m = 1;
            const double sign = minus1pow(rep_p.delta2);
            const double phase = rep_p.delta2 ? double(eps) : 1.0;
            a = [&, sign, phase](double y1) {
                return (w(1, y1) + sign * w(-1, y1)) * phase * wp(0, y1);
            };
        } else {
            a = [&](double y1) {
                return w(1, y1) * wp(-1, y1) + w(-1, y1) * wp(1, y1);
            };
        }
    } else if (rep.kind == K::ps && rep_p.kind == K::ds) {
        const int kp = rep_p.kappa;
        if (rep.delta1 == rep.delta2) {
            m = kp;
            const double sign = minus1pow(rep.delta2);
            const double phase = rep.delta2 ? double(eps) : 1.0;
            a = [&, sign, phase, kp](double y1) {
                return phase * w(0, y1) *
                       (wp(-kp, y1) + sign * wp(kp, y1));
            };
        } else {
            m = kp - 1;
            a = [&, kp](double y1) {
                return w(1, y1) * wp(-kp, y1) + w(-1, y1) * wp(kp, y1);
            };
        }
    } else {
        const int k = rep.kappa, kp = rep_p.kappa;
        m = k - kp;
        pref = std::ldexp(1.0, kp); // 2^{kappa'}
        a = [&, k, kp](double y1) {
            return w(k, y1) * wp(-kp, y1) + w(-k, y1) * wp(kp, y1);
        };
    }

    const cplx i1 = radial_integral_1d(
        [&](double y1) { return a(y1) * cpow(y1, s - 1.0); }, cfg.grid1,
        cfg.tail_tol);
    const cplx texp = 2.0 * s + double(m) + y2_exponent(rep) + y2_exponent(rep_p);
    const cplx i2 = radial_integral_1d(
        [&](double y2) {
            return std::exp(-kPi * y2 * y2) * cpow(y2, texp);
        },
        cfg.grid2, cfg.tail_tol);
    return pref * i1 * i2;
}

namespace {

// Index bookkeeping shared by the complex GL(2) x GL(2) value and constant:
// lambda = (d1 + l0, d2 - l0), a_i = max(0, -(lambda_i + d'_{3-i})),
// b_i = max(0, lambda_i + d'_{3-i}).
struct C22Data {
    int l0, lambda1, lambda2, a1, a2, b1, b2, d1p, d2p;
};

C22Data c22_data(const ComplexRep& rep, const ComplexRep& rep_p) {
    require(rep.n == 2 && rep_p.n == 2,
            "zeta_gl2_gl2: complex representations must be GL(2)");
    C22Data d{};
    const int d1 = rep.chars[0].second, d2 = rep.chars[1].second;
    d.d1p = rep_p.chars[0].second;
    d.d2p = rep_p.chars[1].second;
    d.l0 = std::max({0, -d1 - d.d1p, d2 + d.d2p});
    d.lambda1 = d1 + d.l0;
    d.lambda2 = d2 - d.l0;
    d.a1 = std::max(0, -(d.lambda1 + d.d2p));
    d.a2 = std::max(0, -(d.lambda2 + d.d1p));
    d.b1 = std::max(0, d.lambda1 + d.d2p);
    d.b2 = std::max(0, d.lambda2 + d.d1p);
    return d;
}

} // namespace

cplx zeta_gl2_gl2(const ComplexRep& rep, const ComplexRep& rep_p, int eps,
                  cplx s, const ZetaConfig& cfg) {
    require(eps == 1 || eps == -1, "zeta_gl2_gl2: eps must be +-1");
    const C22Data d = c22_data(rep, rep_p);
    const int qmax = d.lambda1 + d.d1p;
    const double norm =
        fact(d.lambda1 - d.lambda2) * fact(d.d1p - d.d2p) /
        fact(qmax + d.a1 + d.a2 + 1);
    cplx sum = 0.0;
    for (int q = d.b1; q <= qmax - d.b2; ++q) {
        const double coeff = minus1pow(d.lambda1 + d.d2p - q) * norm /
                             (fact(q - d.b1) * fact(qmax - d.b2 - q));
        const cplx iq = radial_integral_1d(
            [&](double y1) {
                return gl2c_whittaker(rep, eps, d.l0, q, {y1, 1.0}) *
                       gl2c_whittaker(rep_p, -eps, 0, qmax - q, {y1, 1.0}) *
                       cpow(y1, 2.0 * s - 2.0);
            },
            cfg.grid1, cfg.tail_tol);
        sum += coeff * iq;
    }
    const cplx nusum = rep.chars[0].first + rep.chars[1].first +
                       rep_p.chars[0].first + rep_p.chars[1].first;
    const cplx gc = std::exp(log_gamma_c(
        2.0 * s + nusum + 0.5 * (d.a1 + d.a2 + d.b1 + d.b2)));
    return gc * sum;
}

double c22_constant(const ComplexRep& rep, const ComplexRep& rep_p) {
    const C22Data d = c22_data(rep, rep_p);
    const int qmax = d.lambda1 + d.d1p;
    return minus1pow(d.d2p) * fact(d.lambda1 - d.lambda2) *
           fact(d.d1p - d.d2p) /
           (fact(qmax + d.a1 + d.a2 + 1) * fact(qmax - d.b1 - d.b2));
}

// ---------------------------------------------------------------------------
// GL(3) x GL(2)
// ---------------------------------------------------------------------------

std::array<int, 2> c32_lambda(const ComplexRep& rep3, const ComplexRep& rep2) {
    require(rep3.n == 3 && rep2.n == 2,
            "zeta_gl3_gl2: expected complex GL(3) and GL(2) representations");
    const int d1 = rep3.chars[0].second, d3 = rep3.chars[2].second;
    const int d1p = rep2.chars[0].second, d2p = rep2.chars[1].second;
    const int l0 = std::max({0, -d1 - d1p, d3 + d2p});
    return {-d2p + l0, -d1p - l0};
}

double c32_constant(const ComplexRep& rep3, const ComplexRep& rep2) {
    const auto lambda = c32_lambda(rep3, rep2);
    const int d1 = rep3.chars[0].second, d2 = rep3.chars[1].second,
              d3 = rep3.chars[2].second;
    const int a11 = std::max(0, lambda[0] - d1);
    const int a12 = std::max(0, lambda[1] - d2);
    const int a21 = std::min(0, lambda[0] - d2);
    const int a22 = std::min(0, lambda[1] - d3);
    const int b1 = lambda[0] - a11 - a21;
    const int b2 = lambda[1] - a12 - a22;
    const int n = lambda[0] - lambda[1];
    return 2.0 * fact(n) /
           (double(n + 1) * fact(a11) * fact(-a22) * fact(b1 - d2 - a12) *
            fact(d2 - b2 + a21));
}

Gl3Gl2Engine::Gl3Gl2Engine(const RealGL3Rep& rep3, const RealGL2Rep& rep2,
                           int eps, const ZetaConfig& cfg)
    : field_(Field::R), tail_tol_(cfg.tail_tol) {
    require(eps == 1 || eps == -1, "zeta_gl3_gl2: eps must be +-1");
    lambda_ = gl2r_min_ktype(rep2);
    constant_ = 1.0;
    tensor_ = tensor(weil_param(rep3), weil_param(rep2));
    y1s_ = grid_points(cfg.grid1);
    y2s_ = grid_points(cfg.grid2);
    w1_ = grid_weights(cfg.grid1);
    w2_ = grid_weights(cfg.grid2);
    p2_ = y2_exponent(rep2);
    s_shift1_ = 1.0;
    s_shift0_ = -1.5;
    t_shift1_ = 2.0;
    t_shift0_ = -1.0 + p2_;
    for (int q : ktype_indices_r(lambda_)) {
        Slice sl;
        sl.weight = 1.0;
        sl.f3 = gl3r_k2_family(rep3, eps, lambda_, q).grid(y1s_, y2s_);
        sl.b2.resize(y1s_.size());
        for (size_t i = 0; i < y1s_.size(); ++i)
            sl.b2[i] = gl2r_whittaker(rep2, -eps, -q, {y1s_[i], 1.0});
        slices_.push_back(std::move(sl));
    }
}

Gl3Gl2Engine::Gl3Gl2Engine(const ComplexRep& rep3, const ComplexRep& rep2,
                           int eps, const ZetaConfig& cfg)
    : field_(Field::C), tail_tol_(cfg.tail_tol) {
    require(eps == 1 || eps == -1, "zeta_gl3_gl2: eps must be +-1");
    lambda_ = c32_lambda(rep3, rep2);
    constant_ = c32_constant(rep3, rep2);
    tensor_ = tensor(weil_param(rep3), weil_param(rep2));
    y1s_ = grid_points(cfg.grid1);
    y2s_ = grid_points(cfg.grid2);
    w1_ = grid_weights(cfg.grid1);
    w2_ = grid_weights(cfg.grid2);
    p2_ = 2.0 * (rep2.chars[0].first + rep2.chars[1].first);
    s_shift1_ = 2.0;
    s_shift0_ = -3.0;
    t_shift1_ = 4.0;
    t_shift0_ = -2.0 + p2_;
    const int n = lambda_[0] - lambda_[1];
    const int l0 = std::max(
        {0, -rep3.chars[0].second - rep2.chars[0].second,
         rep3.chars[2].second + rep2.chars[1].second});
    for (int q = 0; q <= n; ++q) {
        Slice sl;
        sl.weight = minus1pow(lambda_[0] - q) * binom(n, q);
        sl.f3 = gl3c_k2_family(rep3, eps, lambda_, q, kC32Tables)
                    .grid(y1s_, y2s_);
        sl.b2.resize(y1s_.size());
        for (size_t i = 0; i < y1s_.size(); ++i)
            sl.b2[i] = gl2c_whittaker(rep2, -eps, l0, n - q, {y1s_[i], 1.0});
        slices_.push_back(std::move(sl));
    }
}

cplx Gl3Gl2Engine::value(cplx s) const {
    const size_t ni = y1s_.size(), nj = y2s_.size();
    std::vector<cplx> py1(ni), py2(nj);
    for (size_t i = 0; i < ni; ++i)
        py1[i] = cpow(y1s_[i], s * s_shift1_ + s_shift0_);
    for (size_t j = 0; j < nj; ++j)
        py2[j] = cpow(y2s_[j], s * t_shift1_ + t_shift0_);
    cplx acc = 0.0;
    double total = 0.0, edge = 0.0;
    for (const auto& sl : slices_) {
        for (size_t i = 0; i < ni; ++i) {
            const cplx fi = sl.weight * w1_[i] * sl.b2[i] * py1[i];
            for (size_t j = 0; j < nj; ++j) {
                const cplx term = fi * w2_[j] * py2[j] * sl.f3[i * nj + j];
                acc += term;
                const double a = std::abs(term);
                total += a;
                if (i == 0 || i + 1 == ni || j == 0 || j + 1 == nj) edge += a;
            }
        }
    }
    guard_tail(edge, total, tail_tol_, "zeta_gl3_gl2");
    const int dim = field_ == Field::R ? (lambda_[0] == 0 ? 1 : 2)
                                       : lambda_[0] - lambda_[1] + 1;
    return 4.0 * acc / double(dim);
}

cplx Gl3Gl2Engine::constant() const { return constant_; }

cplx Gl3Gl2Engine::expected(cplx s) const {
    return constant_ * l_factor(tensor_, s);
}

cplx zeta_gl3_gl2(const RealGL3Rep& rep3, const RealGL2Rep& rep2, int eps,
                  std::array<int, 2> lambda_v, int q_v,
                  std::array<int, 2> lambda_vp, int q_vp, cplx s,
                  const ZetaConfig& cfg) {
    require(lambda_vp == gl2r_min_ktype(rep2),
            "zeta_gl3_gl2: the GL(2) family is only available at its minimal "
            "K2-type");
    if (lambda_v != lambda_vp) return 0.0; // Schur orthogonality
    const double pair = pairing(Field::R, lambda_v, q_v, q_vp);
    if (pair == 0.0) return 0.0;
    return pair * Gl3Gl2Engine(rep3, rep2, eps, cfg).value(s);
}

cplx zeta_gl3_gl2(const ComplexRep& rep3, const ComplexRep& rep2, int eps,
                  std::array<int, 2> lambda_v, int q_v,
                  std::array<int, 2> lambda_vp, int q_vp, cplx s,
                  const ZetaConfig& cfg) {
    const auto lambda = c32_lambda(rep3, rep2);
    const std::array<int, 2> tilde{-lambda[1], -lambda[0]};
    require(lambda_vp == tilde,
            "zeta_gl3_gl2: the GL(2) family is only available at the "
            "theorem-matched contragredient K2-type");
    if (lambda_v != lambda) return 0.0; // Schur orthogonality
    const double pair = pairing(Field::C, lambda_v, q_v, q_vp);
    if (pair == 0.0) return 0.0;
    return pair * Gl3Gl2Engine(rep3, rep2, eps, cfg).value(s);
}

// ---------------------------------------------------------------------------
// Suite verification
// ---------------------------------------------------------------------------

std::vector<ZetaReport> verify_zeta(const std::vector<ZetaCase>& suite,
                                    const ZetaConfig& cfg) {
    std::vector<ZetaReport> out;
    for (const auto& c : suite) {
        // Per-s evaluator and expectation, bound once per case so the
        // GL(3) x GL(2) engines precompute their grids a single time.
        std::function<cplx(cplx)> zval, zexp;
        cplx constant = 1.0;
        std::string setup_error;
        try {
            if (c.pairing == "r21") {
                const auto& rep = std::get<RealGL2Rep>(c.rep);
                const WeilParam tw = gl1_twist(rep, c.nu_p, c.k_p);
                zval = [&c, rep, cfg](cplx s) {
                    return zeta_gl2_gl1(rep, c.nu_p, c.k_p, c.eps, s, cfg);
                };
                zexp = [tw](cplx s) { return l_factor(tw, s); };
            } else if (c.pairing == "c21") {
                const auto& rep = std::get<ComplexRep>(c.rep);
                const WeilParam tw = gl1_twist(rep, c.nu_p, c.k_p);
                constant = eps_i_pow(c.eps, -c.k_p);
                zval = [&c, rep, cfg](cplx s) {
                    return zeta_gl2_gl1(rep, c.nu_p, c.k_p, c.eps, s, cfg);
                };
                zexp = [tw, constant](cplx s) {
                    return constant * l_factor(tw, s);
                };
            } else if (c.pairing == "r22") {
                const auto& rep = std::get<RealGL2Rep>(c.rep);
                const auto& rep_p = std::get<RealGL2Rep>(c.rep_p);
                const WeilParam tw = tensor(weil_param(rep), weil_param(rep_p));
                zval = [&c, rep, rep_p, cfg](cplx s) {
                    return zeta_gl2_gl2(rep, rep_p, c.eps, s, cfg);
                };
                zexp = [tw](cplx s) { return l_factor(tw, s); };
            } else if (c.pairing == "c22") {
                const auto& rep = std::get<ComplexRep>(c.rep);
                const auto& rep_p = std::get<ComplexRep>(c.rep_p);
                const WeilParam tw = tensor(weil_param(rep), weil_param(rep_p));
                constant = c22_constant(rep, rep_p);
                zval = [&c, rep, rep_p, cfg](cplx s) {
                    return zeta_gl2_gl2(rep, rep_p, c.eps, s, cfg);
                };
                zexp = [tw, constant](cplx s) {
                    return constant * l_factor(tw, s);
                };
            } else if (c.pairing == "r32") {
                const auto& rep = std::get<RealGL3Rep>(c.rep);
                const auto& rep_p = std::get<RealGL2Rep>(c.rep_p);
                auto eng = std::make_shared<Gl3Gl2Engine>(rep, rep_p, c.eps,
                                                          cfg);
                constant = eng->constant();
                zval = [eng](cplx s) { return eng->value(s); };
                zexp = [eng](cplx s) { return eng->expected(s); };
            } else if (c.pairing == "c32") {
                const auto& rep = std::get<ComplexRep>(c.rep);
                const auto& rep_p = std::get<ComplexRep>(c.rep_p);
                auto eng = std::make_shared<Gl3Gl2Engine>(rep, rep_p, c.eps,
                                                          cfg);
                constant = eng->constant();
                zval = [eng](cplx s) { return eng->value(s); };
                zexp = [eng](cplx s) { return eng->expected(s); };
            } else {
                throw ConstraintViolation("verify_zeta: unknown pairing id");
            }
        } catch (const std::bad_variant_access&) {
            setup_error = "verify_zeta: representation kind does not match "
                          "the pairing";
        } catch (const NumericError& e) {
            setup_error = e.what();
        }
        for (const cplx& s : c.s_samples) {
            ZetaReport r;
            r.pairing = c.pairing;
            r.label = c.label;
            r.s = s;
            r.constant_used = constant;
            if (!setup_error.empty()) {
                r.error = setup_error;
                out.push_back(std::move(r));
                continue;
            }
            try {
                r.z_value = zval(s);
                r.expected = zexp(s);
                r.rel_error = rel_error_of(r.z_value, r.expected);
                r.pass = r.rel_error <= cfg.tol;
            } catch (const NumericError& e) {
                r.error = e.what();
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace arwhit
