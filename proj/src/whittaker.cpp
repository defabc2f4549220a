#include "arwhit/whittaker.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace arwhit {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Contour distance above the rightmost pole for the 2D tables. Evaluating a
// table at small y costs roughly y^{-k * margin} in relative precision (the
// sum cancels down from the y^{-k c} term scale to the y^{-k t_pole} value),
// while the trapezoid aliasing error is exp(-2 pi margin / step). With
// step 0.1, a margin of 0.5 keeps aliasing near 2e-14 yet preserves ~9
// digits even at y = e^{-20}.
constexpr double kGl3Margin = 0.5;

void require(bool cond, const char* msg) {
    if (!cond) throw ConstraintViolation(msg);
}

double minus1pow(long n) { return (n % 2 + 2) % 2 == 0 ? 1.0 : -1.0; }

// (eps * i)^n for eps in {+1, -1} and any integer n.
cplx eps_ipow(int eps, long n) {
    double e = eps == 1 ? 1.0 : minus1pow(n);
    switch ((n % 4 + 4) % 4) {
        case 0: return cplx(e, 0.0);
        case 1: return cplx(0.0, e);
        case 2: return cplx(-e, 0.0);
        default: return cplx(0.0, -e);
    }
}

cplx cpow(double y, cplx a) { return std::exp(a * std::log(y)); }

int sgn(int q) { return q < 0 ? -1 : 1; } // sgn(0) = 1 by the basis convention

double eps_pow(int eps, long n) { return eps == 1 ? 1.0 : minus1pow(n); }

// Extended-precision Gamma_R / Gamma_C logs for building the 2D table
// weights; the table accumulates in long double, so the node values must be
// computed to better than double precision too.
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kLog2PiL = 1.83787706640934548356065947281123527L;

lcplx lgr_ld(lcplx z) { return log_gamma_ld(0.5L * z) - 0.5L * z * std::log(kPiL); }

lcplx lgc_ld(lcplx z) {
    return std::log(2.0L) - z * kLog2PiL + log_gamma_ld(z);
}

} // namespace

double binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0.0;
    k = std::min(k, n - k);
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * double(n - k + i) / double(i);
    return b;
}

// ---------------------------------------------------------------------------
// Mb2Table
// ---------------------------------------------------------------------------

Mb2Table::Mb2Table(const std::function<lcplx(lcplx, lcplx)>& log_f, double c1,
                   double c2, double power_scale, double step,
                   double half_height, double boundary_tol)
    : c1_(c1), c2_(c2), k_(power_scale), h_(step) {
    double height = half_height;
    const long double node_factor = static_cast<long double>(h_) / (2.0L * kPiL);
    for (;;) {
        n1_ = static_cast<int>(std::lround(height / h_));
        n2_ = n1_;
        const int m1 = 2 * n1_ + 1, m2 = 2 * n2_ + 1;
        g_.assign(static_cast<size_t>(m1) * m2, lcplx(0.0L));
        double gmax = 0.0, bmax = 0.0;
        for (int a = 0; a < m1; ++a) {
            lcplx t1(c1_, h_ * (a - n1_));
            for (int b = 0; b < m2; ++b) {
                lcplx t2(c2_, h_ * (b - n2_));
                lcplx w = std::exp(log_f(t1, t2)) * (node_factor * node_factor);
                g_[static_cast<size_t>(a) * m2 + b] = w;
                double aw = static_cast<double>(std::abs(w));
                gmax = std::max(gmax, aw);
                if (a == 0 || b == 0 || a == m1 - 1 || b == m2 - 1)
                    bmax = std::max(bmax, aw);
            }
        }
        if (bmax <= boundary_tol * gmax) break;
        if (height >= 80.0)
            throw QuadratureNotConverged(
                "Mb2Table: integrand tail did not decay below tolerance");
        height *= 2.0;
    }
}

std::vector<lcplx> Mb2Table::axis_powers(double y, double c, int n) const {
    // p[a] = y^{-k (c + i h (a - n))}
    std::vector<lcplx> p(2 * n + 1);
    const long double ly = std::log(static_cast<long double>(y));
    const long double base = std::exp(-static_cast<long double>(k_ * c) * ly);
    const long double phase = -static_cast<long double>(k_ * h_) * ly;
    for (int a = 0; a <= 2 * n; ++a)
        p[a] = base * std::polar(1.0L, phase * (a - n));
    return p;
}

cplx Mb2Table::value(double y1, double y2) const {
    require(y1 > 0.0 && y2 > 0.0, "Mb2Table: torus coordinates must be positive");
    const auto p1 = axis_powers(y1, c1_, n1_);
    const auto p2 = axis_powers(y2, c2_, n2_);
    const int m2 = 2 * n2_ + 1;
    lcplx sum = 0.0L;
    for (int a = 0; a < 2 * n1_ + 1; ++a) {
        lcplx row = 0.0L;
        const lcplx* grow = g_.data() + static_cast<size_t>(a) * m2;
        for (int b = 0; b < m2; ++b) row += grow[b] * p2[b];
        sum += p1[a] * row;
    }
    return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

std::vector<cplx> Mb2Table::grid(const std::vector<double>& y1s,
                                 const std::vector<double>& y2s) const {
    const int m1 = 2 * n1_ + 1, m2 = 2 * n2_ + 1;
    const size_t ni = y1s.size(), nj = y2s.size();
    // P2[b][j]
    std::vector<lcplx> p2(static_cast<size_t>(m2) * nj);
    for (size_t j = 0; j < nj; ++j) {
        require(y2s[j] > 0.0, "Mb2Table: torus coordinates must be positive");
        auto col = axis_powers(y2s[j], c2_, n2_);
        for (int b = 0; b < m2; ++b) p2[static_cast<size_t>(b) * nj + j] = col[b];
    }
    // B[a][j] = sum_b g[a][b] p2[b][j]
    std::vector<lcplx> bmat(static_cast<size_t>(m1) * nj, lcplx(0.0L));
    for (int a = 0; a < m1; ++a) {
        const lcplx* grow = g_.data() + static_cast<size_t>(a) * m2;
        lcplx* brow = bmat.data() + static_cast<size_t>(a) * nj;
        for (int b = 0; b < m2; ++b) {
            const lcplx gv = grow[b];
            const lcplx* prow = p2.data() + static_cast<size_t>(b) * nj;
            for (size_t j = 0; j < nj; ++j) brow[j] += gv * prow[j];
        }
    }
    // out[i][j] = sum_a p1[i][a] B[a][j]
    std::vector<lcplx> acc(nj);
    std::vector<cplx> out(ni * nj, cplx(0.0));
    for (size_t i = 0; i < ni; ++i) {
        require(y1s[i] > 0.0, "Mb2Table: torus coordinates must be positive");
        auto row = axis_powers(y1s[i], c1_, n1_);
        std::fill(acc.begin(), acc.end(), lcplx(0.0L));
        for (int a = 0; a < m1; ++a) {
            const lcplx pv = row[a];
            const lcplx* brow = bmat.data() + static_cast<size_t>(a) * nj;
            for (size_t j = 0; j < nj; ++j) acc[j] += pv * brow[j];
        }
        cplx* orow = out.data() + i * nj;
        for (size_t j = 0; j < nj; ++j)
            orow[j] = cplx(static_cast<double>(acc[j].real()),
                           static_cast<double>(acc[j].imag()));
    }
    return out;
}

cplx RadialFamily::value(TorusPoint y) const {
    cplx sum = 0.0;
    for (const auto& t : terms_)
        sum += t.coeff * cpow(y.y1, t.p1) * cpow(y.y2, t.p2) *
               t.table->value(y.y1, y.y2);
    return sum;
}

std::vector<cplx> RadialFamily::grid(const std::vector<double>& y1s,
                                     const std::vector<double>& y2s) const {
    std::vector<cplx> out(y1s.size() * y2s.size(), cplx(0.0));
    for (const auto& t : terms_) {
        auto vals = t.table->grid(y1s, y2s);
        for (size_t i = 0; i < y1s.size(); ++i) {
            const cplx fi = t.coeff * cpow(y1s[i], t.p1);
            for (size_t j = 0; j < y2s.size(); ++j)
                out[i * y2s.size() + j] +=
                    fi * cpow(y2s[j], t.p2) * vals[i * y2s.size() + j];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// GL(2, R)
// ---------------------------------------------------------------------------

std::array<int, 2> gl2r_min_ktype(const RealGL2Rep& rep) {
    if (rep.kind == RealGL2Rep::Kind::ps)
        return {rep.delta1 - rep.delta2, rep.delta2};
    return {rep.kappa, 0};
}

std::vector<int> ktype_indices_r(std::array<int, 2> lambda) {
    require(lambda[0] >= 0, "ktype_indices_r: lambda1 must be >= 0");
    if (lambda[0] == 0) return {0};
    return {lambda[0], -lambda[0]};
}

cplx gl2r_whittaker(const RealGL2Rep& rep, int eps, int q, TorusPoint y,
                    Gl2Method method) {
    require(eps == 1 || eps == -1, "gl2r_whittaker: eps must be +-1");
    require(y.y1 > 0.0 && y.y2 > 0.0, "gl2r_whittaker: y must be positive");
    if (rep.kind == RealGL2Rep::Kind::ds) {
        require(std::abs(q) == rep.kappa,
                "gl2r_whittaker: index must be +-kappa for a discrete series");
        if (q == -eps * rep.kappa) return 0.0;
        if (method == Gl2Method::closed_form) {
            return 2.0 * cpow(y.y1, rep.nu + 0.5 * rep.kappa) *
                   cpow(y.y2, 2.0 * rep.nu) * std::exp(-2.0 * kPi * y.y1);
        }
        const cplx a = rep.nu + 0.5 * (rep.kappa - 1.0);
        VerticalContour contour{-a.real() + 1.0, 16.0, 0.1};
        cplx mb = mb_integral_1d_log(
            [&](cplx t) { return log_gamma_c(t + a) - t * std::log(y.y1); },
            contour);
        return std::sqrt(y.y1) * cpow(y.y2, 2.0 * rep.nu) * mb;
    }
    const int dd = rep.delta1 - rep.delta2;
    if (dd == 0) require(q == 0, "gl2r_whittaker: index must be 0 here");
    else require(std::abs(q) == 1, "gl2r_whittaker: index must be +-1 here");
    const cplx nu1 = rep.nu1, nu2 = rep.nu2;
    if (method == Gl2Method::closed_form) {
        const double z = 2.0 * kPi * y.y1;
        cplx bes;
        if (dd == 0) {
            bes = bessel_k(0.5 * (nu1 - nu2), z, BesselMethod::integral);
        } else {
            bes = bessel_k(0.5 * (nu1 - nu2 + 1.0), z, BesselMethod::integral) +
                  double(eps * q) *
                      bessel_k(0.5 * (nu1 - nu2 - 1.0), z, BesselMethod::integral);
        }
        return 2.0 * cpow(y.y1, 0.5 * (nu1 + nu2 + double(1 + dd))) *
               cpow(y.y2, nu1 + nu2) * bes;
    }
    const double c = std::max(-nu1.real(), -nu2.real()) + 1.0;
    VerticalContour contour{c, 16.0, 0.1};
    const double ly = std::log(y.y1);
    cplx mb = mb_integral_1d(
        [&](cplx t) {
            cplx u = std::exp(log_gamma_r(t + nu1 + double(dd)) +
                              log_gamma_r(t + nu2) - t * ly);
            if (dd == 0) return u;
            cplx v = std::exp(log_gamma_r(t + nu1) +
                              log_gamma_r(t + nu2 + double(dd)) - t * ly);
            return u + double(eps * q) * v;
        },
        contour);
    return 0.5 * std::sqrt(y.y1) * cpow(y.y2, nu1 + nu2) * mb;
}

cplx gl2r_mb_family(const RealGL2Rep& rep, int q, double y1) {
    require(rep.kind == RealGL2Rep::Kind::ps,
            "gl2r_mb_family: principal series only");
    require(y1 > 0.0, "gl2r_mb_family: y1 must be positive");
    const int dd = rep.delta1 - rep.delta2;
    require((q - dd) % 2 == 0, "gl2r_mb_family: index parity mismatch");
    const cplx nu1 = rep.nu1, nu2 = rep.nu2;
    const cplx cq = std::exp(log_gamma_r(nu1 - nu2 + 1.0 + double(dd)) -
                             log_gamma_r(nu1 - nu2 + 1.0 + double(q)));
    const double c =
        std::max({-nu1.real(), -nu2.real(),
                  0.5 * (q - 1.0 - nu1.real() - nu2.real())}) + 1.0;
    VerticalContour contour{c, 16.0, 0.1};
    const double ly = std::log(y1);
    cplx mb = mb_integral_1d_log(
        [&](cplx s) {
            return log_gamma_c(s + nu1) + log_gamma_c(s + nu2) -
                   log_gamma_r(2.0 * s + nu1 + nu2 + 1.0 - double(q)) - s * ly;
        },
        contour);
    return cq * 0.5 * std::exp(2.0 * kPi * y1) * mb;
}

// ---------------------------------------------------------------------------
// GL(2, C)
// ---------------------------------------------------------------------------

cplx psi_pair(cplx a1, cplx a2, double y1) {
    require(y1 > 0.0, "psi_pair: y1 must be positive");
    return 8.0 * cpow(y1, a1 + a2) *
           bessel_k(a1 - a2, 4.0 * kPi * y1, BesselMethod::integral);
}

namespace {

// One of the two equivalent finite-sum expressions, together with the
// absolute mass of its summands. The mass bounds the roundoff of the sum,
// so it measures how much cancellation the expression suffered at this
// point (deep in the y1 -> 0 tail one of the two sums can cancel by many
// orders of magnitude).
struct Gl2cSum {
    cplx value;
    double mass;
};

Gl2cSum gl2c_sum(const ComplexRep& rep, int eps, int l, int q, TorusPoint y,
                 int expr) {
    require(rep.n == 2, "gl2c_whittaker: GL(2,C) parameter expected");
    require(eps == 1 || eps == -1, "gl2c_whittaker: eps must be +-1");
    require(l >= 0, "gl2c_whittaker: l must be >= 0");
    const int d1 = rep.chars[0].second, d2 = rep.chars[1].second;
    const cplx nu1 = rep.chars[0].first, nu2 = rep.chars[1].first;
    const int l1 = d1 + l, l2 = d2 - l;       // lambda = (d1 + l, d2 - l)
    const int n = l1 - l2;                    // = d1 - d2 + 2l
    require(q >= 0 && q <= n, "gl2c_whittaker: index out of range");
    require(expr == 1 || expr == 2, "gl2c_whittaker: expr must be 1 or 2");
    const cplx pref =
        eps_ipow(eps, l1 - q) * y.y1 * cpow(y.y2, 2.0 * (nu1 + nu2));
    cplx sum = 0.0;
    double mass = 0.0;
    if (expr == 1) {
        for (int i = 0; i <= std::min(q, l); ++i) {
            cplx c = binom(q, i) * pochhammer(double(-l), i) *
                     pochhammer(-nu1 + nu2 - 0.5 * n, i) /
                     (std::pow(2.0 * kPi, i) * pochhammer(double(-n), i));
            cplx term = c * psi_pair(nu1 + 0.5 * (q + l) - double(i),
                                     nu2 + 0.5 * (n - q - l), y.y1);
            sum += term;
            mass += std::abs(term);
        }
    } else {
        for (int i = 0; i <= std::min(n - q, l); ++i) {
            cplx c = binom(n - q, i) * pochhammer(double(-l), i) *
                     pochhammer(-nu2 + nu1 - 0.5 * n, i) /
                     (std::pow(2.0 * kPi, i) * pochhammer(double(-n), i));
            cplx term = c * psi_pair(nu2 + 0.5 * (n - q + l) - double(i),
                                     nu1 + 0.5 * (q - l), y.y1);
            sum += term;
            mass += std::abs(term);
        }
    }
    return {pref * sum, std::abs(pref) * mass};
}

} // namespace

cplx gl2c_whittaker_expr(const ComplexRep& rep, int eps, int l, int q,
                         TorusPoint y, int expr) {
    return gl2c_sum(rep, eps, l, q, y, expr).value;
}

cplx gl2c_whittaker(const ComplexRep& rep, int eps, int l, int q,
                    TorusPoint y) {
    const Gl2cSum s1 = gl2c_sum(rep, eps, l, q, y, 1);
    const Gl2cSum s2 = gl2c_sum(rep, eps, l, q, y, 2);
    const double scale = std::max(std::abs(s1.value), std::abs(s2.value));
    // Tolerate the roundoff floor of whichever expression cancelled harder;
    // beyond that, disagreement means a genuine formula inconsistency.
    const double noise = 1e-12 * (s1.mass + s2.mass);
    if (scale > 1e-300 && std::abs(s1.value - s2.value) > 1e-9 * scale + noise)
        throw ExpressionMismatch(
            "gl2c_whittaker: the two finite-sum expressions disagree");
    return s1.mass <= s2.mass ? s1.value : s2.value;
}

// ---------------------------------------------------------------------------
// GL(3, R)
// ---------------------------------------------------------------------------

std::array<int, 2> gl3r_min_ktype(const RealGL3Rep& rep) {
    if (rep.kind == RealGL3Rep::Kind::ps)
        return {rep.delta[0] - rep.delta[2], rep.delta[1]};
    return {rep.kappa1, rep.delta2};
}

namespace {

RadialFamily::Term gl3r_u_term(const RealGL3Rep& rep, int eps,
                               std::array<int, 3> l, const Mb2Options& opt) {
    require(eps == 1 || eps == -1, "gl3r_whittaker: eps must be +-1");
    const auto mu = gl3r_min_ktype(rep);
    require(l[0] >= 0 && l[1] >= 0 && l[2] >= 0 &&
                l[0] + l[1] + l[2] == mu[0],
            "gl3r_whittaker: l must be a nonnegative triple summing to mu1");
    RadialFamily::Term term;
    term.p1 = 1.0;
    std::function<lcplx(lcplx, lcplx)> log_f;
    double c1, c2;
    if (rep.kind == RealGL3Rep::Kind::ps) {
        const int d2 = rep.delta[1];
        const cplx n1 = rep.nu[0], n2 = rep.nu[1], n3 = rep.nu[2];
        const double a1 = std::abs(rep.delta[0] - rep.delta[1] - l[0]);
        const double b1 = std::abs(rep.delta[1] - rep.delta[2] - l[0]);
        const double a3 = std::abs(rep.delta[0] - rep.delta[1] - l[2]);
        const double b3 = std::abs(rep.delta[1] - rep.delta[2] - l[2]);
        const double el1 = l[0], el3 = l[2];
        term.coeff = 0.25 * eps_pow(eps, d2) * minus1pow(l[0]) *
                     eps_ipow(eps, l[1]);
        term.p2 = 1.0 + n1 + n2 + n3;
        log_f = [=](lcplx t1, lcplx t2) {
            const lcplx m1 = lcplx(n1), m2 = lcplx(n2), m3 = lcplx(n3);
            return lgr_ld(t1 + m2 + (long double)el1) +
                   lgr_ld(t1 + m1 + (long double)a1) +
                   lgr_ld(t1 + m3 + (long double)b1) +
                   lgr_ld(t2 - m2 + (long double)el3) +
                   lgr_ld(t2 - m1 + (long double)a3) +
                   lgr_ld(t2 - m3 + (long double)b3) -
                   lgr_ld(t1 + t2 + (long double)(el1 + el3));
        };
        c1 = std::max({-n2.real() - el1, -n1.real() - a1, -n3.real() - b1}) +
             kGl3Margin;
        c2 = std::max({n2.real() - el3, n1.real() - a3, n3.real() - b3}) +
             kGl3Margin;
    } else {
        const cplx n1 = rep.nu1, n2 = rep.nu2;
        const double hk = 0.5 * (rep.kappa1 - 1.0);
        const double el1 = l[0], el3 = l[2];
        term.coeff = 0.25 * eps_pow(eps, rep.delta2) * minus1pow(l[0]) *
                     eps_ipow(eps, l[1]);
        term.p2 = 1.0 + 2.0 * n1 + n2;
        log_f = [=](lcplx t1, lcplx t2) {
            const lcplx m1 = lcplx(n1), m2 = lcplx(n2);
            return lgc_ld(t1 + m1 + (long double)hk) +
                   lgr_ld(t1 + m2 + (long double)el1) +
                   lgc_ld(t2 - m1 + (long double)hk) +
                   lgr_ld(t2 - m2 + (long double)el3) -
                   lgr_ld(t1 + t2 + (long double)(el1 + el3));
        };
        c1 = std::max(-n1.real() - hk, -n2.real() - el1) + kGl3Margin;
        c2 = std::max(n1.real() - hk, n2.real() - el3) + kGl3Margin;
    }
    term.table = std::make_shared<Mb2Table>(log_f, c1, c2, 1.0, opt.step,
                                            opt.half_height, opt.boundary_tol);
    return term;
}

bool valid_lambda_r(std::array<int, 2> lambda) {
    if (lambda[0] < 0) return false;
    if (lambda[0] == 0) return lambda[1] == 0 || lambda[1] == 1;
    return lambda[1] == 0;
}

} // namespace

RadialFamily gl3r_u_family(const RealGL3Rep& rep, int eps,
                           std::array<int, 3> l, Mb2Options opt) {
    return RadialFamily({gl3r_u_term(rep, eps, l, opt)});
}

cplx gl3r_whittaker(const RealGL3Rep& rep, int eps, std::array<int, 3> l,
                    TorusPoint y, Gl3Method method) {
    require(y.y1 > 0.0 && y.y2 > 0.0, "gl3r_whittaker: y must be positive");
    if (method == Gl3Method::series) {
        require(rep.kind == RealGL3Rep::Kind::ps &&
                    rep.delta[0] == 0 && rep.delta[1] == 0 &&
                    rep.delta[2] == 0 && l == std::array<int, 3>{0, 0, 0},
                "gl3r_whittaker: the series route covers the spherical "
                "principal series only");
        SolParams r{{rep.nu[0], rep.nu[1], rep.nu[2]}};
        return y.y1 * y.y2 * cpow(y.y2, rep.nu[0] + rep.nu[1] + rep.nu[2]) *
               sol_series_sum(r, kPi * y.y1, kPi * y.y2);
    }
    return gl3r_u_family(rep, eps, l).value(y);
}

namespace {

// Builds the case-classified finite combination for the K2-restricted
// GL(3, R) family; u_l tables are shared through the cache.
RadialFamily gl3r_k2_family_cached(
    const RealGL3Rep& rep, int eps, std::array<int, 2> lambda, int q,
    const Mb2Options& opt,
    std::map<std::array<int, 3>, RadialFamily::Term>& cache) {
    require(valid_lambda_r(lambda), "gl3r_whittaker_k2: invalid K2-type");
    const auto qs = ktype_indices_r(lambda);
    require(std::find(qs.begin(), qs.end(), q) != qs.end(),
            "gl3r_whittaker_k2: index out of range");
    const auto mu = gl3r_min_ktype(rep);
    const int mu1 = mu[0], mu2 = mu[1];
    auto u_term = [&](std::array<int, 3> l) {
        auto it = cache.find(l);
        if (it == cache.end())
            it = cache.emplace(l, gl3r_u_term(rep, eps, l, opt)).first;
        return it->second;
    };
    std::vector<RadialFamily::Term> terms;
    const bool in_omega =
        (lambda[0] == 0 && lambda[1] == mu2) ||
        (lambda[0] >= 1 && lambda[1] == 0 && lambda[0] <= mu1);
    if (in_omega) {
        const int aq = std::abs(q);
        const double head =
            eps_pow(eps, lambda[0] + lambda[1]) * minus1pow(lambda[0]);
        for (int j = 0; j <= aq; ++j) {
            auto t = u_term({aq - j, j, mu1 - aq});
            t.coeff *= head * binom(aq, j) *
                       minus1pow(sgn(q) < 0 ? mu2 + aq - j : 0) *
                       eps_ipow(1, j);
            terms.push_back(t);
        }
    } else if (lambda[0] > mu1) {
        const double head = eps_pow(eps, mu1) * minus1pow(mu1);
        for (int j = 0; j <= mu1; ++j) {
            auto t = u_term({mu1 - j, j, 0});
            t.coeff *= head * binom(mu1, j) *
                       minus1pow(sgn(q) < 0 ? mu2 + mu1 - j : 0) *
                       eps_ipow(1, j);
            t.p2 += double(lambda[0] - mu1);
            terms.push_back(t);
        }
    } else if (mu1 > 0) {
        // lambda = (0, 1 - mu2)
        auto t = u_term({1, 0, mu1 - 1});
        t.coeff *= -eps_pow(eps, mu2);
        t.p2 += 1.0;
        terms.push_back(t);
    } else {
        auto t = u_term({0, 0, 0});
        t.coeff *= eps_pow(eps, mu2);
        t.p1 += 1.0;
        t.p2 += 2.0;
        terms.push_back(t);
    }
    return RadialFamily(std::move(terms));
}

} // namespace

RadialFamily gl3r_k2_family(const RealGL3Rep& rep, int eps,
                            std::array<int, 2> lambda, int q, Mb2Options opt) {
    std::map<std::array<int, 3>, RadialFamily::Term> cache;
    return gl3r_k2_family_cached(rep, eps, lambda, q, opt, cache);
}

cplx gl3r_whittaker_k2(const RealGL3Rep& rep, int eps,
                       std::array<int, 2> lambda, int q, TorusPoint y) {
    return gl3r_k2_family(rep, eps, lambda, q).value(y);
}

// ---------------------------------------------------------------------------
// GL(3, C)
// ---------------------------------------------------------------------------

std::array<int, 6> gl3c_xi(const std::array<int, 6>& l) {
    return {l[3] + l[1] + l[2], l[0] + l[3], l[0] + l[4] + l[5],
            l[0] + l[1] + l[5], l[2] + l[5], l[3] + l[4] + l[2]};
}

namespace {

RadialFamily::Term gl3c_u_term(const ComplexRep& rep, int eps,
                               std::array<int, 6> l, const Mb2Options& opt) {
    require(rep.n == 3, "gl3c_whittaker: GL(3,C) parameter expected");
    require(eps == 1 || eps == -1, "gl3c_whittaker: eps must be +-1");
    const int d1 = rep.chars[0].second, d2 = rep.chars[1].second,
              d3 = rep.chars[2].second;
    bool ok = true;
    for (int c : l) ok = ok && c >= 0;
    require(ok && l[0] + l[1] + l[2] == d1 - d2 && l[3] + l[4] + l[5] == d2 - d3,
            "gl3c_whittaker: l must lie in S_{(d1,d2,d3)}");
    const cplx n1 = rep.chars[0].first, n2 = rep.chars[1].first,
               n3 = rep.chars[2].first;
    const auto xi = gl3c_xi(l);
    RadialFamily::Term term;
    term.coeff = minus1pow(l[0] + l[3]) * eps_ipow(eps, d2 + l[1] + l[4]);
    term.p1 = 2.0;
    term.p2 = 2.0 + 2.0 * (n1 + n2 + n3);
    const double x1 = 0.5 * xi[0], x2 = 0.5 * xi[1], x3 = 0.5 * xi[2];
    const double z1 = 0.5 * xi[3], z2 = 0.5 * xi[4], z3 = 0.5 * xi[5];
    auto log_f = [=](lcplx t1, lcplx t2) {
        const lcplx m1 = lcplx(n1), m2 = lcplx(n2), m3 = lcplx(n3);
        return lgc_ld(t1 + m1 + (long double)x1) +
               lgc_ld(t1 + m2 + (long double)x2) +
               lgc_ld(t1 + m3 + (long double)x3) +
               lgc_ld(t2 - m1 + (long double)z1) +
               lgc_ld(t2 - m2 + (long double)z2) +
               lgc_ld(t2 - m3 + (long double)z3) -
               lgc_ld(t1 + t2 + (long double)(x2 + z2));
    };
    const double c1 =
        std::max({-n1.real() - x1, -n2.real() - x2, -n3.real() - x3}) +
        kGl3Margin;
    const double c2 =
        std::max({n1.real() - z1, n2.real() - z2, n3.real() - z3}) +
        kGl3Margin;
    term.table = std::make_shared<Mb2Table>(log_f, c1, c2, 2.0, opt.step,
                                            opt.half_height, opt.boundary_tol);
    return term;
}

} // namespace

RadialFamily gl3c_u_family(const ComplexRep& rep, int eps,
                           std::array<int, 6> l, Mb2Options opt) {
    return RadialFamily({gl3c_u_term(rep, eps, l, opt)});
}

cplx gl3c_whittaker(const ComplexRep& rep, int eps, std::array<int, 6> l,
                    TorusPoint y) {
    return gl3c_u_family(rep, eps, l).value(y);
}

RadialFamily gl3c_k2_family(const ComplexRep& rep, int eps,
                            std::array<int, 2> lambda, int q, Mb2Options opt) {
    require(rep.n == 3, "gl3c_whittaker_k2: GL(3,C) parameter expected");
    const int d1 = rep.chars[0].second, d2 = rep.chars[1].second,
              d3 = rep.chars[2].second;
    const int la1 = lambda[0], la2 = lambda[1];
    require(la1 >= la2, "gl3c_whittaker_k2: lambda1 must be >= lambda2");
    require(d1 >= la2 && la1 >= d3,
            "gl3c_whittaker_k2: K2-type outside the admissible range");
    require(q >= 0 && q <= la1 - la2, "gl3c_whittaker_k2: index out of range");
    const int a11 = std::max(0, la1 - d1), a12 = std::max(0, la2 - d2);
    const int a21 = std::min(0, la1 - d2), a22 = std::min(0, la2 - d3);
    const int al1 = a11 + a12, al2 = a21 + a22;
    const int b1 = la1 - a11 - a21, b2 = la2 - a12 - a22;
    if (q < a11 || q > la1 - la2 + a22) return RadialFamily(); // identically 0
    const cplx common = binom(q, a11) * binom(la1 - la2 - q, -a22) *
                        eps_ipow(eps, -b1 + b2);
    std::vector<RadialFamily::Term> terms;
    std::map<std::array<int, 6>, RadialFamily::Term> cache;
    const int ilo = std::max(0, q - la1 + d2);
    const int ihi = std::min(q - la1 + b1, d2 - b2);
    for (int i = ilo; i <= ihi; ++i) {
        const int j = q - la1 + b1 - i;
        std::array<int, 6> l{la1 - d2 - q + i, j, d1 - b1, i, d2 - b2 - i,
                             b2 - d3};
        auto it = cache.find(l);
        if (it == cache.end())
            it = cache.emplace(l, gl3c_u_term(rep, eps, l, opt)).first;
        auto t = it->second;
        t.coeff *= common * minus1pow(i) * binom(q - la1 + b1, i) *
                   binom(la1 - b2 - q, d2 - b2 - i);
        t.p2 += double(al1 - al2);
        terms.push_back(t);
    }
    return RadialFamily(std::move(terms));
}

cplx gl3c_whittaker_k2(const ComplexRep& rep, int eps,
                       std::array<int, 2> lambda, int q, TorusPoint y) {
    return gl3c_k2_family(rep, eps, lambda, q).value(y);
}

// ---------------------------------------------------------------------------
// Pairings
// ---------------------------------------------------------------------------

double pairing(Field field, std::array<int, 2> lambda, int q, int qp) {
    if (field == Field::R) {
        require(valid_lambda_r(lambda), "pairing: invalid O(2)-type");
        const auto qs = ktype_indices_r(lambda);
        require(std::find(qs.begin(), qs.end(), q) != qs.end() &&
                    std::find(qs.begin(), qs.end(), qp) != qs.end(),
                "pairing: index out of range");
        return q + qp == 0 ? 1.0 : 0.0;
    }
    const int n = lambda[0] - lambda[1];
    require(n >= 0, "pairing: lambda1 must be >= lambda2");
    require(q >= 0 && q <= n && qp >= 0 && qp <= n,
            "pairing: index out of range");
    if (q + qp != n) return 0.0;
    return minus1pow(lambda[0] - q) / binom(n, q);
}

} // namespace arwhit
