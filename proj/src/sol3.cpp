#include "arwhit/sol3.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "arwhit/errors.hpp"

namespace arwhit {

namespace {

// Distance from a complex value to the nearest even integer.
double dist_to_even(cplx d) {
    double n = 2.0 * std::round(0.5 * d.real());
    return std::hypot(d.real() - n, d.imag());
}

void require_generic(const SolParams& r) {
    if (sol_genericity_margin(r) < 1e-3)
        throw ResonantParameters(
            "sol3: parameter differences r_p - r_q too close to 2Z");
}

void require_perm(Perm3 p) {
    Perm3 q = p;
    std::sort(q.begin(), q.end());
    if (q != Perm3{1, 2, 3})
        throw ConstraintViolation("sol3: perm must be a permutation of {1,2,3}");
}

// The six series solutions cancel heavily for z away from 0 (the moderate
// growth solution is exponentially small while each series is exponentially
// large), so coefficients and partial sums are carried in extended precision.
using lcplx = std::complex<long double>;

// Half-difference exponents of the series attached to the permutation
// (i, j, k): a = (r_i - r_j)/2, b = (r_i - r_k)/2, c = (r_k - r_j)/2.
struct HalfDiffs {
    lcplx a, b, c;
    cplx ri, rj;
};

HalfDiffs half_diffs(const SolParams& r, Perm3 p) {
    cplx ri = r.r[p[0] - 1], rj = r.r[p[1] - 1], rk = r.r[p[2] - 1];
    auto half = [](cplx d) { return lcplx(0.5L * d.real(), 0.5L * d.imag()); };
    return {half(ri - rj), half(ri - rk), half(rk - rj), ri, rj};
}

lcplx c00(const HalfDiffs& d) {
    // C_{0,0} = Gamma(-a) Gamma(-b) Gamma(-c).
    return std::exp(log_gamma_ld(-d.a) + log_gamma_ld(-d.b) +
                    log_gamma_ld(-d.c));
}

// One recurrence step in m1 at fixed m2, and one in m2 at fixed m1:
//   C_{m1,m2} = C_{m1-1,m2} (m1+m2+a) / (m1 (m1+a)(m1+b))
//   C_{m1,m2} = C_{m1,m2-1} (m1+m2+a) / (m2 (m2+a)(m2+c))
lcplx step_m1(const HalfDiffs& d, lcplx prev, int m1, int m2) {
    lcplx den = (long double)m1 * ((long double)m1 + d.a) * ((long double)m1 + d.b);
    if (std::abs(den) == 0.0L)
        throw ResonantParameters("sol3: vanishing recurrence denominator");
    return prev * ((long double)(m1 + m2) + d.a) / den;
}

lcplx step_m2(const HalfDiffs& d, lcplx prev, int m1, int m2) {
    lcplx den = (long double)m2 * ((long double)m2 + d.a) * ((long double)m2 + d.c);
    if (std::abs(den) == 0.0L)
        throw ResonantParameters("sol3: vanishing recurrence denominator");
    return prev * ((long double)(m1 + m2) + d.a) / den;
}

// Coefficient table C_{m1,m2} for m1 + m2 <= order, rows indexed by m1.
std::vector<std::vector<lcplx>> coeff_table(const HalfDiffs& d, int order) {
    std::vector<std::vector<lcplx>> tab(order + 1);
    for (int m1 = 0; m1 <= order; ++m1) {
        tab[m1].resize(order - m1 + 1);
        tab[m1][0] = (m1 == 0) ? c00(d) : step_m1(d, tab[m1 - 1][0], m1, 0);
        for (int m2 = 1; m2 <= order - m1; ++m2)
            tab[m1][m2] = step_m2(d, tab[m1][m2 - 1], m1, m2);
    }
    return tab;
}

// Weights of the 4th-order central first/second/third derivative stencils
// on offsets -3..3 (unused offsets have weight 0).
struct Stencil {
    double w[7];
    double scale; // 1 / (denominator * h^order)
};

Stencil d1_stencil(double h) {
    return {{0, 1, -8, 0, 8, -1, 0}, 1.0 / (12.0 * h)};
}
Stencil d2_stencil(double h) {
    return {{0, -1, 16, -30, 16, -1, 0}, 1.0 / (12.0 * h * h)};
}
Stencil d3_stencil(double h) {
    return {{1, -8, 13, 0, -13, 8, -1}, 1.0 / (8.0 * h * h * h)};
}

} // namespace

double sol_genericity_margin(const SolParams& r) {
    double m = 1e300;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != q) m = std::min(m, dist_to_even(r.r[p] - r.r[q]));
    return m;
}

cplx sol_coeff(const SolParams& r, Perm3 perm, int m1, int m2) {
    require_perm(perm);
    require_generic(r);
    if (m1 < 0 || m2 < 0)
        throw ConstraintViolation("sol3: coefficient indices must be >= 0");
    HalfDiffs d = half_diffs(r, perm);
    lcplx c = c00(d);
    for (int k = 1; k <= m1; ++k) c = step_m1(d, c, k, 0);
    for (int k = 1; k <= m2; ++k) c = step_m2(d, c, m1, k);
    return cplx(double(c.real()), double(c.imag()));
}

namespace {

lcplx series_ld(const SolParams& r, Perm3 perm, double z1, double z2,
                SeriesTruncation trunc) {
    require_perm(perm);
    require_generic(r);
    if (!(z1 > 0.0) || !(z2 > 0.0))
        throw ConstraintViolation("sol3: z1, z2 must be positive");
    if (trunc.max_order < 1 || trunc.max_order > 400)
        throw ConstraintViolation("sol3: max_order must be in [1, 400]");
    HalfDiffs d = half_diffs(r, perm);
    auto tab = coeff_table(d, trunc.max_order);
    // Prefactor z1^{r_i} z2^{-r_j}; the rest of each term is real powers of
    // x = z1^2, y = z2^2.
    lcplx pref = std::exp(lcplx(d.ri.real(), d.ri.imag()) * std::log((long double)z1) -
                          lcplx(d.rj.real(), d.rj.imag()) * std::log((long double)z2));
    long double x = (long double)z1 * z1, y = (long double)z2 * z2;
    std::vector<long double> xpow(trunc.max_order + 1), ypow(trunc.max_order + 1);
    xpow[0] = ypow[0] = 1.0L;
    for (int k = 1; k <= trunc.max_order; ++k) {
        xpow[k] = xpow[k - 1] * x;
        ypow[k] = ypow[k - 1] * y;
    }
    lcplx sum = 0.0L;
    long double peak = 0.0L;
    int quiet = 0;
    for (int n = 0; n <= trunc.max_order; ++n) {
        lcplx block = 0.0L;
        // Anti-diagonal m1 + m2 = n.
        for (int m1 = 0; m1 <= n; ++m1)
            block += tab[m1][n - m1] * (xpow[m1] * ypow[n - m1]);
        sum += block;
        peak = std::max(peak, std::abs(block));
        long double scale = std::max({std::abs(sum), peak, (long double)1e-300});
        quiet = (std::abs(block) <= trunc.rel_tail_tol * scale) ? quiet + 1 : 0;
        if (quiet >= 2) return pref * sum;
    }
    if (quiet >= 1) return pref * sum;
    throw TruncationNotConverged("sol3: series did not converge by max_order");
}

} // namespace

cplx sol_series(const SolParams& r, Perm3 perm, double z1, double z2,
                SeriesTruncation trunc) {
    lcplx v = series_ld(r, perm, z1, z2, trunc);
    return cplx(double(v.real()), double(v.imag()));
}

cplx sol_series_sum(const SolParams& r, double z1, double z2,
                    SeriesTruncation trunc) {
    // The six solutions cancel by many orders of magnitude away from the
    // origin (the moderate-growth solution is exponentially small); keep the
    // summation in extended precision end to end.
    static const Perm3 perms[6] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                   {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    lcplx sum = 0.0L;
    for (Perm3 p : perms) sum += series_ld(r, p, z1, z2, trunc);
    return cplx(double(sum.real()), double(sum.imag()));
}

cplx sol_mg(const SolParams& r, double z1, double z2) {
    if (!(z1 > 0.0) || !(z2 > 0.0))
        throw ConstraintViolation("sol3: z1, z2 must be positive");
    double c1 = 1.0, c2 = 1.0;
    for (cplx rr : r.r) {
        c1 = std::max(c1, 1.0 - rr.real());
        c2 = std::max(c2, 1.0 + rr.real());
    }
    double l1 = std::log(z1), l2 = std::log(z2);
    // The three numerator Gamma factors on each axis depend on one variable
    // only; memoize the per-axis sums so each grid node costs a single
    // log-Gamma (the joint denominator).
    std::unordered_map<long, cplx> ax1, ax2;
    auto axis = [&](std::unordered_map<long, cplx>& memo, double c, double t,
                    double sgn, double l) {
        long key = std::lround(t * 1e8);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        cplx s(c, t);
        cplx v = -s * l;
        for (cplx rr : r.r) v += log_gamma(0.5 * (s + sgn * rr));
        memo.emplace(key, v);
        return v;
    };
    auto log_f = [&](cplx s1, cplx s2) {
        return axis(ax1, c1, s1.imag(), 1.0, l1) +
               axis(ax2, c2, s2.imag(), -1.0, l2) -
               log_gamma(0.5 * (s1 + s2));
    };
    Contour2D c{{c1, 8.0, 0.1}, {c2, 8.0, 0.1}};
    // mb_integral_2d_log carries (1/(2 pi i))^2; this integral is normalized
    // by (1/(4 pi i))^2.
    return 0.25 * mb_integral_2d_log(log_f, c, 1e-10);
}

std::pair<cplx, cplx> sol_pde_residual(
    const SolParams& r, const std::function<cplx(double, double)>& f,
    double z1, double z2, double h) {
    if (!(h > 0.0) || h > 1e-3)
        throw ConstraintViolation("sol3: stencil spacing must be in (0, 1e-3]");
    // Sample f on the 7x7 logarithmic grid around (z1, z2).
    cplx g[7][7];
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j)
            g[i + 3][j + 3] = f(z1 * std::exp(i * h), z2 * std::exp(j * h));
    auto apply1 = [&](const Stencil& s) { // derivative in u1 at center
        cplx v = 0.0;
        for (int i = 0; i < 7; ++i) v += s.w[i] * g[i][3];
        return v * s.scale;
    };
    auto apply2 = [&](const Stencil& s) { // derivative in u2 at center
        cplx v = 0.0;
        for (int j = 0; j < 7; ++j) v += s.w[j] * g[3][j];
        return v * s.scale;
    };
    Stencil s1 = d1_stencil(h), s2 = d2_stencil(h), s3 = d3_stencil(h);
    cplx f0 = g[3][3];
    cplx d1f = apply1(s1), d2f = apply2(s1);
    cplx d11f = apply1(s2), d22f = apply2(s2);
    cplx d111f = apply1(s3);
    cplx d12f = 0.0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            d12f += s1.w[i] * s1.w[j] * g[i][j];
    d12f *= s1.scale * s1.scale;

    cplx e1 = r.r[0] + r.r[1] + r.r[2];
    cplx e2 = r.r[0] * r.r[1] + r.r[0] * r.r[2] + r.r[1] * r.r[2];
    cplx e3 = r.r[0] * r.r[1] * r.r[2];
    double q1 = 4.0 * z1 * z1, q2 = 4.0 * z2 * z2;

    cplx res2 = -d11f + d12f - d22f + e1 * (d1f - d2f) - e2 * f0 +
                (q1 + q2) * f0;
    cplx res3 = d111f - e1 * d11f + e2 * d1f - e3 * f0 -
                q1 * (d1f + d2f + 2.0 * f0);
    return {res2, res3};
}

} // namespace arwhit
