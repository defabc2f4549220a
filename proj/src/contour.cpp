#include "arwhit/contour.hpp"

#include <cmath>
#include <vector>

namespace arwhit {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Trapezoid sum over t = k*step, |k| <= kmax, of a node evaluator.
// Tail-doubling: extends kmax until two successive truncations agree.
cplx line_sum_adaptive(const std::function<cplx(double)>& node, double step,
                       double half_height, double tol, long* nodes_used) {
    long kmax = static_cast<long>(std::ceil(half_height / step));
    cplx first = node(0.0);
    cplx sum = first;
    double peak = std::abs(first); // noise floor for cancellation-heavy sums
    long nodes = 1;
    auto add = [&](double t) {
        cplx v = node(t);
        sum += v;
        peak = std::max(peak, std::abs(v));
        ++nodes;
    };
    for (long k = 1; k <= kmax; ++k) {
        double t = step * static_cast<double>(k);
        add(t);
        add(-t);
    }
    for (int stage = 0; stage < 10; ++stage) {
        cplx prev = sum;
        long knew = 2 * kmax;
        for (long k = kmax + 1; k <= knew; ++k) {
            double t = step * static_cast<double>(k);
            add(t);
            add(-t);
        }
        kmax = knew;
        double scale = std::max({std::abs(sum), peak, 1e-300});
        if (std::abs(sum - prev) <= tol * scale) {
            if (nodes_used) *nodes_used = nodes;
            return step * sum;
        }
    }
    throw QuadratureNotConverged("mb_integral: vertical tail did not stabilize");
}

} // namespace

double rel_error_of(cplx lhs, cplx rhs) {
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

cplx mb_integral_1d_log(const std::function<cplx(cplx)>& log_f,
                        VerticalContour contour, double tol, long* nodes_used) {
    const double c = contour.real_part;
    auto node = [&](double t) { return std::exp(log_f(cplx(c, t))); };
    cplx s = line_sum_adaptive(node, contour.step, contour.half_height, tol, nodes_used);
    return s / (2.0 * kPi); // (2 pi i)^{-1} * (i dt) = dt / (2 pi)
}

cplx mb_integral_1d(const std::function<cplx(cplx)>& f,
                    VerticalContour contour, double tol, long* nodes_used) {
    const double c = contour.real_part;
    auto node = [&](double t) { return f(cplx(c, t)); };
    cplx s = line_sum_adaptive(node, contour.step, contour.half_height, tol, nodes_used);
    return s / (2.0 * kPi);
}

namespace {

cplx mb_2d_impl(const std::function<cplx(double, double)>& node2, Contour2D contour,
                double tol, long* nodes_used) {
    // Iterated trapezoid with joint tail-doubling on both axes; the doubling
    // shells are L-shaped so previously summed nodes are never revisited.
    const double h1 = contour.c1.step, h2 = contour.c2.step;
    long k1 = static_cast<long>(std::ceil(contour.c1.half_height / h1));
    long k2 = static_cast<long>(std::ceil(contour.c2.half_height / h2));
    long nodes = 0;
    double peak = 0.0;
    auto block = [&](long a1, long b1, long a2, long b2) {
        // Sum over k in [a1,b1], m in [a2,b2] of node2 at (k h1, m h2).
        cplx s = 0.0;
        for (long k = a1; k <= b1; ++k) {
            for (long m = a2; m <= b2; ++m) {
                cplx v = node2(h1 * static_cast<double>(k), h2 * static_cast<double>(m));
                s += v;
                peak = std::max(peak, std::abs(v));
                ++nodes;
            }
        }
        return s;
    };
    cplx sum = block(-k1, k1, -k2, k2);
    for (int stage = 0; stage < 6; ++stage) {
        cplx prev = sum;
        long n1 = 2 * k1, n2 = 2 * k2;
        sum += block(-n1, -k1 - 1, -n2, n2);
        sum += block(k1 + 1, n1, -n2, n2);
        sum += block(-k1, k1, -n2, -k2 - 1);
        sum += block(-k1, k1, k2 + 1, n2);
        k1 = n1;
        k2 = n2;
        double scale = std::max({std::abs(sum), peak, 1e-300});
        if (std::abs(sum - prev) <= tol * scale) {
            if (nodes_used) *nodes_used = nodes;
            return sum * h1 * h2 / (4.0 * kPi * kPi);
        }
    }
    throw QuadratureNotConverged("mb_integral_2d: tails did not stabilize");
}

} // namespace

cplx mb_integral_2d_log(const std::function<cplx(cplx, cplx)>& log_f,
                        Contour2D contour, double tol, long* nodes_used) {
    const double c1 = contour.c1.real_part, c2 = contour.c2.real_part;
    auto node2 = [&](double t1, double t2) {
        return std::exp(log_f(cplx(c1, t1), cplx(c2, t2)));
    };
    return mb_2d_impl(node2, contour, tol, nodes_used);
}

cplx mb_integral_2d(const std::function<cplx(cplx, cplx)>& f,
                    Contour2D contour, double tol, long* nodes_used) {
    const double c1 = contour.c1.real_part, c2 = contour.c2.real_part;
    auto node2 = [&](double t1, double t2) {
        return f(cplx(c1, t1), cplx(c2, t2));
    };
    return mb_2d_impl(node2, contour, tol, nodes_used);
}

IdentityReport verify_mellin_inversion(const std::function<cplx(cplx)>& log_f,
                                       VerticalContour contour, cplx s, double c,
                                       double pole_bound, double tol) {
    // Inner transform g(y) = (2 pi i)^{-1} int f(t) y^{-c t} dt. The line is
    // moved left for y < 1: there the factor y^{-c t} grows with Re(t), so a
    // tall line would demand far more cancellation than doubles provide.
    VerticalContour low = contour;
    low.real_part = std::min(contour.real_part, pole_bound + 0.25);
    auto g = [&](double logy) {
        auto shifted = [&](cplx t) { return log_f(t) - c * t * logy; };
        return mb_integral_1d_log(shifted, logy < 0.0 ? low : contour, tol);
    };
    // Outer integral int_0^inf g(y) y^{c s} c dy/y on the log grid u = log y,
    // extended on both sides until the integrand is negligible.
    const double h = 0.05;
    long nodes = 0;
    auto node = [&](double u) {
        ++nodes;
        return g(u) * std::exp(c * s * u) * c;
    };
    cplx sum = node(0.0);
    double peak = std::abs(sum);
    // Right tail (y -> infinity): super-exponential decay for Gamma-built f.
    for (double u = h;; u += h) {
        cplx v = node(u);
        sum += v;
        peak = std::max(peak, std::abs(v));
        if (std::abs(v) < 1e-14 * peak && u > 2.0) break;
        if (u > 60.0) throw QuadratureNotConverged("mellin inversion: right tail");
    }
    // Left tail (y -> 0): decay like y^{Re(c s) - c r}.
    for (double u = -h;; u -= h) {
        cplx v = node(u);
        sum += v;
        peak = std::max(peak, std::abs(v));
        if (std::abs(v) < 1e-14 * peak && u < -2.0) break;
        if (u < -400.0) throw QuadratureNotConverged("mellin inversion: left tail");
    }
    cplx lhs = h * sum;
    cplx rhs = std::exp(log_f(s));
    return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes};
}

namespace {

using LogGamma = cplx (*)(cplx);

LogGamma lg_for(Field f) { return f == Field::R ? &log_gamma_r : &log_gamma_c; }

void require(bool cond, const char* msg) {
    if (!cond) throw ConstraintViolation(msg);
}

// Midpoint line between lo and hi with a pole-distance-aware step.
VerticalContour window_contour(double lo, double hi) {
    require(lo < hi, "verify_identity: empty admissible window for the contour");
    VerticalContour c;
    c.real_part = 0.5 * (lo + hi);
    double d = 0.5 * (hi - lo);
    c.step = std::min(0.1, d / 5.0);
    c.half_height = 16.0;
    return c;
}

double binom(long n, long k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (long j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    return r;
}

} // namespace

IdentityReport verify_identity(IdentityId which, Field field,
                               const std::vector<cplx>& params, double tol) {
    auto lg = lg_for(field);
    switch (which) {
        case IdentityId::barnes_first: {
            require(params.size() == 4, "barnes_first expects a1 a2 b1 b2");
            cplx a1 = params[0], a2 = params[1], b1 = params[2], b2 = params[3];
            for (cplx a : {a1, a2})
                for (cplx b : {b1, b2}) require((a + b).real() > 0, "barnes_first: Re(a_i+b_j) > 0");
            double lo = std::max(-a1.real(), -a2.real());
            double hi = std::min(b1.real(), b2.real());
            VerticalContour c = window_contour(lo, hi);
            long nodes = 0;
            cplx lhs = 0.5 * mb_integral_1d_log(
                [&](cplx z) {
                    return lg(z + a1) + lg(z + a2) + lg(-z + b1) + lg(-z + b2);
                },
                c, tol, &nodes);
            cplx rhs = std::exp(lg(a1 + b1) + lg(a1 + b2) + lg(a2 + b1) + lg(a2 + b2) -
                                lg(a1 + a2 + b1 + b2));
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes};
        }
        case IdentityId::barnes_exchange: {
            require(params.size() == 6, "barnes_exchange expects a1 a2 a3 b1 b2 b3");
            cplx a1 = params[0], a2 = params[1], a3 = params[2];
            cplx b1 = params[3], b2 = params[4], b3 = params[5];
            for (cplx a : {a1, a2, a3})
                for (cplx b : {b1, b2, b3})
                    require((a + b).real() > 0, "barnes_exchange: Re(a_i+b_j) > 0");
            VerticalContour cz = window_contour(std::max(-a1.real(), -a2.real()),
                                                std::min({b1.real(), b2.real(), b3.real()}));
            VerticalContour ct = window_contour(std::max(-b1.real(), -b2.real()),
                                                std::min({a1.real(), a2.real(), a3.real()}));
            long nodes = 0, nodes2 = 0;
            cplx lhs = 0.5 * mb_integral_1d_log(
                [&](cplx z) {
                    return lg(z + a1) + lg(z + a2) + lg(-z + b1) + lg(-z + b2) +
                           lg(-z + b3) - lg(-z + a3 + b1 + b2);
                },
                cz, tol, &nodes);
            cplx tint = 0.5 * mb_integral_1d_log(
                [&](cplx t) {
                    return lg(t + b1) + lg(t + b2) + lg(-t + a1) + lg(-t + a2) +
                           lg(-t + a3) - lg(-t + a1 + a2 + b3);
                },
                ct, tol, &nodes2);
            cplx rhs = std::exp(lg(a1 + b3) + lg(a2 + b3) - lg(a3 + b1) - lg(a3 + b2)) * tint;
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes + nodes2};
        }
        case IdentityId::barnes_second: {
            require(params.size() == 5, "barnes_second expects a1 a2 b1 b2 b3");
            cplx a1 = params[0], a2 = params[1];
            cplx b1 = params[2], b2 = params[3], b3 = params[4];
            for (cplx a : {a1, a2})
                for (cplx b : {b1, b2, b3})
                    require((a + b).real() > 0, "barnes_second: Re(a_i+b_j) > 0");
            VerticalContour c = window_contour(std::max(-a1.real(), -a2.real()),
                                               std::min({b1.real(), b2.real(), b3.real()}));
            cplx sigma = a1 + a2 + b1 + b2 + b3;
            long nodes = 0;
            cplx lhs = 0.5 * mb_integral_1d_log(
                [&](cplx z) {
                    return lg(z + a1) + lg(z + a2) + lg(-z + b1) + lg(-z + b2) +
                           lg(-z + b3) - lg(-z + sigma);
                },
                c, tol, &nodes);
            cplx rhs = std::exp(lg(a1 + b1) + lg(a1 + b2) + lg(a1 + b3) + lg(a2 + b1) +
                                lg(a2 + b2) + lg(a2 + b3) - lg(a1 + a2 + b1 + b2) -
                                lg(a1 + a2 + b1 + b3) - lg(a1 + a2 + b2 + b3));
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes};
        }
        case IdentityId::barnes_second_sum: {
            require(field == Field::R, "barnes_second_sum is a real-field identity");
            require(params.size() == 5, "barnes_second_sum expects a1 a2 b1 b2 b3");
            cplx a1 = params[0], a2 = params[1];
            cplx b1 = params[2], b2 = params[3], b3 = params[4];
            for (cplx a : {a1, a2})
                for (cplx b : {b1, b2, b3})
                    require((a + b).real() > 0, "barnes_second_sum: Re(a_i+b_j) > 0");
            VerticalContour c = window_contour(std::max(-a1.real(), -a2.real()),
                                               std::min({b1.real(), b2.real(), b3.real()}));
            cplx sigma = a1 + a2 + b1 + b2 + b3;
            long nodes = 0;
            cplx lhs = 0.5 * mb_integral_1d(
                [&](cplx z) {
                    cplx t1 = std::exp(log_gamma_r(z + a1) + log_gamma_r(z + a2 + 1.0) +
                                       log_gamma_r(-z + b1) + log_gamma_r(-z + b2) +
                                       log_gamma_r(-z + b3 + 1.0) - log_gamma_r(-z + sigma));
                    cplx t2 = std::exp(log_gamma_r(z + a1 + 1.0) + log_gamma_r(z + a2) +
                                       log_gamma_r(-z + b1 + 1.0) + log_gamma_r(-z + b2 + 1.0) +
                                       log_gamma_r(-z + b3) - log_gamma_r(-z + sigma + 1.0));
                    return t1 + t2;
                },
                c, tol, &nodes);
            cplx rhs = std::exp(log_gamma_r(a1 + b1) + log_gamma_r(a1 + b2) +
                                log_gamma_r(a1 + b3 + 1.0) + log_gamma_r(a2 + b1 + 1.0) +
                                log_gamma_r(a2 + b2 + 1.0) + log_gamma_r(a2 + b3) -
                                log_gamma_r(a1 + a2 + b1 + b2 + 1.0) -
                                log_gamma_r(a1 + a2 + b1 + b3) -
                                log_gamma_r(a1 + a2 + b2 + b3));
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes};
        }
        case IdentityId::gauss_sum: {
            require(field == Field::C, "gauss_sum is a complex-field identity");
            require(params.size() == 3, "gauss_sum expects z1 z2 m");
            cplx z1 = params[0], z2 = params[1];
            long m = static_cast<long>(std::lround(params[2].real()));
            require(m >= 0, "gauss_sum: m >= 0");
            require(z1.real() > 0, "gauss_sum: Re(z1) > 0");
            require(z2.real() > static_cast<double>(m), "gauss_sum: Re(z2) > m");
            cplx lhs = 0.0;
            for (long j = 0; j <= m; ++j) {
                lhs += binom(m, j) * std::exp(log_gamma_c(z1 + static_cast<double>(j)) +
                                              log_gamma_c(z2 - static_cast<double>(j)));
            }
            cplx rhs = std::exp(log_gamma_c(z1) + log_gamma_c(z1 + z2) +
                                log_gamma_c(z2 - static_cast<double>(m)) -
                                log_gamma_c(z1 + z2 - static_cast<double>(m)));
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), m + 1};
        }
        case IdentityId::cr_barnes: {
            require(field == Field::R, "cr_barnes lives over the real field");
            require(params.size() == 3, "cr_barnes expects a1 a2 b1");
            cplx a1 = params[0], a2 = params[1], b1 = params[2];
            require((a1 + b1).real() > 0 && (a2 + b1).real() > 0,
                    "cr_barnes: Re(a_i+b_1) > 0");
            VerticalContour c = window_contour(std::max(-a1.real(), -a2.real()), b1.real());
            long nodes = 0;
            cplx lhs = 0.5 * mb_integral_1d_log(
                [&](cplx z) {
                    return log_gamma_r(z + a1) + log_gamma_r(z + a2) + log_gamma_c(-z + b1);
                },
                c, tol, &nodes);
            cplx rhs = std::exp(log_gamma_c(a1 + b1) + log_gamma_c(a2 + b1) -
                                log_gamma_r(a1 + a2 + 2.0 * b1 + 1.0));
            return IdentityReport{lhs, rhs, rel_error_of(lhs, rhs), nodes};
        }
    }
    throw ConstraintViolation("verify_identity: unknown identity id");
}

} // namespace arwhit
