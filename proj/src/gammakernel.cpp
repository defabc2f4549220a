#include "arwhit/gammakernel.hpp"

#include <cmath>
#include <vector>

namespace arwhit {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2Pi = 1.83787706640934548356065947281123527; // log(2*pi)

// Rational (Lanczos-type) approximation, g = 607/128, 15 coefficients.
// Accurate to roughly full double precision for Re(z) >= 0.5.
constexpr double kLanczosG = 4.7421875; // 607/128
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// log Gamma for Re(z) >= 0.5 via the Lanczos sum. The result here is the
// principal-branch expression, continuous on the right half plane.
cplx log_gamma_right(cplx z) {
    cplx zm1 = z - 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 15; ++i) a += kLanczos[i] / (zm1 + static_cast<double>(i));
    cplx t = zm1 + kLanczosG + 0.5;
    return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

// log sin(pi z), computed without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
    const cplx i(0.0, 1.0);
    if (z.imag() >= 0.0) {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i)
        return -i * kPi * z + std::log((std::exp(2.0 * i * kPi * z) - 1.0) / (2.0 * i));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

} // namespace

bool near_gamma_pole(cplx z, double tol) {
    double n = std::round(z.real());
    if (n > 0.5) return false;
    return std::abs(z - cplx(n, 0.0)) < tol;
}

cplx log_gamma(cplx z) {
    if (near_gamma_pole(z)) throw PoleError("log_gamma: argument at a pole of Gamma");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(cplx(kPi)) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
    return std::exp(log_gamma(z));
}

double gamma_residue(int m) {
    double r = 1.0;
    for (int k = 1; k <= m; ++k) r /= -static_cast<double>(k);
    return r;
}

cplx gamma_r(cplx s) { return std::exp(log_gamma_r(s)); }
cplx gamma_c(cplx s) { return std::exp(log_gamma_c(s)); }

cplx log_gamma_r(cplx s) {
    return -0.5 * s * std::log(kPi) + log_gamma(0.5 * s);
}

cplx log_gamma_c(cplx s) {
    return std::log(2.0) - s * kLog2Pi + log_gamma(s);
}

cplx pochhammer(cplx a, int i) {
    cplx p = 1.0;
    for (int k = 0; k < i; ++k) p *= a + static_cast<double>(k);
    return p;
}

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// Stirling series with exact Bernoulli-number coefficients
// B_{2n} / (2n (2n-1)), n = 1..10. At |z| >= 20 the first omitted term is
// below 1e-24 relative, so the long double arithmetic is the only error.
constexpr long double kStirling[10] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

lcplx log_gamma_ld_right(lcplx z) {
    // Shift into |z| >= 20 by the recurrence Gamma(z) = Gamma(z+m)/prod.
    lcplx shift = 0.0L;
    while (std::abs(z) < 20.0L) {
        shift += std::log(z);
        z += 1.0L;
    }
    lcplx inv = 1.0L / z, inv2 = inv * inv, p = inv;
    lcplx tail = 0.0L;
    for (long double c : kStirling) {
        tail += c * p;
        p *= inv2;
    }
    return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPiL) +
           tail - shift;
}

lcplx log_sin_pi_ld(lcplx z) {
    const lcplx i(0.0L, 1.0L);
    if (z.imag() >= 0.0L)
        return -i * kPiL * z +
               std::log((std::exp(2.0L * i * kPiL * z) - 1.0L) / (2.0L * i));
    return std::conj(log_sin_pi_ld(std::conj(z)));
}

} // namespace

lcplx log_gamma_ld(lcplx z) {
    if (near_gamma_pole(cplx((double)z.real(), (double)z.imag())))
        throw PoleError("log_gamma_ld: argument at a pole of Gamma");
    if (z.real() >= 0.5L) return log_gamma_ld_right(z);
    return std::log(lcplx(kPiL)) - log_sin_pi_ld(z) -
           log_gamma_ld_right(1.0L - z);
}

namespace {

bool near_integer(cplx r, double tol = 1e-8) {
    return std::abs(r.imag()) < tol &&
           std::abs(r.real() - std::round(r.real())) < tol;
}

// Route 1: K_r(z) = 1/2 int_{-inf}^{inf} exp(-z cosh u + r u) du, trapezoid.
cplx bessel_k_integral(cplx r, double z) {
    const double abs_re_r = std::abs(r.real());
    // Endpoint cutoff: integrand magnitude below exp(-z) * 1e-20.
    double umax = 1.0;
    while (-z * std::cosh(umax) + abs_re_r * umax > -z - 46.0) umax += 0.5;
    // For large z the integrand is a Gaussian bump of width ~ 1/sqrt(z)
    // around u = 0; keep several nodes per width or the trapezoid aliases.
    const double h = std::min(0.05, 0.35 / std::sqrt(z));
    const long n = static_cast<long>(std::ceil(umax / h));
    cplx sum = std::exp(cplx(-z)); // u = 0 term
    for (long k = 1; k <= n; ++k) {
        double u = h * static_cast<double>(k);
        double e = -z * std::cosh(u);
        sum += std::exp(cplx(e) + r * u) + std::exp(cplx(e) - r * u);
    }
    return 0.5 * h * sum;
}

// Route 2: K_r(z) = (1/4) (2 pi i)^{-1} int Gamma((s+r)/2) Gamma((s-r)/2)
//                   (z/2)^{-s} ds on Re(s) = |Re r| + 1.
cplx bessel_k_mellin_barnes(cplx r, double z) {
    const double c = std::abs(r.real()) + 1.0;
    const double lhz = std::log(0.5 * z);
    const double h = 0.05;
    auto node = [&](double t) {
        cplx s(c, t);
        return std::exp(log_gamma(0.5 * (s + r)) + log_gamma(0.5 * (s - r)) - s * lhz);
    };
    // |Gamma(x+iy)| ~ e^{-pi |y| / 2}; two half-arguments give e^{-pi |t|/2}.
    // Extend until nodes are negligible.
    cplx sum = node(0.0);
    double t = h;
    double cap = 0.0;
    while (true) {
        cplx a = node(t), b = node(-t);
        sum += a + b;
        cap = std::max(cap, std::abs(sum));
        if (t > 8.0 && std::abs(a) + std::abs(b) < 1e-18 * cap) break;
        if (t > 400.0) throw QuadratureNotConverged("bessel_k: Mellin-Barnes tail did not decay");
        t += h;
    }
    return 0.25 * (h / (2.0 * kPi)) * sum;
}

} // namespace

cplx bessel_i_hat(cplx r, double z, int terms) {
    if (near_integer(r)) {
        throw NonIntegerOrderRequired("bessel_i_hat: series route requires non-integer order");
    }
    const double q = 0.25 * z * z; // (z/2)^2
    cplx term = gamma(-r) * std::exp(r * std::log(0.5 * z));
    cplx sum = term;
    for (int k = 1; k < terms; ++k) {
        term *= q / (static_cast<double>(k) * (r + static_cast<double>(k)));
        sum += term;
    }
    return sum;
}

namespace {

// Route 3: K_r = (I^hat_r + I^hat_{-r}) / 2 with automatic truncation.
cplx bessel_k_series(cplx r, double z) {
    if (near_integer(r)) {
        throw NonIntegerOrderRequired("bessel_k: series route requires non-integer order");
    }
    const double q = 0.25 * z * z;
    cplx term_p = gamma(-r) * std::exp(r * std::log(0.5 * z));
    cplx term_m = gamma(r) * std::exp(-r * std::log(0.5 * z));
    cplx sum = 0.5 * (term_p + term_m);
    for (int k = 1; k < 200; ++k) {
        term_p *= q / (static_cast<double>(k) * (r + static_cast<double>(k)));
        term_m *= q / (static_cast<double>(k) * (-r + static_cast<double>(k)));
        cplx inc = 0.5 * (term_p + term_m);
        sum += inc;
        if (std::abs(inc) < 1e-16 * std::abs(sum)) return sum;
    }
    throw TruncationNotConverged("bessel_k: series did not converge within 200 terms");
}

} // namespace

cplx bessel_k(cplx r, double z, BesselMethod method) {
    if (!(z > 0.0)) throw NumericError("bessel_k: z must be positive");
    switch (method) {
        case BesselMethod::integral: return bessel_k_integral(r, z);
        case BesselMethod::mellin_barnes: return bessel_k_mellin_barnes(r, z);
        case BesselMethod::series: return bessel_k_series(r, z);
    }
    throw NumericError("bessel_k: unknown method");
}

} // namespace arwhit
