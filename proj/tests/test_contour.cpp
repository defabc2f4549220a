#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "arwhit/contour.hpp"

using namespace arwhit;

namespace {
double rel(cplx a, cplx b) { return rel_error_of(a, b); }
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("mb_integral_1d recovers K_0(2) from its Barnes representation") {
    double z = 2.0;
    VerticalContour c{2.0, 16.0, 0.05};
    cplx v = 0.25 * mb_integral_1d_log(
        [&](cplx s) {
            return log_gamma(0.5 * s) + log_gamma(0.5 * s) - s * std::log(0.5 * z);
        },
        c);
    cplx oracle = bessel_k(cplx(0.0), z, BesselMethod::integral);
    CHECK(rel(v, oracle) < 1e-9);
    CHECK(rel(v, cplx(0.11389387274953343)) < 1e-8);
}

TEST_CASE("mb_integral_1d: zero integrand and Schwarz symmetry") {
    VerticalContour c{1.0, 8.0, 0.1};
    cplx z = mb_integral_1d([](cplx) { return cplx(0.0); }, c);
    CHECK(std::abs(z) == 0.0);
    // Real-parameter Gamma integrand: imaginary part is pure roundoff.
    cplx v = mb_integral_1d_log(
        [](cplx s) { return log_gamma(s) + log_gamma(2.0 - s); }, c);
    CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v));
}

TEST_CASE("contour-shift invariance") {
    double z = 3.0;
    auto f = [&](cplx s) {
        return log_gamma(0.5 * (s + 0.4)) + log_gamma(0.5 * (s - 0.4)) -
               s * std::log(0.5 * z);
    };
    cplx a = mb_integral_1d_log(f, VerticalContour{1.5, 16.0, 0.05});
    cplx b = mb_integral_1d_log(f, VerticalContour{2.0, 16.0, 0.05});
    CHECK(rel(a, b) < 1e-10);
}

TEST_CASE("self-consistency under half_height doubling and step halving") {
    auto f = [](cplx s) { return log_gamma(s) + log_gamma(3.0 - s); };
    cplx a = mb_integral_1d_log(f, VerticalContour{1.5, 16.0, 0.1});
    cplx b = mb_integral_1d_log(f, VerticalContour{1.5, 32.0, 0.1});
    cplx c = mb_integral_1d_log(f, VerticalContour{1.5, 16.0, 0.05});
    CHECK(rel(a, b) < 1e-9);
    CHECK(rel(a, c) < 1e-9);
}

TEST_CASE("mb_integral_2d separability") {
    auto g = [](cplx s) { return log_gamma(s) + log_gamma(2.5 - s); };
    auto h = [](cplx s) { return log_gamma(s + 0.3) + log_gamma(2.2 - s); };
    VerticalContour c1{1.2, 12.0, 0.1}, c2{1.1, 12.0, 0.1};
    cplx prod = mb_integral_1d_log(g, c1) * mb_integral_1d_log(h, c2);
    cplx both = mb_integral_2d_log(
        [&](cplx s1, cplx s2) { return g(s1) + h(s2); }, Contour2D{c1, c2});
    CHECK(rel(prod, both) < 1e-7);
    cplx zero = mb_integral_2d([](cplx, cplx) { return cplx(0.0); }, Contour2D{c1, c2});
    CHECK(std::abs(zero) == 0.0);
}

TEST_CASE("Mellin inversion checks") {
    VerticalContour c{2.0, 16.0, 0.05};
    // f = Gamma, c = 1, s = 2: the inner transform is e^{-y}.
    auto r1 = verify_mellin_inversion([](cplx t) { return log_gamma(t); }, c,
                                      cplx(2.0), 1.0, 0.0);
    CHECK(r1.rel_error < 1e-8);
    CHECK(rel(r1.lhs, cplx(1.0)) < 1e-8);
    // f = Gamma_C, c = 2, s = 1.5.
    auto r2 = verify_mellin_inversion([](cplx t) { return log_gamma_c(t); }, c,
                                      cplx(1.5), 2.0, 0.0);
    CHECK(r2.rel_error < 1e-8);
    CHECK(rel(r2.rhs, gamma_c(cplx(1.5))) < 1e-14);
    // Gaussian-Mellin pair: f(t) = Gamma(t/2)/2 has inner transform e^{-y^2}.
    auto r3 = verify_mellin_inversion(
        [](cplx t) { return log_gamma(0.5 * t) - std::log(2.0); }, c, cplx(1.8), 1.0, 0.0);
    CHECK(r3.rel_error < 1e-8);
}

TEST_CASE("Barnes first lemma: pinned example over R") {
    auto rep = verify_identity(IdentityId::barnes_first, Field::R,
                               {cplx(0.5), cplx(0.5), cplx(0.5), cplx(0.5)});
    CHECK(rep.rel_error < 1e-8);
    CHECK(rel(rep.rhs, cplx(kPi)) < 1e-12); // Gamma_R(1)^4 / Gamma_R(2) = pi
}

TEST_CASE("Barnes second lemma: pinned example over C") {
    auto rep = verify_identity(IdentityId::barnes_second, Field::C,
                               {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
    CHECK(rep.rel_error < 1e-8);
    cplx expect = std::pow(gamma_c(cplx(2.0)), 6) / std::pow(gamma_c(cplx(4.0)), 3);
    CHECK(rel(rep.rhs, expect) < 1e-12);
}

TEST_CASE("gauss_sum: m=0 trivial case and constraints") {
    auto rep = verify_identity(IdentityId::gauss_sum, Field::C,
                               {cplx(1.3, 0.2), cplx(2.1), cplx(0.0)});
    CHECK(rep.rel_error < 1e-12);
    CHECK_THROWS_AS(verify_identity(IdentityId::gauss_sum, Field::C,
                                    {cplx(1.0), cplx(1.0), cplx(3.0)}),
                    ConstraintViolation);
}

TEST_CASE("all identities: 20 random admissible draws each") {
    std::mt19937 rng(123456);
    std::uniform_real_distribution<double> pos(0.6, 2.0), im(-0.5, 0.5);
    auto draw = [&] { return cplx(pos(rng), im(rng)); };
    for (int it = 0; it < 20; ++it) {
        for (Field f : {Field::R, Field::C}) {
            auto r1 = verify_identity(IdentityId::barnes_first, f,
                                      {draw(), draw(), draw(), draw()});
            CHECK(r1.rel_error < 1e-8);
            auto r2 = verify_identity(IdentityId::barnes_exchange, f,
                                      {draw(), draw(), draw(), draw(), draw(), draw()});
            CHECK(r2.rel_error < 1e-8);
            auto r3 = verify_identity(IdentityId::barnes_second, f,
                                      {draw(), draw(), draw(), draw(), draw()});
            CHECK(r3.rel_error < 1e-8);
        }
        auto r4 = verify_identity(IdentityId::barnes_second_sum, Field::R,
                                  {draw(), draw(), draw(), draw(), draw()});
        CHECK(r4.rel_error < 1e-8);
        auto r5 = verify_identity(IdentityId::cr_barnes, Field::R,
                                  {draw(), draw(), draw()});
        CHECK(r5.rel_error < 1e-8);
        std::uniform_int_distribution<int> mdist(0, 4);
        int m = mdist(rng);
        auto r6 = verify_identity(IdentityId::gauss_sum, Field::C,
                                  {draw(), cplx(pos(rng) + m, im(rng)), cplx(m)});
        CHECK(r6.rel_error < 1e-8);
    }
}

TEST_CASE("constraint violations are reported") {
    CHECK_THROWS_AS(verify_identity(IdentityId::barnes_first, Field::R,
                                    {cplx(-1.0), cplx(0.5), cplx(0.5), cplx(0.5)}),
                    ConstraintViolation);
    CHECK_THROWS_AS(verify_identity(IdentityId::barnes_second_sum, Field::C,
                                    {cplx(1), cplx(1), cplx(1), cplx(1), cplx(1)}),
                    ConstraintViolation);
}
