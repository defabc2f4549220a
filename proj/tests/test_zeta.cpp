#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "arwhit/gammakernel.hpp"
#include "arwhit/zeta.hpp"

using namespace arwhit;

namespace {

double rel(cplx a, cplx b) { return rel_error_of(a, b); }

// Wide 1D grids: every pairing integrand decays at least like y^0.5 toward
// y -> 0 for the parameter ranges drawn below, and like a Gaussian or
// exponential toward y -> infinity.
ZetaConfig config_1d() {
    ZetaConfig cfg;
    cfg.grid1 = {-40.0, 4.0, 880};
    cfg.grid2 = {-40.0, 4.0, 880};
    return cfg;
}

ZetaConfig config_c22() {
    ZetaConfig cfg;
    cfg.grid1 = {-22.0, 4.0, 600};
    cfg.grid2 = {-22.0, 4.0, 600};
    return cfg;
}

// GL(3) x GL(2) grids: the radial tables are cancellation-limited at large
// y, so u_max is capped and the endpoint guard is relaxed accordingly; the
// guarded edge mass tracks the actual truncation error.
ZetaConfig config_r32() {
    ZetaConfig cfg;
    cfg.grid1 = {-25.0, 1.5, 560};
    cfg.grid2 = {-25.0, 1.5, 560};
    cfg.tail_tol = 1e-7;
    return cfg;
}

ZetaConfig config_c32() {
    ZetaConfig cfg;
    cfg.grid1 = {-13.0, 1.3, 300};
    cfg.grid2 = {-13.0, 1.3, 300};
    cfg.tail_tol = 1e-6;
    return cfg;
}

// Generic spectral parameter, small real part so every integrand keeps a
// positive decay exponent at the chosen s-samples.
cplx draw_nu(std::mt19937& rng) {
    std::uniform_real_distribution<double> re(-0.2, 0.2), im(-0.4, 0.4);
    return {re(rng), im(rng)};
}

const cplx kS[3] = {cplx(1.4, 0.0), cplx(1.8, 0.3), cplx(2.2, -0.2)};

// Checks |Z/expected - 1| <= tol at the three sample points and that the
// ratio is s-independent to within 3 tol.
template <typename Z, typename E>
void check_ratio(Z&& zeta, E&& expected, double tol) {
    cplx ratio[3];
    for (int i = 0; i < 3; ++i) {
        cplx z = zeta(kS[i]), e = expected(kS[i]);
        ratio[i] = z / e;
        CHECK(rel(z, e) < tol);
    }
    for (int i = 1; i < 3; ++i)
        CHECK(std::abs(ratio[i] - ratio[0]) < 3.0 * tol);
}

} // namespace

// ---------------------------------------------------------------------------
// Radial quadrature
// ---------------------------------------------------------------------------

TEST_CASE("log-grid quadrature reproduces Mellin Gamma integrals") {
    const LogGrid g{-30.0, 5.0, 500};
    const cplx a(2.3, 0.7), b(1.6, -0.4);
    cplx one = radial_integral_1d(
        [&](double y) { return std::exp(a * std::log(y) - y); }, g);
    CHECK(rel(one, gamma(a)) < 1e-10);
    cplx two = radial_integral_2d(
        [&](double y1, double y2) {
            return std::exp(a * std::log(y1) + b * std::log(y2) - y1 - y2);
        },
        g, g);
    CHECK(rel(two, gamma(a) * gamma(b)) < 1e-10);
}

TEST_CASE("quadrature endpoint guard rejects grids that truncate the "
          "integrand") {
    const LogGrid narrow{-1.0, 1.0, 50};
    CHECK_THROWS_AS(
        radial_integral_1d(
            [](double y) { return std::exp(2.0 * std::log(y) - y); }, narrow),
        ConvergenceRangeError);
    CHECK_THROWS_AS(
        radial_integral_2d(
            [](double y1, double y2) {
                return std::exp(2.0 * std::log(y1 * y2) - y1 - y2);
            },
            narrow, narrow),
        ConvergenceRangeError);
}

// ---------------------------------------------------------------------------
// GL(2) x GL(1)
// ---------------------------------------------------------------------------

TEST_CASE("GL(2,R) x GL(1,R): zeta equals the twisted L-factor on random "
          "draws") {
    std::mt19937 rng(20240901);
    const ZetaConfig cfg = config_1d();
    for (int draw = 0; draw < 10; ++draw) {
        RealGL2Rep rep;
        if (draw % 3 == 2) {
            rep = gl2r_discrete(draw_nu(rng), 2 + int(rng() % 3));
        } else {
            int d1 = int(rng() % 2), d2 = int(rng() % 2);
            if (d1 < d2) std::swap(d1, d2);
            rep = gl2r_principal(draw_nu(rng), d1, draw_nu(rng), d2);
        }
        const cplx nu_p = draw_nu(rng);
        const int delta_p = int(rng() % 2);
        const int eps = (rng() & 1) ? 1 : -1;
        const WeilParam tw = gl1_twist(rep, nu_p, delta_p);
        check_ratio(
            [&](cplx s) {
                return zeta_gl2_gl1(rep, nu_p, delta_p, eps, s, cfg);
            },
            [&](cplx s) { return l_factor(tw, s); }, 1e-8);
    }
}

TEST_CASE("GL(2,C) x GL(1,C): zeta equals (eps i)^{-d'} times the twisted "
          "L-factor") {
    std::mt19937 rng(20240902);
    const ZetaConfig cfg = config_1d();
    for (int draw = 0; draw < 10; ++draw) {
        int d1 = int(rng() % 5) - 2, d2 = int(rng() % 5) - 2;
        if (d1 < d2) std::swap(d1, d2);
        const auto rep = glc_principal({{draw_nu(rng), d1}, {draw_nu(rng), d2}});
        const cplx nu_p = draw_nu(rng);
        const int d_p = int(rng() % 7) - 3;
        const int eps = (rng() & 1) ? 1 : -1;
        const WeilParam tw = gl1_twist(rep, nu_p, d_p);
        // (eps i)^{-d'}
        cplx c = 1.0;
        const cplx ei(0.0, double(eps));
        for (int k = 0; k < ((-d_p) % 4 + 4) % 4; ++k) c *= ei;
        check_ratio(
            [&](cplx s) { return zeta_gl2_gl1(rep, nu_p, d_p, eps, s, cfg); },
            [&](cplx s) { return c * l_factor(tw, s); }, 1e-8);
    }
}

// ---------------------------------------------------------------------------
// GL(2) x GL(2)
// ---------------------------------------------------------------------------

TEST_CASE("GL(2,R) x GL(2,R): every case of the pairing equals the "
          "Rankin-Selberg L-factor") {
    std::mt19937 rng(20240903);
    const ZetaConfig cfg = config_1d();
    const cplx n1 = draw_nu(rng), n2 = draw_nu(rng);
    const cplx m1 = draw_nu(rng), m2 = draw_nu(rng);
    struct Named {
        const char* what;
        RealGL2Rep a, b;
        double tol;
    };
    // Closed-form K-Bessel cases at 1e-6; cases built on the contour-table
    // family at 1e-5.
    const Named cases[] = {
        {"ps x ps, all parities equal", gl2r_principal(n1, 0, n2, 0),
         gl2r_principal(m1, 0, m2, 0), 1e-6},
        {"ps x ps, first pair odd", gl2r_principal(n1, 1, n2, 1),
         gl2r_principal(m1, 0, m2, 0), 1e-5},
        {"ps x ps, odd pair second (swap rule)", gl2r_principal(n1, 0, n2, 0),
         gl2r_principal(m1, 1, m2, 1), 1e-5},
        {"ps x ps, mixed parities", gl2r_principal(n1, 1, n2, 0),
         gl2r_principal(m1, 1, m2, 0), 1e-6},
        {"ps x ds", gl2r_principal(n1, 1, n2, 0), gl2r_discrete(m1, 3), 1e-6},
        {"ds x ps (swap rule)", gl2r_discrete(n1, 2),
         gl2r_principal(m1, 0, m2, 0), 1e-6},
        {"ds x ds, kappa >= kappa'", gl2r_discrete(n1, 4),
         gl2r_discrete(m1, 2), 1e-6},
        {"ds x ds, kappa < kappa' (swap rule)", gl2r_discrete(n1, 2),
         gl2r_discrete(m1, 5), 1e-6},
    };
    for (const auto& c : cases) {
        CAPTURE(c.what);
        for (int eps : {1, -1}) {
            check_ratio(
                [&](cplx s) { return zeta_gl2_gl2(c.a, c.b, eps, s, cfg); },
                [&](cplx s) {
                    return rankin_l(RepParam(c.a), RepParam(c.b), s);
                },
                c.tol);
        }
    }
}

TEST_CASE("GL(2,R) x GL(2,R): random draws") {
    std::mt19937 rng(20240904);
    const ZetaConfig cfg = config_1d();
    for (int draw = 0; draw < 10; ++draw) {
        auto pick = [&]() -> RealGL2Rep {
            if (rng() % 3 == 0) return gl2r_discrete(draw_nu(rng), 2 + int(rng() % 3));
            int d1 = int(rng() % 2), d2 = int(rng() % 2);
            if (d1 < d2) std::swap(d1, d2);
            return gl2r_principal(draw_nu(rng), d1, draw_nu(rng), d2);
        };
        const RealGL2Rep a = pick(), b = pick();
        const int eps = (rng() & 1) ? 1 : -1;
        check_ratio(
            [&](cplx s) { return zeta_gl2_gl2(a, b, eps, s, cfg); },
            [&](cplx s) { return rankin_l(RepParam(a), RepParam(b), s); },
            1e-5);
    }
}

TEST_CASE("GL(2,C) x GL(2,C): zeta equals C(chi,chi') times the "
          "Rankin-Selberg L-factor") {
    std::mt19937 rng(20240905);
    const ZetaConfig cfg = config_c22();
    for (int draw = 0; draw < 10; ++draw) {
        int d1 = int(rng() % 4) - 1, d2 = int(rng() % 4) - 1;
        if (d1 < d2) std::swap(d1, d2);
        int e1 = int(rng() % 4) - 2, e2 = int(rng() % 4) - 2;
        if (e1 < e2) std::swap(e1, e2);
        const auto a = glc_principal({{draw_nu(rng), d1}, {draw_nu(rng), d2}});
        const auto b = glc_principal({{draw_nu(rng), e1}, {draw_nu(rng), e2}});
        const int eps = (rng() & 1) ? 1 : -1;
        const double c = c22_constant(a, b);
        CAPTURE(d1);
        CAPTURE(d2);
        CAPTURE(e1);
        CAPTURE(e2);
        check_ratio(
            [&](cplx s) { return zeta_gl2_gl2(a, b, eps, s, cfg); },
            [&](cplx s) { return c * rankin_l(RepParam(a), RepParam(b), s); },
            1e-6);
    }
}

TEST_CASE("GL(2,C) x GL(2,C): the proportionality constant at plain "
          "character data") {
    // With d = (d1, 0) and d' = (0, -d1) the window data a_i, b_i all vanish
    // and the constant reduces to
    //   (-1)^{d2'} (d1 - d2)! (d1' - d2')! / ((d1 + d1' + 1)! (d1 + d1')!)
    //   = (-1)^{d1} / (d1 + 1).
    const cplx u(0.11, 0.21), v(-0.07, -0.13);
    auto first = [&](int d) { return glc_principal({{u, d}, {v, 0}}); };
    auto second = [&](int d) { return glc_principal({{u, 0}, {v, -d}}); };
    CHECK(c22_constant(first(1), second(1)) == doctest::Approx(-0.5));
    CHECK(c22_constant(first(2), second(2)) == doctest::Approx(1.0 / 3.0));
    CHECK(c22_constant(first(0), second(0)) == doctest::Approx(1.0));
}

// ---------------------------------------------------------------------------
// GL(3) x GL(2)
// ---------------------------------------------------------------------------

TEST_CASE("GL(3) x GL(2): Schur orthogonality forces exact zero off the "
          "carried K2-type") {
    const ZetaConfig cfg = config_r32();
    auto rep3 = gl3r_principal(cplx(0.1, 0.15), 1, cplx(-0.04, -0.08), 0,
                               cplx(-0.06, -0.07), 0);
    auto rep2 = gl2r_principal(cplx(0.05, -0.07), 1, cplx(-0.09, 0.11), 0);
    // The pairing lives at lambda = (1, 0); any other K2-type on the GL(3)
    // side, or an index pair with vanishing invariant pairing, gives 0.
    CHECK(zeta_gl3_gl2(rep3, rep2, 1, {3, 0}, 3, {1, 0}, -1, cplx(1.5), cfg) ==
          cplx(0.0));
    CHECK(zeta_gl3_gl2(rep3, rep2, 1, {1, 0}, 1, {1, 0}, 1, cplx(1.5), cfg) ==
          cplx(0.0));

    auto rep3c = glc_principal({{cplx(0.1, 0.15), 1},
                                {cplx(-0.04, -0.08), 0},
                                {cplx(-0.06, -0.07), -1}});
    auto rep2c = glc_principal({{cplx(0.05, -0.07), 0},
                                {cplx(-0.09, 0.11), -2}});
    const auto lam = c32_lambda(rep3c, rep2c);
    const std::array<int, 2> tilde{-lam[1], -lam[0]};
    CHECK(zeta_gl3_gl2(rep3c, rep2c, 1, {lam[0] + 1, lam[1]}, 0, tilde, 0,
                       cplx(1.5), cfg) == cplx(0.0));
    // Mismatched GL(2)-side K2-type is a caller error, not a zero.
    CHECK_THROWS_AS(zeta_gl3_gl2(rep3c, rep2c, 1, lam, 0,
                                 {tilde[0] + 1, tilde[1]}, 0, cplx(1.5), cfg),
                    ConstraintViolation);
}

TEST_CASE("GL(3,C) x GL(2,C): carried K2-type and theorem constant") {
    const cplx u1(0.10, 0.15), u2(-0.04, -0.08), u3 = -u1 - u2;
    const cplx v1(0.05, -0.07), v2(-0.09, 0.11);
    auto sph3 = glc_principal({{u1, 0}, {u2, 0}, {u3, 0}});
    auto sph2 = glc_principal({{v1, 0}, {v2, 0}});
    CHECK(c32_lambda(sph3, sph2) == std::array<int, 2>{0, 0});
    CHECK(c32_constant(sph3, sph2) == doctest::Approx(2.0));

    auto mid3 = glc_principal({{u1, 1}, {u2, 1}, {u3, 0}});
    auto mid2 = glc_principal({{v1, 0}, {v2, -2}});
    CHECK(c32_lambda(mid3, mid2) == std::array<int, 2>{2, 0});
    CHECK(c32_constant(mid3, mid2) == doctest::Approx(4.0 / 3.0));

    auto lo3 = glc_principal({{u1, 1}, {u2, 0}, {u3, -1}});
    auto lo2 = glc_principal({{v1, -2}, {v2, -3}});
    CHECK(c32_lambda(lo3, lo2) == std::array<int, 2>{4, 1});
    CHECK(c32_constant(lo3, lo2) == doctest::Approx(0.5));
}

TEST_CASE("GL(3,R) x GL(2,R): the normalized pairing equals the "
          "Rankin-Selberg L-factor") {
    auto rep3 = gl3r_generalized(cplx(0.10, 0.15), 2, cplx(-0.04, -0.08), 1);
    auto rep2 = gl2r_discrete(cplx(0.05, -0.07), 3);
    Gl3Gl2Engine eng(rep3, rep2, 1, config_r32());
    CHECK(eng.constant() == cplx(1.0));
    for (double sr : {1.5, 2.0}) {
        CHECK(rel(eng.value(cplx(sr)), eng.expected(cplx(sr))) < 1e-4);
    }
}

TEST_CASE("GL(3,C) x GL(2,C): the normalized pairing equals "
          "C(chi,chi') times the L-factor") {
    const cplx u1(0.10, 0.15), u2(-0.04, -0.08), u3 = -u1 - u2;
    auto rep3 = glc_principal({{u1, 1}, {u2, 1}, {u3, 0}});
    auto rep2 = glc_principal({{cplx(0.05, -0.07), 0}, {cplx(-0.09, 0.11), -2}});
    Gl3Gl2Engine eng(rep3, rep2, 1, config_c32());
    CHECK(eng.lambda() == std::array<int, 2>{2, 0});
    for (double sr : {1.5, 2.0}) {
        CHECK(rel(eng.value(cplx(sr)), eng.expected(cplx(sr))) < 1e-4);
    }
}

// ---------------------------------------------------------------------------
// Suite verification
// ---------------------------------------------------------------------------

TEST_CASE("verify_zeta: empty suite") {
    CHECK(verify_zeta({}, {}).empty());
}

TEST_CASE("verify_zeta: per-sample reports and error isolation") {
    ZetaConfig cfg = config_1d();
    cfg.tol = 1e-8;
    ZetaCase good;
    good.pairing = "r21";
    good.rep = gl2r_principal(cplx(0.1, 0.2), 0, cplx(-0.05, -0.1), 0);
    good.nu_p = cplx(0.03, 0.04);
    good.k_p = 1;
    good.s_samples = {kS[0], kS[1], kS[2]};
    good.label = "generic principal series";

    // Divergent sample: at Re(s) <= 0 the radial integral has no decay at
    // y -> 0, so the endpoint guard must fire for that report only.
    ZetaCase bad = good;
    bad.s_samples = {cplx(-0.5, 0.0)};
    bad.label = "divergent s";

    // Representation kind not matching the pairing is a setup error.
    ZetaCase mismatched = good;
    mismatched.rep = glc_principal({{cplx(0.1), 0}, {cplx(-0.1), 0}});
    mismatched.s_samples = {kS[0]};
    mismatched.label = "wrong field";

    auto reports = verify_zeta({good, bad, mismatched}, cfg);
    REQUIRE(reports.size() == 5);
    for (int i = 0; i < 3; ++i) {
        CHECK(reports[i].pass);
        CHECK(reports[i].error.empty());
        CHECK(reports[i].rel_error <= cfg.tol);
        CHECK(reports[i].label == "generic principal series");
    }
    CHECK(!reports[3].pass);
    CHECK(!reports[3].error.empty());
    CHECK(!reports[4].pass);
    CHECK(!reports[4].error.empty());
}
