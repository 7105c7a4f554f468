#include <doctest.h>

#include <cmath>

#include "wintgen/errors.hpp"
#include "wintgen/invariants.hpp"
#include "wintgen/rng.hpp"
#include "wintgen/verify.hpp"
#include "wintgen/vranceanu.hpp"

using namespace wintgen;

TEST_CASE("profile scalars on frozen cases") {
    SUBCASE("r = 1") {
        const VranceanuProfile p{parse_expression("1")};
        const ProfilePoint pt = profile_functions(p, 0.37);
        CHECK(pt.a == doctest::Approx(1.0));
        CHECK(pt.b == doctest::Approx(1.0));
        CHECK(pt.k == doctest::Approx(0.0));
        CHECK(pt.A == doctest::Approx(1.0));
    }
    SUBCASE("first-kind profile at v = 0: a = 1, b = 3") {
        const VranceanuProfile p{parse_expression("sqrt(cos(2*v))")};
        const ProfilePoint pt = profile_functions(p, 0.0);
        CHECK(pt.r == doctest::Approx(1.0));
        CHECK(pt.r1 == doctest::Approx(0.0));
        CHECK(pt.r2 == doctest::Approx(-2.0));
        CHECK(pt.a == doctest::Approx(1.0));
        CHECK(pt.b == doctest::Approx(3.0));
    }
    SUBCASE("second-kind profile at v = 0: a = 1, b = -1") {
        const VranceanuProfile p{parse_expression("1/sqrt(cos(2*v))")};
        const ProfilePoint pt = profile_functions(p, 0.0);
        CHECK(pt.r2 == doctest::Approx(2.0));
        CHECK(pt.a == doctest::Approx(1.0));
        CHECK(pt.b == doctest::Approx(-1.0));
    }
}

TEST_CASE("patch construction") {
    const SurfacePatch p = vranceanu_patch(parse_expression("1"), Domain{-1, 7, -1.5, 1.5});
    CHECK(p.ambient_dim == 4);
    CHECK(p.family == PatchFamily::Vranceanu);
    const Jet2 jet = p.eval_jet2(0.0, 0.0);
    CHECK(jet.X[0] == doctest::Approx(1.0));
    CHECK(jet.X[1] == doctest::Approx(0.0));

    CHECK_NOTHROW(vranceanu_patch(parse_expression("sqrt(cos(2*v))"),
                                  Domain{0, 6.28, -0.7, 0.7}));
    CHECK_THROWS_AS(vranceanu_patch(Expression::constant(0.0), Domain{0, 1, 0, 1}),
                    InputError);
    // sign change in the profile means a zero inside the domain
    CHECK_THROWS_AS(vranceanu_patch(parse_expression("v"), Domain{0, 1, -1, 1}), InputError);
    // the profile must not depend on u
    CHECK_THROWS_AS(vranceanu_patch(parse_expression("1+u"), Domain{0, 1, -1, 1}), InputError);
}

TEST_CASE("closed-form invariants") {
    const VranceanuProfile torus{parse_expression("1")};
    const ClosedFormInvariants t = closed_form_invariants(torus, 0.4);
    CHECK(t.K == doctest::Approx(0.0));
    CHECK(t.KN_signed == doctest::Approx(0.0));
    CHECK(t.H2 == doctest::Approx(1.0));

    const VranceanuProfile first{parse_expression("sqrt(cos(2*v))")};
    const ClosedFormInvariants f = closed_form_invariants(first, 0.0);
    CHECK(f.K == doctest::Approx(2.0));
    CHECK(f.H2 == doctest::Approx(4.0));

    const VranceanuProfile expo{parse_expression("exp(0.25*v)")};
    for (double v : {-0.8, 0.0, 1.3}) {
        const ClosedFormInvariants e = closed_form_invariants(expo, v);
        CHECK(std::abs(e.K) <= 1e-12);  // a = b for exponential profiles
    }
}

TEST_CASE("family generators") {
    SUBCASE("first kind (1, 0): sqrt(cos(2v)) on (-pi/4, pi/4)") {
        const ProfileFamily fam = first_kind_profile(1.0, 0.0);
        CHECK(fam.r.to_string() == "sqrt(cos(2*v))");
        CHECK(fam.v_min == doctest::Approx(-M_PI / 4).epsilon(1e-6));
        CHECK(fam.v_max == doctest::Approx(M_PI / 4).epsilon(1e-6));
        CHECK(fam.v_max < M_PI / 4);  // open interval, margin inside
    }
    SUBCASE("first kind (0, -1): sqrt(sin(2v)) on (0, pi/2)") {
        const ProfileFamily fam = first_kind_profile(0.0, -1.0);
        CHECK(fam.r.to_string() == "sqrt(sin(2*v))");
        CHECK(fam.v_min >= 0.0);
        CHECK(fam.v_min <= 1e-4);
        CHECK(fam.v_max == doctest::Approx(M_PI / 2).epsilon(1e-4));
    }
    SUBCASE("second kind (0, -1): 1/sqrt(cos(2v))") {
        const ProfileFamily fam = second_kind_profile(0.0, -1.0);
        CHECK(fam.r.to_string() == "1/sqrt(cos(2*v))");
        CHECK(fam.v_min == doctest::Approx(-M_PI / 4).epsilon(1e-6));
    }
    SUBCASE("second kind (1, 0): 1/sqrt(sin(2v)) on (0, pi/2)") {
        const ProfileFamily fam = second_kind_profile(1.0, 0.0);
        CHECK(fam.r.to_string() == "1/sqrt(sin(2*v))");
        CHECK(fam.v_min >= 0.0);
        CHECK(fam.v_max <= M_PI / 2);
    }
    SUBCASE("exponential") {
        const ProfileFamily fam = exponential_profile(1.0, 0.1);
        CHECK(fam.r.to_string() == "exp(0.1*v)");
        const ProfileFamily scaled = exponential_profile(2.0, -0.3);
        CHECK(scaled.r.eval(0.0, 1.0) == doctest::Approx(2.0 * std::exp(-0.3)));
    }
    SUBCASE("degenerate constants rejected") {
        CHECK_THROWS_AS(first_kind_profile(0.0, 0.0), InputError);
        CHECK_THROWS_AS(second_kind_profile(0.0, 0.0), InputError);
        CHECK_THROWS_AS(exponential_profile(0.0, 1.0), InputError);
        CHECK_THROWS_AS(make_family("spiral", 1.0, 0.0), InputError);
    }
    SUBCASE("radicand stays positive across the generated interval") {
        for (auto [c1, c2] : {std::pair{1.0, 0.0}, {0.0, -1.0}, {0.7, 0.7}, {-0.2, 0.9}}) {
            const ProfileFamily fam = first_kind_profile(c1, c2);
            for (int i = 0; i <= 64; ++i) {
                const double v = fam.v_min + (fam.v_max - fam.v_min) * i / 64.0;
                CHECK(fam.radicand.eval(0.0, v) > 0.0);
            }
        }
    }
}

TEST_CASE("profile ODE residuals on frozen cases") {
    const VranceanuProfile first{parse_expression("sqrt(cos(2*v))")};
    const VranceanuProfile second{parse_expression("1/sqrt(cos(2*v))")};
    const VranceanuProfile flat{parse_expression("1")};
    const VranceanuProfile expo{parse_expression("exp(v)")};

    CHECK(std::abs(ode_residual_first(first, 0.0)) <= 1e-12);
    CHECK(ode_residual_first(flat, 0.3) == doctest::Approx(2.0));
    CHECK(ode_residual_first(expo, 0.3) == doctest::Approx(4.0 * std::exp(0.6)));

    CHECK(std::abs(ode_residual_second(second, 0.0)) <= 1e-12);
    CHECK(ode_residual_second(flat, 0.3) == doctest::Approx(2.0));
    CHECK(ode_residual_second(first, 0.0) == doctest::Approx(4.0));

    // the ODEs hold identically along their families, not just at v = 0
    Rng rng(64);
    for (int k = 0; k < 100; ++k) {
        const double v1 = rng.uniform(-M_PI / 4 + 0.05, M_PI / 4 - 0.05);
        CHECK(std::abs(ode_residual_first(first, v1)) <= 1e-10);
        CHECK(std::abs(ode_residual_second(second, v1)) <= 1e-10);
    }
}

TEST_CASE("closed semiparallel residual coefficients") {
    const VranceanuProfile expo{parse_expression("exp(0.7*v)")};
    for (double v : {-0.5, 0.0, 0.8}) {
        const auto c = semiparallel_residual_closed(expo, v);
        CHECK(std::abs(c[0]) <= 1e-12);
        CHECK(std::abs(c[1]) <= 1e-12);
        CHECK(std::abs(c[2]) <= 1e-12);
    }

    const VranceanuProfile first{parse_expression("sqrt(cos(2*v))")};
    const auto cf = semiparallel_residual_closed(first, 0.0);  // a=1, b=3
    CHECK(cf[0] == doctest::Approx(-6.0));
    CHECK(cf[1] == doctest::Approx(2.0));
    CHECK(cf[2] == doctest::Approx(-2.0));

    const VranceanuProfile second{parse_expression("1/sqrt(cos(2*v))")};
    const auto cs = semiparallel_residual_closed(second, 0.0);  // a=1, b=-1
    CHECK(cs[0] == doctest::Approx(6.0));
    CHECK(cs[1] == doctest::Approx(6.0));
    CHECK(cs[2] == doctest::Approx(-6.0));
}

TEST_CASE("generic pipeline reproduces the closed forms along the families") {
    const SuiteResult r = run_vranceanu(7);
    CHECK(r.pass);
    for (const CheckResult& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("exponential family: semiparallel, flat, not umbilical") {
    const ProfileFamily fam = exponential_profile(1.0, 0.1);
    const SurfacePatch patch =
        vranceanu_patch(fam.r, Domain{0.0, 2 * M_PI, fam.v_min, fam.v_max});
    const SecondFundamentalForm sff = surface_point_sff(patch, 1.0, 0.5);
    const CurvatureInvariants inv = curvature_invariants(sff);
    const SemiparallelResidual res = curvature_action_direct(sff, inv.K);
    const PointClassification pc = classify_point(sff, res);
    CHECK(pc.flags.semiparallel);
    CHECK(pc.flags.flat_normal);
    CHECK(!pc.flags.totally_umbilical);
    CHECK(std::abs(inv.K) <= 1e-12);
    CHECK(inv.KN <= 1e-12);
}

TEST_CASE("minimality of the second-kind family") {
    const ProfileFamily fam = second_kind_profile(0.0, -1.0);
    const SurfacePatch patch =
        vranceanu_patch(fam.r, Domain{0.0, 2 * M_PI, fam.v_min, fam.v_max});
    Rng rng(21);
    for (int k = 0; k < 50; ++k) {
        const double u = rng.uniform(0.0, 6.2);
        const double v = rng.uniform(-M_PI / 4 + 0.05, M_PI / 4 - 0.05);
        const SecondFundamentalForm sff = surface_point_sff(patch, u, v);
        CHECK(norm(mean_curvature_vector(sff)) <= 1e-9);
        const CurvatureInvariants inv = curvature_invariants(sff);
        REQUIRE(inv.KN_signed.has_value());
        CHECK(*inv.KN_signed < 0.0);
    }
}
