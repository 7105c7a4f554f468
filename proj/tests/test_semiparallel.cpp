#include <doctest.h>

#include <cmath>

#include "wintgen/invariants.hpp"
#include "wintgen/rng.hpp"
#include "wintgen/semiparallel.hpp"
#include "wintgen/verify.hpp"
#include "wintgen/vranceanu.hpp"

using namespace wintgen;

namespace {

SurfacePatch first_kind_patch() {
    const ProfileFamily fam = first_kind_profile(1.0, 0.0);
    return vranceanu_patch(fam.r, Domain{0.0, 2 * M_PI, fam.v_min, fam.v_max});
}

}  // namespace

TEST_CASE("umbilical points have vanishing curvature action") {
    const SecondFundamentalForm sphere = surface_point_sff(make_unit_sphere_patch(4), 0.5, 0.3);
    const double K = gaussian_curvature(sphere);
    for (const SemiparallelResidual& res :
         {curvature_action_direct(sphere, K), curvature_action_lemma(sphere, K)}) {
        CHECK(norm(res.T11) <= 1e-10);
        CHECK(norm(res.T12) <= 1e-10);
        CHECK(norm(res.T22) <= 1e-10);
        CHECK(is_semiparallel(res, 1e-8));
    }
}

TEST_CASE("product torus r = 1 is semiparallel (a = b)") {
    const SurfacePatch patch =
        vranceanu_patch(parse_expression("1"), Domain{-1.0, 7.0, -1.5, 1.5});
    const SecondFundamentalForm sff = surface_point_sff(patch, 2.0, -0.7);
    const SemiparallelResidual res = curvature_action_direct(sff, gaussian_curvature(sff));
    CHECK(res.norm <= 1e-12);
}

TEST_CASE("first-kind point: T11 = -6 N2 and friends") {
    const SecondFundamentalForm sff = surface_point_sff(first_kind_patch(), 0.7, 0.0);
    const double K = gaussian_curvature(sff);
    const SemiparallelResidual direct = curvature_action_direct(sff, K);
    const SemiparallelResidual lemma = curvature_action_lemma(sff, K);

    const Vec& N1 = sff.frame.N[0];
    const Vec& N2 = sff.frame.N[1];
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(direct.T11[i] - (-6.0) * N2[i]) <= 1e-10);
        CHECK(std::abs(direct.T12[i] - 2.0 * N1[i]) <= 1e-10);
        CHECK(std::abs(direct.T22[i] - (-2.0) * N2[i]) <= 1e-10);
        CHECK(std::abs(direct.T11[i] - lemma.T11[i]) <= 1e-10);
        CHECK(std::abs(direct.T12[i] - lemma.T12[i]) <= 1e-10);
        CHECK(std::abs(direct.T22[i] - lemma.T22[i]) <= 1e-10);
    }
    CHECK(direct.norm == doctest::Approx(std::sqrt(36.0 + 2.0 * 4.0 + 4.0)));
    CHECK(!is_semiparallel(direct, 1e-8));
    CHECK(direct.norm >= 6.0);
}

TEST_CASE("direct and lemma routes agree on random tensors") {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 2000; ++k) {
        Rng rng = Rng::for_case(31337, k);
        const SecondFundamentalForm sff = random_sff(rng, 4 + (k % 5));
        const double K = gaussian_curvature(sff);
        const SemiparallelResidual a = curvature_action_direct(sff, K);
        const SemiparallelResidual b = curvature_action_lemma(sff, K);
        for (std::size_t i = 0; i < a.T11.size(); ++i) {
            worst = std::max(worst, std::abs(a.T11[i] - b.T11[i]));
            worst = std::max(worst, std::abs(a.T12[i] - b.T12[i]));
            worst = std::max(worst, std::abs(a.T22[i] - b.T22[i]));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("residual vectors stay in the normal space") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        Rng rng = Rng::for_case(808, k);
        const SurfacePatch patch = random_polynomial_patch(rng, 5);
        const double u = rng.uniform(-0.8, 0.8);
        const double v = rng.uniform(-0.8, 0.8);
        try {
            const SecondFundamentalForm sff = surface_point_sff(patch, u, v);
            const SemiparallelResidual res =
                curvature_action_direct(sff, gaussian_curvature(sff));
            const double scale = std::max(1.0, res.norm);
            for (const Vec* t : {&res.T11, &res.T12, &res.T22}) {
                CHECK(std::abs(dot(*t, sff.frame.X1)) <= 1e-9 * scale);
                CHECK(std::abs(dot(*t, sff.frame.X2)) <= 1e-9 * scale);
            }
        } catch (const DegeneratePointError&) {
        }
    }
}

TEST_CASE("residual norm is gauge covariant") {
    for (std::uint64_t k = 0; k < 50; ++k) {
        Rng rng = Rng::for_case(4242, k);
        const SecondFundamentalForm sff = random_sff(rng, 6);
        const double K = gaussian_curvature(sff);
        const double base = curvature_action_direct(sff, K).norm;

        // rotate the tangent pair; h vectors transform tensorially
        const double t = rng.uniform(0.0, 2 * M_PI);
        const double c = std::cos(t), s = std::sin(t);
        SecondFundamentalForm rot = sff;
        rot.h11 = zeros(6);
        rot.h12 = zeros(6);
        rot.h22 = zeros(6);
        axpy(c * c, sff.h11, rot.h11);
        axpy(2 * c * s, sff.h12, rot.h11);
        axpy(s * s, sff.h22, rot.h11);
        axpy(-c * s, sff.h11, rot.h12);
        axpy(c * c - s * s, sff.h12, rot.h12);
        axpy(c * s, sff.h22, rot.h12);
        axpy(s * s, sff.h11, rot.h22);
        axpy(-2 * c * s, sff.h12, rot.h22);
        axpy(c * c, sff.h22, rot.h22);
        for (std::size_t a = 0; a < rot.normal_count(); ++a) {
            rot.c11[a] = dot(rot.h11, rot.frame.N[a]);
            rot.c12[a] = dot(rot.h12, rot.frame.N[a]);
            rot.c22[a] = dot(rot.h22, rot.frame.N[a]);
        }
        const double rotated = curvature_action_direct(rot, K).norm;
        CHECK(rotated == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("witness on the sphere: all five equations hold") {
    const SecondFundamentalForm sff = surface_point_sff(make_unit_sphere_patch(4), 0.2, 0.5);
    const WitnessReport w = wintgen_semiparallel_witness(sff, 1e-8);
    CHECK(w.umbilical);
    CHECK(w.semiparallel);
    CHECK(w.mu == 0.0);
    CHECK(w.kn <= 1e-12);
    CHECK(w.mu_vanishes);
    CHECK(w.kn_vanishes);
    for (bool h : w.holds) CHECK(h);
}

TEST_CASE("witness on the first-kind point: equations 4 and 5 fail by 6 and 2") {
    const SecondFundamentalForm sff = surface_point_sff(first_kind_patch(), 0.7, 0.0);
    const WitnessReport w = wintgen_semiparallel_witness(sff, 1e-8);
    CHECK(!w.semiparallel);
    CHECK(std::abs(std::abs(w.residuals[3]) - 6.0) <= 1e-9);
    CHECK(std::abs(std::abs(w.residuals[4]) - 2.0) <= 1e-9);
    CHECK(!w.holds[3]);
    CHECK(!w.holds[4]);
    CHECK(w.holds[1]);  // lambda2 = 0 makes equation 2 hold
    CHECK(w.mu == doctest::Approx(1.0));
}

TEST_CASE("witness rejects non-ideal points") {
    const SurfacePatch torus =
        vranceanu_patch(parse_expression("1"), Domain{-1.0, 7.0, -1.5, 1.5});
    const SecondFundamentalForm sff = surface_point_sff(torus, 0.3, 0.2);
    CHECK_THROWS_AS(wintgen_semiparallel_witness(sff, 1e-8), NotWintgenIdealError);
}

TEST_CASE("synthetic mu = 0 tensors: witness reports mu = 0 and KN = 0") {
    const SuiteResult r = run_witness(3, 200);
    CHECK(r.pass);
}
