#include "wintgen/verify.hpp"

#include <algorithm>
#include <cmath>

#include "wintgen/report.hpp"
#include "wintgen/semiparallel.hpp"
#include "wintgen/vranceanu.hpp"

namespace wintgen {

namespace {

AdaptedFrame frame_from_vectors(std::vector<Vec> vectors) {
    AdaptedFrame fr;
    fr.X1 = vectors[0];
    fr.X2 = vectors[1];
    fr.N.assign(vectors.begin() + 2, vectors.end());
    fr.a1 = 1.0;
    fr.b1 = 0.0;
    fr.a2 = 0.0;
    fr.b2 = 1.0;
    return fr;
}

double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double max_component_gap(const SemiparallelResidual& a, const SemiparallelResidual& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.T11.size(); ++i) {
        worst = std::max(worst, std::abs(a.T11[i] - b.T11[i]));
        worst = std::max(worst, std::abs(a.T12[i] - b.T12[i]));
        worst = std::max(worst, std::abs(a.T22[i] - b.T22[i]));
    }
    return worst;
}

}  // namespace

SecondFundamentalForm random_sff(Rng& rng, std::size_t ambient_dim) {
    const std::size_t m = ambient_dim - 2;
    const AdaptedFrame fr = frame_from_vectors(random_orthonormal_frame(rng, ambient_dim, ambient_dim));
    std::vector<double> c11(m), c12(m), c22(m);
    for (std::size_t a = 0; a < m; ++a) {
        c11[a] = rng.uniform(-2.0, 2.0);
        c12[a] = rng.uniform(-2.0, 2.0);
        c22[a] = rng.uniform(-2.0, 2.0);
    }
    return sff_from_coefficients(fr, c11, c12, c22);
}

SurfacePatch random_polynomial_patch(Rng& rng, std::size_t ambient_dim) {
    const Expression u = Expression::var_u();
    const Expression v = Expression::var_v();

    auto monomial = [&](double c, int i, int j) {
        Expression term = Expression::constant(c);
        if (i == 1) term = term * u;
        if (i >= 2) term = term * Expression::binary(BinaryOp::Pow, u, Expression::constant(i));
        if (j == 1) term = term * v;
        if (j >= 2) term = term * Expression::binary(BinaryOp::Pow, v, Expression::constant(j));
        return term;
    };

    SurfacePatch p;
    p.label = "fuzz-poly";
    p.ambient_dim = ambient_dim;
    p.domain = {-1.0, 1.0, -1.0, 1.0};
    for (std::size_t comp = 0; comp < ambient_dim; ++comp) {
        Expression sum;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                const Expression term = monomial(rng.uniform(-1.0, 1.0), i, j);
                sum = sum.empty() ? term : sum + term;
            }
        p.components.push_back(sum);
    }
    return p;
}

double brioschi_curvature_fd(const SurfacePatch& patch, double u, double v, double h) {
    auto fff = [&](double uu, double vv) {
        return first_fundamental_form(patch.eval_jet2(uu, vv));
    };
    const FirstFundamentalForm c = fff(u, v);
    const FirstFundamentalForm up = fff(u + h, v), um = fff(u - h, v);
    const FirstFundamentalForm vp = fff(u, v + h), vm = fff(u, v - h);
    const FirstFundamentalForm pp = fff(u + h, v + h), pm = fff(u + h, v - h);
    const FirstFundamentalForm mp = fff(u - h, v + h), mm = fff(u - h, v - h);

    const double Eu = (up.E - um.E) / (2 * h), Ev = (vp.E - vm.E) / (2 * h);
    const double Gu = (up.G - um.G) / (2 * h), Gv = (vp.G - vm.G) / (2 * h);
    const double Fu = (up.F - um.F) / (2 * h), Fv = (vp.F - vm.F) / (2 * h);
    const double Evv = (vp.E - 2 * c.E + vm.E) / (h * h);
    const double Guu = (up.G - 2 * c.G + um.G) / (h * h);
    const double Fuv = (pp.F - pm.F - mp.F + mm.F) / (4 * h * h);

    const double m1[3][3] = {
        {-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev},
        {Fv - 0.5 * Gu, c.E, c.F},
        {0.5 * Gv, c.F, c.G},
    };
    const double m2[3][3] = {
        {0.0, 0.5 * Ev, 0.5 * Gu},
        {0.5 * Ev, c.E, c.F},
        {0.5 * Gu, c.F, c.G},
    };
    return (det3(m1) - det3(m2)) / (c.W2 * c.W2);
}

// ------------------------------------------------------------- lemma 4.1 ---

SuiteResult run_lemma41(std::uint64_t seed, std::size_t count) {
    SuiteResult suite;
    suite.suite = "lemma41";
    suite.seed = seed;

    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::for_case(seed, k);
        const std::size_t n = 4 + (k % 5);  // ambient dims 4..8
        const SecondFundamentalForm sff = random_sff(rng, n);
        const double K = gaussian_curvature(sff);
        const SemiparallelResidual direct = curvature_action_direct(sff, K);
        const SemiparallelResidual lemma = curvature_action_lemma(sff, K);
        worst = std::max(worst, max_component_gap(direct, lemma));
    }
    suite.add({"direct-vs-lemma", count, worst, 1e-10, worst < 1e-10});

    // Closed Vranceanu coefficients against the generic pipeline.
    struct Named {
        const char* text;
        double v_lo, v_hi;
    };
    const Named profiles[] = {
        {"sqrt(cos(2*v))", -M_PI / 4 + 0.05, M_PI / 4 - 0.05},
        {"1/sqrt(cos(2*v))", -M_PI / 4 + 0.05, M_PI / 4 - 0.05},
        {"exp(0.1*v)", -1.0, 1.0},
        {"1", -1.0, 1.0},
        {"1+0.3*sin(v)", -1.0, 1.0},
    };
    double worst_closed = 0.0;
    std::size_t closed_cases = 0;
    Rng rng(seed ^ 0x5ca1ab1e);
    for (const Named& prof : profiles) {
        const Expression r = parse_expression(prof.text);
        const VranceanuProfile vp{r};
        const SurfacePatch patch =
            vranceanu_patch(r, Domain{0.0, 2.0 * M_PI, prof.v_lo - 1e-3, prof.v_hi + 1e-3});
        for (int s = 0; s < 40; ++s) {
            const double u = rng.uniform(0.0, 2.0 * M_PI);
            const double v = rng.uniform(prof.v_lo, prof.v_hi);
            const SecondFundamentalForm sff = surface_point_sff(patch, u, v);
            const SemiparallelResidual gen =
                curvature_action_direct(sff, gaussian_curvature(sff));
            const auto closed = semiparallel_residual_closed(vp, v);
            const Vec& N1 = sff.frame.N[0];
            const Vec& N2 = sff.frame.N[1];
            for (std::size_t i = 0; i < 4; ++i) {
                worst_closed = std::max(worst_closed, std::abs(gen.T11[i] - closed[0] * N2[i]));
                worst_closed = std::max(worst_closed, std::abs(gen.T12[i] - closed[1] * N1[i]));
                worst_closed = std::max(worst_closed, std::abs(gen.T22[i] - closed[2] * N2[i]));
            }
            ++closed_cases;
        }
    }
    suite.add({"vranceanu-closed-coeffs", closed_cases, worst_closed, 1e-9, worst_closed < 1e-9});
    return suite;
}

// -------------------------------------------------------------- DDVV fuzz ---

SuiteResult run_ddvv_fuzz(std::uint64_t seed, std::size_t count) {
    SuiteResult suite;
    suite.suite = "ddvv-fuzz";
    suite.seed = seed;

    double min_defect = 1e300;
    double worst_identity = 0.0;

    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::for_case(seed, k);
        const std::size_t n = 4 + (k % 4);  // ambient dims 4..7

        // Draw patches until one offers a well-conditioned regular point;
        // badly scaled points would only measure float noise, not geometry.
        SecondFundamentalForm sff;
        bool found = false;
        while (!found) {
            const SurfacePatch patch = random_polynomial_patch(rng, n);
            for (int attempt = 0; attempt < 16 && !found; ++attempt) {
                const double u = rng.uniform(-0.9, 0.9);
                const double v = rng.uniform(-0.9, 0.9);
                const Jet2 jet = patch.eval_jet2(u, v);
                const double E = dot(jet.Xu, jet.Xu);
                const double F = dot(jet.Xu, jet.Xv);
                const double G = dot(jet.Xv, jet.Xv);
                const double W2 = E * G - F * F;
                if (!(W2 > 1e-4) || !(W2 > 1e-2 * E * G) || !(E > 1e-2) || !(G > 1e-2))
                    continue;
                sff = second_fundamental_form(jet, adapted_frame(jet));
                found = true;
            }
        }

        const CurvatureInvariants inv = curvature_invariants(sff);
        min_defect = std::min(min_defect, inv.defect);

        const Vec B = sff.half_diff();
        const Vec& C = sff.off_diag();
        const double identity = norm2(B) + norm2(C) - 2.0 * wedge_norm(B, C);
        worst_identity = std::max(worst_identity, std::abs(inv.defect - identity));
    }

    suite.add({"defect-nonnegative", count, min_defect, -1e-8, min_defect >= -1e-8});
    suite.add({"defect-identity", count, worst_identity, 1e-9, worst_identity < 1e-9});
    return suite;
}

// --------------------------------------------------------------- section 5 ---

namespace {

struct FamilyCase {
    SurfacePatch patch;
    VranceanuProfile profile;
    double v_lo, v_hi;
    bool first_kind_solution;
    bool second_kind_solution;
};

FamilyCase family_case(const std::string& text, double v_lo, double v_hi, bool first,
                       bool second) {
    const Expression r = parse_expression(text);
    FamilyCase fc{vranceanu_patch(r, Domain{0.0, 2.0 * M_PI, v_lo - 1e-3, v_hi + 1e-3}),
                  VranceanuProfile{r}, v_lo, v_hi, first, second};
    return fc;
}

}  // namespace

SuiteResult run_vranceanu(std::uint64_t seed) {
    SuiteResult suite;
    suite.suite = "vranceanu";
    suite.seed = seed;

    const double q = M_PI / 4;
    std::vector<FamilyCase> cases;
    cases.push_back(family_case("1", -1.0, 1.0, false, false));
    cases.push_back(family_case("exp(0.1*v)", -1.0, 1.0, false, false));
    cases.push_back(family_case("1+0.3*sin(v)", -1.0, 1.0, false, false));
    cases.push_back(family_case("sqrt(cos(2*v))", -q + 0.05, q - 0.05, true, false));
    cases.push_back(family_case("sqrt(sin(2*v))", 0.05, 2 * q - 0.05, true, false));
    cases.push_back(family_case("1/sqrt(cos(2*v))", -q + 0.05, q - 0.05, false, true));
    cases.push_back(family_case("1/sqrt(sin(2*v))", 0.05, 2 * q - 0.05, false, true));

    Rng rng(seed ^ 0xf00dfeed);
    double worst_prop51 = 0.0;
    std::size_t prop51_count = 0;
    double eq52_violations = 0.0, eq53_violations = 0.0, eq54_violations = 0.0;
    double worst_solution_defect = 0.0, worst_flat_semi = 0.0;
    std::size_t eq_count = 0;

    for (const FamilyCase& fc : cases) {
        for (int s = 0; s < 100; ++s) {
            const double u = rng.uniform(0.0, 2.0 * M_PI);
            const double v = rng.uniform(fc.v_lo, fc.v_hi);

            const SecondFundamentalForm sff = surface_point_sff(fc.patch, u, v);
            const CurvatureInvariants inv = curvature_invariants(sff);
            const ClosedFormInvariants closed = closed_form_invariants(fc.profile, v);

            // Prop 5.1: generic K and signed KN agree with a b - a^2.
            worst_prop51 = std::max(worst_prop51, std::abs(inv.K - closed.K));
            worst_prop51 = std::max(worst_prop51, std::abs(*inv.KN_signed - closed.KN_signed));
            worst_prop51 = std::max(worst_prop51, std::abs(inv.H2 - closed.H2));
            ++prop51_count;

            const SemiparallelResidual res = curvature_action_direct(sff, inv.K);
            const PointClassification pc = classify_point(sff, res);

            // Thm 5.2: ideal of first kind <=> first-kind ODE residual = 0.
            const bool ideal_first = pc.flags.wintgen_ideal && pc.kind == WintgenKind::First;
            const bool ode1_zero = std::abs(ode_residual_first(fc.profile, v)) <= 1e-8;
            if (ideal_first != ode1_zero) eq52_violations += 1.0;

            // Thm 5.3: ideal of second kind and minimal <=> second-kind ODE.
            const bool ideal_second = pc.flags.wintgen_ideal &&
                                      pc.kind == WintgenKind::Second && pc.flags.minimal;
            const bool ode2_zero = std::abs(ode_residual_second(fc.profile, v)) <= 1e-8;
            if (ideal_second != ode2_zero) eq53_violations += 1.0;

            // Cor 5.4: semiparallel <=> a = b <=> r r'' = r'^2 (the
            // exponential-profile ODE), and then the point is flat.
            const ProfilePoint pp = profile_functions(fc.profile, v);
            const bool semi = pc.flags.semiparallel;
            const bool ab_equal = std::abs(pp.a - pp.b) <= 1e-8;
            const bool expo_ode =
                std::abs(pp.r * pp.r2 - pp.r1 * pp.r1) <= 1e-8 * pp.A * pp.A * pp.A;
            if (semi != ab_equal || semi != expo_ode) eq54_violations += 1.0;
            if (semi) worst_flat_semi = std::max({worst_flat_semi, std::abs(inv.K), inv.KN});

            if (fc.first_kind_solution || fc.second_kind_solution)
                worst_solution_defect = std::max(worst_solution_defect, std::abs(inv.defect));
            ++eq_count;
        }
    }

    suite.add({"prop51-closed-forms", prop51_count, worst_prop51, 1e-9, worst_prop51 < 1e-9});
    suite.add({"thm52-equivalence", eq_count, eq52_violations, 0.5, eq52_violations < 0.5});
    suite.add({"thm53-equivalence", eq_count, eq53_violations, 0.5, eq53_violations < 0.5});
    suite.add({"cor54-equivalence", eq_count, eq54_violations, 0.5, eq54_violations < 0.5});
    suite.add({"cor54-semiparallel-flat", eq_count, worst_flat_semi, 1e-9,
               worst_flat_semi < 1e-9});
    suite.add({"solution-defect", eq_count, worst_solution_defect, 1e-9,
               worst_solution_defect < 1e-9});

    // Cor 5.4: the exponential family is semiparallel and flat; a generic
    // perturbation of it is not semiparallel.
    {
        const FamilyCase expo = family_case("exp(0.1*v)", -1.0, 1.0, false, false);
        double worst_norm = 0.0, worst_flat = 0.0;
        for (int s = 0; s < 50; ++s) {
            const double v = -1.0 + 2.0 * s / 49.0;
            const SecondFundamentalForm sff = surface_point_sff(expo.patch, 0.37, v);
            const CurvatureInvariants inv = curvature_invariants(sff);
            const SemiparallelResidual res = curvature_action_direct(sff, inv.K);
            worst_norm = std::max(worst_norm, res.norm);
            worst_flat = std::max({worst_flat, std::abs(inv.K), inv.KN});
        }
        suite.add({"cor54-exponential-semiparallel", 50, worst_norm, 1e-9, worst_norm < 1e-9});
        suite.add({"cor54-exponential-flat", 50, worst_flat, 1e-9, worst_flat < 1e-9});

        const FamilyCase pert = family_case("exp(0.1*v)+0.01*sin(v)", -1.0, 1.0, false, false);
        double max_norm = 0.0;
        for (int s = 0; s < 50; ++s) {
            const double v = -1.0 + 2.0 * s / 49.0;
            const SecondFundamentalForm sff = surface_point_sff(pert.patch, 0.37, v);
            const SemiparallelResidual res =
                curvature_action_direct(sff, gaussian_curvature(sff));
            max_norm = std::max(max_norm, res.norm);
        }
        suite.add({"cor54-perturbed-breaks", 50, max_norm, 1e-4, max_norm > 1e-4});
    }

    // Closed residual coefficients against the generic tensors.
    {
        double worst = 0.0;
        std::size_t cnt = 0;
        for (const FamilyCase& fc : cases) {
            for (int s = 0; s < 25; ++s) {
                const double u = rng.uniform(0.0, 2.0 * M_PI);
                const double v = rng.uniform(fc.v_lo, fc.v_hi);
                const SecondFundamentalForm sff = surface_point_sff(fc.patch, u, v);
                const SemiparallelResidual gen =
                    curvature_action_direct(sff, gaussian_curvature(sff));
                const auto closed = semiparallel_residual_closed(fc.profile, v);
                const Vec& N1 = sff.frame.N[0];
                const Vec& N2 = sff.frame.N[1];
                for (std::size_t i = 0; i < 4; ++i) {
                    worst = std::max(worst, std::abs(gen.T11[i] - closed[0] * N2[i]));
                    worst = std::max(worst, std::abs(gen.T12[i] - closed[1] * N1[i]));
                    worst = std::max(worst, std::abs(gen.T22[i] - closed[2] * N2[i]));
                }
                ++cnt;
            }
        }
        suite.add({"cor54-closed-coeffs", cnt, worst, 1e-9, worst < 1e-9});
    }
    return suite;
}

// -------------------------------------------------------------- Gauss eq ---

SuiteResult run_gauss_eq(std::uint64_t seed) {
    SuiteResult suite;
    suite.suite = "gauss-eq";
    suite.seed = seed;

    struct Case {
        std::string name;
        SurfacePatch patch;
        double u_lo, u_hi, v_lo, v_hi;
    };
    const double q = M_PI / 4;
    std::vector<Case> cases;
    cases.push_back({"sphere", make_unit_sphere_patch(), -1.0, 1.0, -0.8, 0.8});
    cases.push_back({"plane", make_plane_patch(), -5.0, 5.0, -5.0, 5.0});
    {
        const ProfileFamily f = first_kind_profile(1.0, 0.0);
        cases.push_back({"vranceanu-first",
                         vranceanu_patch(f.r, Domain{0.0, 2.0 * M_PI, f.v_min, f.v_max}), 0.1,
                         6.1, -q + 0.25, q - 0.25});
    }
    {
        const ProfileFamily f = second_kind_profile(0.0, -1.0);
        cases.push_back({"vranceanu-second",
                         vranceanu_patch(f.r, Domain{0.0, 2.0 * M_PI, f.v_min, f.v_max}), 0.1,
                         6.1, -q + 0.35, q - 0.35});
    }
    {
        const ProfileFamily f = exponential_profile(1.0, 0.1);
        cases.push_back({"vranceanu-exponential",
                         vranceanu_patch(f.r, Domain{0.0, 2.0 * M_PI, f.v_min, f.v_max}), 0.1,
                         6.1, -1.0, 1.0});
    }

    for (const Case& c : cases) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double u = c.u_lo + (c.u_hi - c.u_lo) * i / 9.0;
                const double v = c.v_lo + (c.v_hi - c.v_lo) * j / 9.0;
                const double extrinsic = gaussian_curvature(surface_point_sff(c.patch, u, v));
                const double intrinsic = brioschi_curvature_fd(c.patch, u, v);
                worst = std::max(worst, std::abs(extrinsic - intrinsic));
            }
        suite.add({"gauss-eq-" + c.name, 100, worst, 1e-5, worst < 1e-5});
    }
    return suite;
}

// -------------------------------------------------- canonical round trip ---

SuiteResult run_canonical(std::uint64_t seed, std::size_t count) {
    SuiteResult suite;
    suite.suite = "canonical";
    suite.seed = seed;

    double worst = 0.0;
    double kind_mismatches = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::for_case(seed ^ 0xc0ffee, k);
        const std::size_t n = 4 + (k % 5);
        const std::size_t m = n - 2;
        const bool second = (k % 2) == 1;

        const double lambda1 = rng.uniform(-2.0, 2.0);
        const double lambda2 = rng.uniform(-2.0, 2.0);
        const double mu = rng.uniform(0.2, 2.0);
        std::vector<double> lambda_rest;
        for (std::size_t r = 2; r < m; ++r) lambda_rest.push_back(rng.uniform(-2.0, 2.0));

        const AdaptedFrame fr = frame_from_vectors(random_orthonormal_frame(rng, n, n));
        std::vector<double> c11(m, 0.0), c12(m, 0.0), c22(m, 0.0);
        c11[0] = second ? lambda1 - 2.0 * mu : lambda1 + mu;
        c22[0] = second ? lambda1 : lambda1 - mu;
        c11[1] = c22[1] = lambda2;
        c12[1] = mu;
        for (std::size_t r = 2; r < m; ++r) c11[r] = c22[r] = lambda_rest[r - 2];

        const SecondFundamentalForm sff = sff_from_coefficients(fr, c11, c12, c22);
        const CanonicalFrame cf = canonical_frame(sff, 1e-8);

        const WintgenKind expected = second ? WintgenKind::Second : WintgenKind::First;
        if (cf.kind != expected) kind_mismatches += 1.0;

        worst = std::max(worst, std::abs(cf.lambda1 - lambda1));
        worst = std::max(worst, std::abs(cf.lambda2 - lambda2));
        worst = std::max(worst, std::abs(cf.mu - mu));
        for (std::size_t r = 0; r < lambda_rest.size(); ++r)
            worst = std::max(worst, std::abs(cf.lambda_rest[r] - lambda_rest[r]));

        Vec h11, h12, h22;
        cf.reconstruct(h11, h12, h22);
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(h11[i] - sff.h11[i]));
            worst = std::max(worst, std::abs(h12[i] - sff.h12[i]));
            worst = std::max(worst, std::abs(h22[i] - sff.h22[i]));
        }
    }
    suite.add({"canonical-recovery", count, worst, 1e-9, worst < 1e-9});
    suite.add({"canonical-kind", count, kind_mismatches, 0.5, kind_mismatches < 0.5});
    return suite;
}

// ----------------------------------------------------------------- witness ---

SuiteResult run_witness(std::uint64_t seed, std::size_t count) {
    SuiteResult suite;
    suite.suite = "witness";
    suite.seed = seed;

    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng = Rng::for_case(seed ^ 0xab1de5, k);
        const std::size_t n = 4 + (k % 5);
        const std::size_t m = n - 2;
        const AdaptedFrame fr = frame_from_vectors(random_orthonormal_frame(rng, n, n));
        std::vector<double> lam(m), zero(m, 0.0);
        for (double& x : lam) x = rng.uniform(-2.0, 2.0);
        const SecondFundamentalForm sff = sff_from_coefficients(fr, lam, zero, lam);

        const WitnessReport w = wintgen_semiparallel_witness(sff, 1e-8);
        worst = std::max(worst, std::abs(w.mu));
        worst = std::max(worst, w.kn);
        if (!w.umbilical || !w.semiparallel || !w.mu_vanishes || !w.kn_vanishes) worst = 1.0;
        for (bool h : w.holds)
            if (!h) worst = 1.0;
    }
    suite.add({"witness-umbilical", count, worst, 1e-9, worst < 1e-9});

    // First-kind point (a = 1, b = 3): canonical system equations 4 and 5
    // must fail with residuals exactly 6 and 2.
    {
        const ProfileFamily fam = first_kind_profile(1.0, 0.0);
        const SurfacePatch patch =
            vranceanu_patch(fam.r, Domain{0.0, 2.0 * M_PI, fam.v_min, fam.v_max});
        const SecondFundamentalForm sff = surface_point_sff(patch, 0.7, 0.0);
        const WitnessReport w = wintgen_semiparallel_witness(sff, 1e-8);
        double gap = std::max(std::abs(std::abs(w.residuals[3]) - 6.0),
                              std::abs(std::abs(w.residuals[4]) - 2.0));
        if (w.holds[3] || w.holds[4] || w.semiparallel) gap = 1.0;
        suite.add({"witness-first-kind-point", 1, gap, 1e-9, gap < 1e-9});
    }
    return suite;
}

// ---------------------------------------------------------------- driver ---

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed, long count) {
    std::vector<SuiteResult> out;
    const bool all = name == "all";
    bool known = all;
    if (all || name == "lemma41") {
        out.push_back(run_lemma41(seed, count > 0 ? count : 10000));
        known = true;
    }
    if (all || name == "ddvv-fuzz") {
        out.push_back(run_ddvv_fuzz(seed, count > 0 ? count : 10000));
        known = true;
    }
    if (all || name == "vranceanu") {
        out.push_back(run_vranceanu(seed));
        known = true;
    }
    if (all || name == "gauss-eq") {
        out.push_back(run_gauss_eq(seed));
        known = true;
    }
    if (all || name == "canonical") {
        out.push_back(run_canonical(seed, count > 0 ? count : 1000));
        known = true;
    }
    if (all || name == "witness") {
        out.push_back(run_witness(seed, count > 0 ? count : 1000));
        known = true;
    }
    if (!known)
        throw InputError("unknown suite '" + name +
                         "' (lemma41, ddvv-fuzz, vranceanu, gauss-eq, canonical, witness, all)");
    return out;
}

std::string suites_to_json(const std::vector<SuiteResult>& results) {
    bool pass = true;
    std::string out = "{\n  \"command\": \"verify\",\n  \"suites\": [\n";
    for (std::size_t s = 0; s < results.size(); ++s) {
        const SuiteResult& r = results[s];
        pass = pass && r.pass;
        out += "    {\"suite\": \"" + r.suite + "\", \"seed\": " + std::to_string(r.seed) +
               ", \"pass\": " + (r.pass ? "true" : "false") + ", \"checks\": [\n";
        for (std::size_t c = 0; c < r.checks.size(); ++c) {
            const CheckResult& ck = r.checks[c];
            out += "      {\"name\": \"" + ck.name + "\", \"count\": " + std::to_string(ck.count) +
                   ", \"worst\": " + format_g17(ck.worst) + ", \"tol\": " + format_g17(ck.tol) +
                   ", \"pass\": " + (ck.pass ? "true" : "false") + "}";
            if (c + 1 < r.checks.size()) out += ",";
            out += "\n";
        }
        out += "    ]}";
        if (s + 1 < results.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n  \"pass\": ";
    out += pass ? "true" : "false";
    out += "\n}\n";
    return out;
}

std::string suites_to_text(const std::vector<SuiteResult>& results) {
    std::string out;
    std::size_t passed = 0, total = 0;
    for (const SuiteResult& r : results) {
        for (const CheckResult& ck : r.checks) {
            out += ck.pass ? "[PASS] " : "[FAIL] ";
            out += r.suite + "/" + ck.name + ": cases=" + std::to_string(ck.count) +
                   " worst=" + format_g17(ck.worst) + " tol=" + format_g17(ck.tol) + "\n";
            ++total;
            if (ck.pass) ++passed;
        }
    }
    out += std::to_string(passed) + "/" + std::to_string(total) + " checks passed\n";
    return out;
}

}  // namespace wintgen
