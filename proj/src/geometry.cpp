#include "wintgen/geometry.hpp"

#include <cmath>

#include "wintgen/errors.hpp"

namespace wintgen {

FirstFundamentalForm first_fundamental_form(const Jet2& jet) {
    FirstFundamentalForm f;
    f.E = dot(jet.Xu, jet.Xu);
    f.F = dot(jet.Xu, jet.Xv);
    f.G = dot(jet.Xv, jet.Xv);
    f.W2 = f.E * f.G - f.F * f.F;
    if (!(f.W2 > kRegularityEps))
        throw DegeneratePointError("degenerate point: W^2 = " + std::to_string(f.W2));
    return f;
}

namespace {

// Flip so the first coordinate with magnitude above threshold is positive.
// The vectors are unit norm, so 1e-9 separates real entries from jet noise.
void normalize_sign(Vec& n) {
    for (double x : n) {
        if (std::abs(x) > 1e-9) {
            if (x < 0) n = -n;
            return;
        }
    }
}

Vec tangent_projection_removed(const Vec& w, const Vec& x1, const Vec& x2) {
    Vec r = w;
    axpy(-dot(w, x1), x1, r);
    axpy(-dot(w, x2), x2, r);
    return r;
}

}  // namespace

AdaptedFrame adapted_frame(const Jet2& jet) {
    const FirstFundamentalForm fff = first_fundamental_form(jet);  // regularity gate
    const std::size_t n = jet.dim();

    AdaptedFrame fr;
    const double xu_norm = std::sqrt(fff.E);
    fr.X1 = (1.0 / xu_norm) * jet.Xu;
    fr.a1 = 1.0 / xu_norm;
    fr.b1 = 0.0;

    // X2: Xv minus its X1 component. Coefficients follow from
    // Xv - (F/E) Xu, normalized by sqrt(W^2/E).
    Vec x2 = jet.Xv;
    axpy(-dot(jet.Xv, fr.X1), fr.X1, x2);
    const double x2_norm = norm(x2);
    if (!(x2_norm * x2_norm > kRegularityEps))
        throw DegeneratePointError("degenerate point: tangent plane rank loss");
    fr.X2 = (1.0 / x2_norm) * x2;
    fr.a2 = -(fff.F / fff.E) / x2_norm;
    fr.b2 = 1.0 / x2_norm;

    // Normal frame: projected second derivatives first, then canonical basis
    // vectors, keeping Gram-Schmidt residuals above the threshold. The fixed
    // candidate order makes the frame (and every signed quantity computed in
    // it) reproducible.
    std::vector<Vec> candidates;
    candidates.push_back(tangent_projection_removed(jet.Xuu, fr.X1, fr.X2));
    candidates.push_back(tangent_projection_removed(jet.Xuv, fr.X1, fr.X2));
    candidates.push_back(tangent_projection_removed(jet.Xvv, fr.X1, fr.X2));
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = zeros(n);
        e[i] = 1.0;
        candidates.push_back(tangent_projection_removed(e, fr.X1, fr.X2));
    }

    for (const Vec& cand : candidates) {
        if (fr.N.size() == n - 2) break;
        Vec res = orthogonalize(cand, fr.N);
        if (norm(res) <= kGramSchmidtEps) continue;
        Vec nvec = normalized(res);
        normalize_sign(nvec);
        fr.N.push_back(nvec);
    }
    if (fr.N.size() != n - 2)
        throw DegeneratePointError("normal frame completion failed");
    fr.oriented = true;
    return fr;
}

AdaptedFrame vranceanu_frame(double u, double v, double r, double r1) {
    const double A = std::sqrt(r * r + r1 * r1);
    if (!(A > 0.0) || r == 0.0)
        throw DegeneratePointError("vranceanu frame undefined: r(v) vanishes");
    const double B = r1 * std::cos(v) - r * std::sin(v);
    const double C = r1 * std::sin(v) + r * std::cos(v);
    const double cu = std::cos(u), su = std::sin(u);
    const double cv = std::cos(v), sv = std::sin(v);

    AdaptedFrame fr;
    fr.X1 = {-cv * su, cv * cu, -sv * su, sv * cu};
    fr.X2 = {(B / A) * cu, (B / A) * su, (C / A) * cu, (C / A) * su};
    fr.N = {Vec{-(C / A) * cu, -(C / A) * su, (B / A) * cu, (B / A) * su},
            Vec{-sv * su, sv * cu, cv * su, -cv * cu}};
    // X1 = Xu / r, X2 = Xv / A
    fr.a1 = 1.0 / r;
    fr.b1 = 0.0;
    fr.a2 = 0.0;
    fr.b2 = 1.0 / A;
    fr.oriented = true;
    return fr;
}

SecondFundamentalForm second_fundamental_form(const Jet2& jet, const AdaptedFrame& frame) {
    SecondFundamentalForm sff;
    sff.frame = frame;

    auto second_deriv_along = [&](double ai, double bi, double aj, double bj) {
        Vec w = zeros(jet.dim());
        axpy(ai * aj, jet.Xuu, w);
        axpy(ai * bj + aj * bi, jet.Xuv, w);
        axpy(bi * bj, jet.Xvv, w);
        return tangent_projection_removed(w, frame.X1, frame.X2);
    };

    sff.h11 = second_deriv_along(frame.a1, frame.b1, frame.a1, frame.b1);
    sff.h12 = second_deriv_along(frame.a1, frame.b1, frame.a2, frame.b2);
    sff.h22 = second_deriv_along(frame.a2, frame.b2, frame.a2, frame.b2);

    const std::size_t m = frame.normal_count();
    sff.c11.resize(m);
    sff.c12.resize(m);
    sff.c22.resize(m);
    for (std::size_t a = 0; a < m; ++a) {
        sff.c11[a] = dot(sff.h11, frame.N[a]);
        sff.c12[a] = dot(sff.h12, frame.N[a]);
        sff.c22[a] = dot(sff.h22, frame.N[a]);
    }
    return sff;
}

SecondFundamentalForm sff_from_coefficients(const AdaptedFrame& frame,
                                            const std::vector<double>& c11,
                                            const std::vector<double>& c12,
                                            const std::vector<double>& c22) {
    const std::size_t m = frame.normal_count();
    if (c11.size() != m || c12.size() != m || c22.size() != m)
        throw InputError("coefficient count does not match the normal frame");
    SecondFundamentalForm sff;
    sff.frame = frame;
    sff.c11 = c11;
    sff.c12 = c12;
    sff.c22 = c22;
    const std::size_t n = frame.X1.size();
    sff.h11 = zeros(n);
    sff.h12 = zeros(n);
    sff.h22 = zeros(n);
    for (std::size_t a = 0; a < m; ++a) {
        axpy(c11[a], frame.N[a], sff.h11);
        axpy(c12[a], frame.N[a], sff.h12);
        axpy(c22[a], frame.N[a], sff.h22);
    }
    return sff;
}

SecondFundamentalForm surface_point_sff(const SurfacePatch& patch, double u, double v) {
    const Jet2 jet = patch.eval_jet2(u, v);
    if (patch.family == PatchFamily::Vranceanu) {
        const ScalarJet2 r = patch.profile.eval_jet(u, v);
        return second_fundamental_form(jet, vranceanu_frame(u, v, r.v, r.dv));
    }
    return second_fundamental_form(jet, adapted_frame(jet));
}

ShapeOperators shape_operators(const SecondFundamentalForm& sff) {
    ShapeOperators ops;
    ops.A.resize(sff.normal_count());
    for (std::size_t a = 0; a < sff.normal_count(); ++a) {
        ops.A[a][0][0] = sff.c11[a];
        ops.A[a][0][1] = sff.c12[a];
        ops.A[a][1][0] = sff.c12[a];
        ops.A[a][1][1] = sff.c22[a];
    }
    return ops;
}

}  // namespace wintgen
