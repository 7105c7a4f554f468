#include "wintgen/semiparallel.hpp"

#include <cmath>

#include "wintgen/invariants.hpp"

namespace wintgen {

namespace {

double residual_norm(const SemiparallelResidual& r) {
    return std::sqrt(norm2(r.T11) + 2.0 * norm2(r.T12) + norm2(r.T22));
}

}  // namespace

SemiparallelResidual curvature_action_direct(const SecondFundamentalForm& sff, double K) {
    const std::size_t n = sff.ambient_dim();
    const std::size_t m = sff.normal_count();
    const Vec diff = sff.h11 - sff.h22;

    // Rperp(X1,X2)N_a for every frame normal
    std::vector<Vec> rperp(m);
    for (std::size_t a = 0; a < m; ++a) {
        Vec r = zeros(n);
        axpy(sff.c12[a], diff, r);
        axpy(sff.c22[a] - sff.c11[a], sff.h12, r);
        rperp[a] = std::move(r);
    }

    SemiparallelResidual res;
    res.method = ResidualMethod::Direct;
    res.T11 = zeros(n);
    res.T12 = zeros(n);
    res.T22 = zeros(n);
    for (std::size_t a = 0; a < m; ++a) {
        axpy(sff.c11[a], rperp[a], res.T11);
        axpy(sff.c12[a], rperp[a], res.T12);
        axpy(sff.c22[a], rperp[a], res.T22);
    }
    // tangential curvature terms: R(X1,X2)X1 = -K X2, R(X1,X2)X2 = K X1
    axpy(2.0 * K, sff.h12, res.T11);
    axpy(-K, diff, res.T12);
    axpy(-2.0 * K, sff.h12, res.T22);

    res.norm = residual_norm(res);
    return res;
}

SemiparallelResidual curvature_action_lemma(const SecondFundamentalForm& sff, double K) {
    const std::size_t n = sff.ambient_dim();
    const std::size_t m = sff.normal_count();
    const Vec diff = sff.h11 - sff.h22;

    double s11 = 0.0, p11 = 0.0;  // sums over alpha for the (1,1) slot
    double s12 = 0.0, p12 = 0.0;
    double s22 = 0.0, p22 = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        const double d = sff.c22[a] - sff.c11[a];
        s11 += sff.c11[a] * d;
        p11 += sff.c11[a] * sff.c12[a];
        s12 += sff.c12[a] * d;
        p12 += sff.c12[a] * sff.c12[a];
        s22 += sff.c22[a] * d;
        p22 += sff.c22[a] * sff.c12[a];
    }

    SemiparallelResidual res;
    res.method = ResidualMethod::Lemma;
    res.T11 = zeros(n);
    res.T12 = zeros(n);
    res.T22 = zeros(n);
    axpy(s11 + 2.0 * K, sff.h12, res.T11);
    axpy(p11, diff, res.T11);
    axpy(s12, sff.h12, res.T12);
    axpy(p12 - K, diff, res.T12);
    axpy(s22 - 2.0 * K, sff.h12, res.T22);
    axpy(p22, diff, res.T22);

    res.norm = residual_norm(res);
    return res;
}

WitnessReport wintgen_semiparallel_witness(const SecondFundamentalForm& sff, double tol) {
    const CurvatureEllipse ell = curvature_ellipse(sff);
    if (ell.circular_residual > tol)
        throw NotWintgenIdealError("witness needs a Wintgen-ideal point (residual " +
                                   std::to_string(ell.circular_residual) + ")");

    const double K = gaussian_curvature(sff);
    WitnessReport w;
    w.kn = normal_curvature(sff).KN;
    w.semiparallel = is_semiparallel(curvature_action_lemma(sff, K), tol);

    const double nb = norm(ell.Bvec), nc = norm(ell.Cvec);
    if (nb <= tol && nc <= tol) {
        // Umbilical: mu = 0 and h11^1 = h22^1, every equation holds as 0 = 0.
        w.umbilical = true;
        w.mu = 0.0;
        for (int i = 0; i < 5; ++i) {
            w.residuals[i] = 0.0;
            w.holds[i] = true;
        }
    } else {
        const CanonicalFrame cf = canonical_frame(sff, tol);
        const double h11_1 = dot(sff.h11, cf.normals[0]);
        const double h22_1 = dot(sff.h22, cf.normals[0]);
        const double d = h11_1 - h22_1;
        const double mu = cf.mu;
        w.mu = mu;
        w.residuals[0] = mu * mu * d;
        w.residuals[1] = cf.lambda2 * mu * d;
        w.residuals[2] = (mu * mu - K) * d;
        w.residuals[3] = mu * (h11_1 * (h22_1 - h11_1) + 2.0 * K);
        w.residuals[4] = mu * (h22_1 * (h22_1 - h11_1) - 2.0 * K);
        for (int i = 0; i < 5; ++i) w.holds[i] = std::abs(w.residuals[i]) <= tol;
    }

    if (w.semiparallel) {
        w.mu_vanishes = std::abs(w.mu) <= tol;
        w.kn_vanishes = w.kn <= tol;
    }
    return w;
}

}  // namespace wintgen
