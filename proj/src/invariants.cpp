#include "wintgen/invariants.hpp"

#include <cmath>

namespace wintgen {

double gaussian_curvature(const SecondFundamentalForm& sff) {
    return dot(sff.h11, sff.h22) - norm2(sff.h12);
}

NormalCurvature normal_curvature(const SecondFundamentalForm& sff) {
    const Vec B = sff.half_diff();
    const Vec& C = sff.off_diag();
    const std::size_t m = sff.normal_count();

    // frame components of B and C
    std::vector<double> Bc(m), Cc(m);
    for (std::size_t a = 0; a < m; ++a) {
        Bc[a] = dot(B, sff.frame.N[a]);
        Cc[a] = dot(C, sff.frame.N[a]);
    }

    double sumsq = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const double r = 2.0 * (Cc[a] * Bc[b] - Bc[a] * Cc[b]);
            sumsq += r * r;
        }

    NormalCurvature nc;
    nc.KN = std::sqrt(sumsq);
    if (sff.ambient_dim() == 4 && m == 2)
        nc.KN_signed = 2.0 * (Bc[0] * Cc[1] - Bc[1] * Cc[0]);
    return nc;
}

Vec mean_curvature_vector(const SecondFundamentalForm& sff) {
    return sff.mean_vector();
}

CurvatureInvariants curvature_invariants(const SecondFundamentalForm& sff) {
    CurvatureInvariants inv;
    inv.K = gaussian_curvature(sff);
    const NormalCurvature nc = normal_curvature(sff);
    inv.KN = nc.KN;
    inv.KN_signed = nc.KN_signed;
    inv.H = mean_curvature_vector(sff);
    inv.H2 = norm2(inv.H);
    inv.defect = inv.H2 - inv.K - inv.KN;
    return inv;
}

CurvatureEllipse curvature_ellipse(const SecondFundamentalForm& sff) {
    CurvatureEllipse e;
    e.center = sff.mean_vector();
    e.Bvec = sff.half_diff();
    e.Cvec = sff.off_diag();

    // Singular values of the n x 2 map [B C]: eigenvalues of its 2x2 Gram
    // matrix.
    const double bb = norm2(e.Bvec), cc = norm2(e.Cvec), bc = dot(e.Bvec, e.Cvec);
    const double tr = bb + cc;
    const double disc = std::sqrt(std::max(0.0, (bb - cc) * (bb - cc) + 4.0 * bc * bc));
    e.semi_major = std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
    e.semi_minor = std::sqrt(std::max(0.0, 0.5 * (tr - disc)));

    const double nb = std::sqrt(bb), ncv = std::sqrt(cc);
    e.circular_residual = std::max(std::abs(nb - ncv), std::abs(bc) / (1.0 + nb * ncv));
    return e;
}

const char* kind_name(WintgenKind k) {
    switch (k) {
        case WintgenKind::None: return "none";
        case WintgenKind::First: return "first";
        case WintgenKind::Second: return "second";
        case WintgenKind::Indeterminate: return "indeterminate";
    }
    return "none";
}

namespace {

// Oriented pairing 2 <B ^ C, N1 ^ N2> against the tensor's frame normals.
// Equals the signed normal curvature in ambient dim 4.
double kind_pairing(const SecondFundamentalForm& sff, const Vec& B, const Vec& C) {
    if (sff.normal_count() < 2) return 0.0;
    const Vec& N1 = sff.frame.N[0];
    const Vec& N2 = sff.frame.N[1];
    return 2.0 * (dot(B, N1) * dot(C, N2) - dot(B, N2) * dot(C, N1));
}

}  // namespace

CanonicalFrame canonical_frame(const SecondFundamentalForm& sff, double tol) {
    const Vec B = sff.half_diff();
    const Vec C = sff.off_diag();
    const double nb = norm(B), nc = norm(C);

    const CurvatureEllipse ell = curvature_ellipse(sff);
    if (ell.circular_residual > tol)
        throw NotWintgenIdealError("curvature ellipse is not a circle (residual " +
                                   std::to_string(ell.circular_residual) + ")");
    if (nb <= tol && nc <= tol)
        throw UmbilicalDegenerateError("umbilical point: canonical form is trivially diagonal");

    CanonicalFrame cf;
    const double P = kind_pairing(sff, B, C);
    cf.kind = P > tol ? WintgenKind::First
                      : (P < -tol ? WintgenKind::Second : WintgenKind::Indeterminate);

    const double s = (cf.kind == WintgenKind::Second) ? -1.0 : 1.0;
    cf.normals.push_back((s / nb) * B);
    cf.normals.push_back((1.0 / nc) * C);

    // Complete the normal frame from the original one; exactly two of its
    // vectors fall inside span{N1', N2'} and drop out.
    for (const Vec& cand : sff.frame.N) {
        if (cf.normals.size() == sff.normal_count()) break;
        Vec res = orthogonalize(cand, cf.normals);
        if (norm(res) <= 1e-6) continue;
        cf.normals.push_back(normalized(res));
    }
    if (cf.normals.size() != sff.normal_count())
        throw DomainError("canonical frame completion failed");

    const Vec H = sff.mean_vector();
    cf.mu = nc;
    cf.lambda1 = dot(H, cf.normals[0]) + (cf.kind == WintgenKind::Second ? cf.mu : 0.0);
    cf.lambda2 = dot(H, cf.normals[1]);
    for (std::size_t r = 2; r < cf.normals.size(); ++r)
        cf.lambda_rest.push_back(dot(H, cf.normals[r]));
    return cf;
}

void CanonicalFrame::reconstruct(Vec& h11, Vec& h12, Vec& h22) const {
    const std::size_t n = normals.empty() ? 0 : normals[0].size();
    h11 = zeros(n);
    h12 = zeros(n);
    h22 = zeros(n);
    const bool second = kind == WintgenKind::Second;
    const double d11 = second ? lambda1 - 2.0 * mu : lambda1 + mu;
    const double d22 = second ? lambda1 : lambda1 - mu;
    axpy(d11, normals[0], h11);
    axpy(d22, normals[0], h22);
    axpy(lambda2, normals[1], h11);
    axpy(lambda2, normals[1], h22);
    axpy(mu, normals[1], h12);
    for (std::size_t r = 2; r < normals.size(); ++r) {
        axpy(lambda_rest[r - 2], normals[r], h11);
        axpy(lambda_rest[r - 2], normals[r], h22);
    }
}

PointClassification classify_point(const SecondFundamentalForm& sff,
                                   const SemiparallelResidual& residual, double tol) {
    PointClassification pc;
    pc.tol_used = tol;

    const Vec B = sff.half_diff();
    const Vec& C = sff.off_diag();
    const Vec H = sff.mean_vector();
    const double nb = norm(B), nc = norm(C), nh = norm(H);
    const CurvatureInvariants inv = curvature_invariants(sff);

    double max_coeff = 0.0;
    for (std::size_t a = 0; a < sff.normal_count(); ++a)
        max_coeff = std::max({max_coeff, std::abs(sff.c11[a]), std::abs(sff.c12[a]),
                              std::abs(sff.c22[a])});

    pc.flags.regular = true;
    pc.flags.totally_geodesic = max_coeff <= tol;
    pc.flags.totally_umbilical = nb <= tol && nc <= tol;
    pc.flags.minimal = nh <= tol;
    pc.flags.flat_normal = inv.KN <= tol;
    pc.flags.isotropic = std::abs(nb - nc) <= tol && std::abs(dot(B, C)) <= tol &&
                         std::abs(dot(H, B)) <= tol && std::abs(dot(H, C)) <= tol;
    pc.flags.wintgen_ideal = std::abs(inv.defect) <= tol;
    pc.flags.semiparallel = residual.norm <= tol;
    pc.flags.h2_equals_3k = pc.flags.isotropic && std::abs(inv.H2 - 3.0 * inv.K) <= tol;

    if (!pc.flags.wintgen_ideal) {
        pc.kind = WintgenKind::None;
    } else if (pc.flags.totally_umbilical) {
        pc.kind = WintgenKind::Indeterminate;
    } else {
        try {
            pc.kind = canonical_frame(sff, tol).kind;
        } catch (const DomainError&) {
            pc.kind = WintgenKind::Indeterminate;
        }
    }
    return pc;
}

}  // namespace wintgen
