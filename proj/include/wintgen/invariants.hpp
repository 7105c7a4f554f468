#pragma once

#include <optional>
#include <vector>

#include "wintgen/errors.hpp"
#include "wintgen/geometry.hpp"
#include "wintgen/semiparallel.hpp"

namespace wintgen {

// Default absolute tolerance for pointwise classification of dimensionless
// invariants. Analytic jets leave residuals around 1e-12; 1e-8 separates
// cleanly. CLI-overridable.
inline constexpr double kDefaultTol = 1e-8;

struct CurvatureInvariants {
    double K = 0.0;        // Gaussian curvature
    double KN = 0.0;       // normal curvature, norm form (>= 0)
    std::optional<double> KN_signed;  // oriented value, ambient dim 4 only
    Vec H;                 // mean curvature vector, ambient coordinates
    double H2 = 0.0;       // |H|^2
    double defect = 0.0;   // |H|^2 - K - KN, the Wintgen defect
};

// K = <h11,h22> - |h12|^2.
double gaussian_curvature(const SecondFundamentalForm& sff);

struct NormalCurvature {
    double KN = 0.0;
    std::optional<double> KN_signed;
};

// KN is the norm of the normal-bundle curvature: with B = (h11-h22)/2 and
// C = h12, the components are <Rperp(X1,X2)N_a, N_b> = 2(C_a B_b - B_a C_b)
// and KN is the root of their squared sum over a < b. In ambient dim 4 the
// oriented (signed) value 2(B_1 C_2 - B_2 C_1) is reported as well; on
// Vranceanu patches it equals a*b - a^2 with the sign intact, and it flips
// exactly when the frame orientation flips.
NormalCurvature normal_curvature(const SecondFundamentalForm& sff);

// H = (h11 + h22)/2 in ambient coordinates.
Vec mean_curvature_vector(const SecondFundamentalForm& sff);

CurvatureInvariants curvature_invariants(const SecondFundamentalForm& sff);

inline double wintgen_defect(const CurvatureInvariants& inv) { return inv.defect; }

// The curvature ellipse {h(X,X) : |X| = 1} = center + cos(2t) B + sin(2t) C.
struct CurvatureEllipse {
    Vec center;  // = H
    Vec Bvec;    // (h11 - h22)/2
    Vec Cvec;    // h12
    double semi_major = 0.0;  // singular values of the [B C] map
    double semi_minor = 0.0;
    // max(| |B|-|C| |, |<B,C>| / (1 + |B||C|)); 0 iff the ellipse is a
    // circle (possibly a point).
    double circular_residual = 0.0;
};

CurvatureEllipse curvature_ellipse(const SecondFundamentalForm& sff);

enum class WintgenKind { None, First, Second, Indeterminate };

const char* kind_name(WintgenKind k);

struct NotWintgenIdealError : DomainError {
    using DomainError::DomainError;
};
struct UmbilicalDegenerateError : DomainError {
    using DomainError::DomainError;
};

// Canonical presentation of a Wintgen-ideal (circular-ellipse) tensor:
// rotated normals N1' = +-B/|B|, N2' = C/|C| (rest completed by
// Gram-Schmidt from the original frame), in which A_{N1'} is diagonal,
// A_{N2'} = [[lambda2, mu],[mu, lambda2]] with mu = |C| > 0, and every
// further shape operator is lambda_r * Id.
//
// The kind comes from the sign of the oriented pairing
// P = 2 <B ^ C, N1 ^ N2> against the tensor's own frame normals (P equals
// the signed normal curvature in ambient dim 4). First kind presents as
// diag(lambda1 + mu, lambda1 - mu) with N1' = B/|B|; second kind as
// diag(lambda1 - 2 mu, lambda1) with N1' = -B/|B|, matching the two
// canonical coefficient patterns.
struct CanonicalFrame {
    std::vector<Vec> normals;  // N1', N2', then the completed rest
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::vector<double> lambda_rest;  // umbilic factors for N3'..
    double mu = 0.0;
    WintgenKind kind = WintgenKind::Indeterminate;

    // Tensor rebuilt from the canonical data, for round-trip checks.
    void reconstruct(Vec& h11, Vec& h12, Vec& h22) const;
};

// Throws NotWintgenIdealError when the ellipse is not a circle within tol,
// UmbilicalDegenerateError when B = C = 0 within tol (the canonical form is
// trivially diagonal there and the kind carries no information).
CanonicalFrame canonical_frame(const SecondFundamentalForm& sff, double tol = kDefaultTol);

struct PointFlags {
    bool regular = true;
    bool totally_geodesic = false;
    bool totally_umbilical = false;
    bool minimal = false;
    bool isotropic = false;
    bool flat_normal = false;
    bool wintgen_ideal = false;
    bool semiparallel = false;
    bool h2_equals_3k = false;  // reported when isotropic
};

struct PointClassification {
    PointFlags flags;
    WintgenKind kind = WintgenKind::None;
    double tol_used = kDefaultTol;
};

PointClassification classify_point(const SecondFundamentalForm& sff,
                                   const SemiparallelResidual& residual,
                                   double tol = kDefaultTol);

}  // namespace wintgen
