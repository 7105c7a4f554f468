#pragma once

#include <array>
#include <vector>

#include "wintgen/linalg.hpp"
#include "wintgen/patch.hpp"

namespace wintgen {

// Regularity floor on W^2 = EG - F^2. Analytic jets carry ~1e-15 noise, so
// this leaves two to three orders of margin.
inline constexpr double kRegularityEps = 1e-12;
// Gram-Schmidt residual threshold used when completing the normal frame.
inline constexpr double kGramSchmidtEps = 1e-10;

struct FirstFundamentalForm {
    double E = 0.0, F = 0.0, G = 0.0;
    double W2 = 0.0;  // EG - F^2
};

// First fundamental form coefficients at the jet's point. Throws
// DegeneratePointError when W^2 falls below the regularity floor.
FirstFundamentalForm first_fundamental_form(const Jet2& jet);

// Orthonormal frame adapted to the surface: X1,X2 span the tangent plane,
// N[0..n-3] the normal space. The tangent pair is recorded in coordinates,
// X1 = a1*Xu + b1*Xv and X2 = a2*Xu + b2*Xv, because the second fundamental
// form needs those coefficients.
struct AdaptedFrame {
    Vec X1, X2;
    std::vector<Vec> N;
    double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;
    bool oriented = true;

    std::size_t normal_count() const { return N.size(); }
};

// Deterministic adapted frame:
//   X1 = Xu/|Xu|, X2 = Gram-Schmidt of Xv against X1; normals from
//   Gram-Schmidt over {P(Xuu), P(Xuv), P(Xvv), e1..en} (P = normal
//   projection), keeping residuals > kGramSchmidtEps, exactly n-2 kept.
//   Each generic normal has its sign fixed so its first nonzero coordinate
//   is positive, which pins down signed quantities across runs.
AdaptedFrame adapted_frame(const Jet2& jet);

// The explicit rotation-surface frame for Vranceanu patches, built from the
// profile values (r, r') at v. Signed coefficients of the h tensor match the
// closed forms only in this exact frame, so it is used verbatim, without
// sign normalization.
AdaptedFrame vranceanu_frame(double u, double v, double r, double r1);

// Second fundamental form at one point: the normal-space vectors
// h(Xi,Xj) in ambient coordinates plus their coefficients against the
// frame normals, h[alpha][i][j] = <h(Xi,Xj), N_alpha>.
struct SecondFundamentalForm {
    AdaptedFrame frame;
    Vec h11, h12, h22;               // ambient vectors, normal to the surface
    std::vector<double> c11, c12, c22;  // coefficients per normal direction

    std::size_t normal_count() const { return frame.normal_count(); }
    std::size_t ambient_dim() const { return frame.X1.size(); }

    double coeff(std::size_t alpha, int i, int j) const {
        return (i == j) ? (i == 1 ? c11[alpha] : c22[alpha]) : c12[alpha];
    }

    // Half-difference and off-diagonal normal vectors; the axes of the
    // curvature ellipse live in their span.
    Vec half_diff() const { return 0.5 * (h11 - h22); }  // (h11 - h22)/2
    const Vec& off_diag() const { return h12; }          // h12
    Vec mean_vector() const { return 0.5 * (h11 + h22); }
};

// h(Xi,Xj) as the normal projection of the frame-weighted combination of
// Xuu, Xuv, Xvv. Only the 2-jet enters: h is tensorial in the frame.
SecondFundamentalForm second_fundamental_form(const Jet2& jet, const AdaptedFrame& frame);

// Builds the tensor directly from coefficients in a given frame
// (h vectors = sum_alpha h^alpha_ij N_alpha). Test generators and the fuzz
// suites use this to make synthetic points.
SecondFundamentalForm sff_from_coefficients(const AdaptedFrame& frame,
                                            const std::vector<double>& c11,
                                            const std::vector<double>& c12,
                                            const std::vector<double>& c22);

// Convenience: frame (family-aware) plus tensor in one call.
SecondFundamentalForm surface_point_sff(const SurfacePatch& patch, double u, double v);

struct ShapeOperators {
    // One symmetric 2x2 matrix per normal direction, A[alpha] = (h^alpha_ij).
    std::vector<std::array<std::array<double, 2>, 2>> A;
};

ShapeOperators shape_operators(const SecondFundamentalForm& sff);

}  // namespace wintgen
