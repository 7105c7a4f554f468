#pragma once

#include <array>

#include "wintgen/geometry.hpp"

namespace wintgen {

enum class ResidualMethod { Direct, Lemma };

// The three normal-space values of (Rbar(X1,X2).h)(Xk,Xl). The surface is
// semiparallel at the point iff all three vanish. norm weights the mixed
// slot twice, matching the symmetric (k,l) index range.
struct SemiparallelResidual {
    Vec T11, T12, T22;
    double norm = 0.0;
    ResidualMethod method = ResidualMethod::Direct;
};

// Direct assembly: (Rbar.h)(Xk,Xl) =
//   sum_a h_kl^a Rperp(X1,X2)N_a - h(R(X1,X2)Xk, Xl) - h(Xk, R(X1,X2)Xl)
// with Rperp N_a = h12^a (h11 - h22) + (h22^a - h11^a) h12 and
// R(X1,X2)X1 = -K X2, R(X1,X2)X2 = K X1. K is passed in so both methods
// consume identical inputs.
SemiparallelResidual curvature_action_direct(const SecondFundamentalForm& sff, double K);

// Closed forms, e.g.
//   T11 = (sum_a h11^a (h22^a - h11^a) + 2K) h12
//       + (sum_a h11^a h12^a)(h11 - h22)
// and the analogous expressions for T12 and T22. Must agree with the direct
// assembly componentwise.
SemiparallelResidual curvature_action_lemma(const SecondFundamentalForm& sff, double K);

inline bool is_semiparallel(const SemiparallelResidual& res, double tol) {
    return res.norm <= tol;
}

// Scalar system a semiparallel Wintgen-ideal point must satisfy in the
// canonical frame (h11/h22 are the diagonal coefficients along N1'):
//   1: mu^2 (h11 - h22)            = 0
//   2: lambda2 mu (h11 - h22)      = 0
//   3: (mu^2 - K)(h11 - h22)       = 0
//   4: mu [h11 (h22 - h11) + 2K]   = 0
//   5: mu [h22 (h22 - h11) - 2K]   = 0
// The report carries the raw residuals; no conclusion is asserted beyond
// them, plus the mu = 0 / KN = 0 checks when the point is semiparallel.
struct WitnessReport {
    std::array<double, 5> residuals{};
    std::array<bool, 5> holds{};
    double mu = 0.0;
    double kn = 0.0;
    bool umbilical = false;
    bool semiparallel = false;
    bool mu_vanishes = false;  // |mu| <= tol, checked when semiparallel
    bool kn_vanishes = false;  // KN  <= tol, checked when semiparallel
};

// Pre: the point is Wintgen-ideal within tol (circular ellipse). Throws
// NotWintgenIdealError otherwise.
WitnessReport wintgen_semiparallel_witness(const SecondFundamentalForm& sff,
                                           double tol);

}  // namespace wintgen
