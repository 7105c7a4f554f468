#pragma once

#include <array>

#include "wintgen/expr.hpp"
#include "wintgen/patch.hpp"

namespace wintgen {

// Closed-form side of the rotation-surface family
//   X(u,v) = (r cos v cos u, r cos v sin u, r sin v cos u, r sin v sin u)
// with nonzero profile r(v). Everything here is an independent oracle for
// the generic pipeline: profile scalars, curvature closed forms, the
// profile ODEs of the first/second-kind families, and the closed
// semiparallelity residuals.

struct VranceanuProfile {
    Expression r;
};

// Per-point profile scalars:
//   A = sqrt(r^2 + r'^2), B = r' cos v - r sin v, C = r' sin v + r cos v,
//   k = r'/r, a = 1/A, b = (2 r'^2 - r r'' + r^2) / A^3.
struct ProfilePoint {
    double r = 0.0, r1 = 0.0, r2 = 0.0;  // r, dr/dv, d2r/dv2
    double A = 0.0, B = 0.0, C = 0.0;
    double k = 0.0, a = 0.0, b = 0.0;
};

// Throws DomainError when r(v) = 0 or r is undefined at v.
ProfilePoint profile_functions(const VranceanuProfile& profile, double v);

// The 4-component patch, tagged so the geometry layer uses the explicit
// rotation-surface frame. Rejects profiles that vanish inside the domain
// (checked on a dense sample).
SurfacePatch vranceanu_patch(const Expression& r, const Domain& domain);

struct ClosedFormInvariants {
    double K = 0.0;
    double KN_signed = 0.0;  // = K for this family
    double H2 = 0.0;
};

// K = KN_signed = a b - a^2, H2 = ((a+b)/2)^2.
ClosedFormInvariants closed_form_invariants(const VranceanuProfile& profile, double v);

// A generated profile with the open v-interval on which its radicand stays
// positive (the widest symmetric-around-seed interval with radicand > 1e-9,
// located by bisection; the seed shifts to the radicand's peak when v = 0
// is outside the positive arc).
struct ProfileFamily {
    Expression r;
    Expression radicand;  // argument under the root, kept for diagnostics
    double v_min = 0.0;
    double v_max = 0.0;
};

// r = sqrt(c1 cos 2v - c2 sin 2v); Wintgen ideal of first kind.
ProfileFamily first_kind_profile(double c1, double c2);

// r = 1 / sqrt(c1 sin 2v - c2 cos 2v); Wintgen ideal of second kind
// (minimal).
ProfileFamily second_kind_profile(double c1, double c2);

// r = c1 e^{c2 v}; the semiparallel (flat, a = b) family.
ProfileFamily exponential_profile(double c1, double c2);

ProfileFamily make_family(const std::string& name, double c1, double c2);

// First-kind profile ODE residual (r')^2 + r r'' + 2 r^2.
double ode_residual_first(const VranceanuProfile& profile, double v);

// Second-kind profile ODE residual 3 (r')^2 - r r'' + 2 r^2.
double ode_residual_second(const VranceanuProfile& profile, double v);

// Coefficients of the closed-form semiparallelity residuals
//   (Rbar.h)(X1,X1) = 3 a^2 (a-b)          N2
//   (Rbar.h)(X1,X2) = a (a-b)(2a-b)        N1
//   (Rbar.h)(X2,X2) = a (3ab - 2a^2 - b^2) N2
std::array<double, 3> semiparallel_residual_closed(const VranceanuProfile& profile, double v);

}  // namespace wintgen
