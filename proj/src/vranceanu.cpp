#include "wintgen/vranceanu.hpp"

#include <cmath>

#include "wintgen/errors.hpp"

namespace wintgen {

ProfilePoint profile_functions(const VranceanuProfile& profile, double v) {
    const ScalarJet2 j = profile.r.eval_jet(0.0, v);
    ProfilePoint p;
    p.r = j.v;
    p.r1 = j.dv;
    p.r2 = j.dvv;
    if (p.r == 0.0) throw DomainError("profile r(v) vanishes at v = " + std::to_string(v));
    p.A = std::sqrt(p.r * p.r + p.r1 * p.r1);
    p.B = p.r1 * std::cos(v) - p.r * std::sin(v);
    p.C = p.r1 * std::sin(v) + p.r * std::cos(v);
    p.k = p.r1 / p.r;
    p.a = 1.0 / p.A;
    p.b = (2.0 * p.r1 * p.r1 - p.r * p.r2 + p.r * p.r) / (p.A * p.A * p.A);
    return p;
}

SurfacePatch vranceanu_patch(const Expression& r, const Domain& domain) {
    if (r.empty()) throw InputError("vranceanu patch needs a profile expression");
    if (r.depends_on_u()) throw InputError("profile r must be a function of v only");
    if (!(domain.v1 > domain.v0)) throw InputError("empty patch domain");

    // Profile must stay nonzero (and defined) across the domain.
    const int samples = 257;
    for (int i = 0; i < samples; ++i) {
        const double v = domain.v0 + (domain.v1 - domain.v0) * i / (samples - 1);
        const double rv = r.eval(0.0, v);
        if (std::abs(rv) <= 1e-12)
            throw InputError("profile r(v) vanishes inside the domain near v = " +
                             std::to_string(v));
    }

    const Expression u = Expression::var_u();
    const Expression v = Expression::var_v();
    const Expression cu = Expression::unary(UnaryOp::Cos, u);
    const Expression su = Expression::unary(UnaryOp::Sin, u);
    const Expression cv = Expression::unary(UnaryOp::Cos, v);
    const Expression sv = Expression::unary(UnaryOp::Sin, v);

    SurfacePatch p;
    p.label = "vranceanu";
    p.ambient_dim = 4;
    p.components = {r * cv * cu, r * cv * su, r * sv * cu, r * sv * su};
    p.domain = domain;
    p.family = PatchFamily::Vranceanu;
    p.profile = r;
    return p;
}

ClosedFormInvariants closed_form_invariants(const VranceanuProfile& profile, double v) {
    const ProfilePoint p = profile_functions(profile, v);
    ClosedFormInvariants inv;
    inv.K = p.a * p.b - p.a * p.a;
    inv.KN_signed = inv.K;
    const double h = 0.5 * (p.a + p.b);
    inv.H2 = h * h;
    return inv;
}

namespace {

constexpr double kRadicandFloor = 1e-9;

Expression two_v() {
    return Expression::constant(2.0) * Expression::var_v();
}

// Widest symmetric-around-seed open interval with radicand > kRadicandFloor,
// each side located by bisection against a bracket half a period out.
void positive_interval(const Expression& radicand, double seed, double& lo, double& hi) {
    const auto f = [&](double v) { return radicand.eval(0.0, v); };
    if (!(f(seed) > kRadicandFloor))
        throw InputError("radicand is not positive at the seed point");

    const auto boundary = [&](double outside) {
        double a = seed, b = outside;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            if (f(m) > kRadicandFloor) a = m;
            else b = m;
        }
        return a;
    };
    const double right = boundary(seed + M_PI / 2.0);
    const double left = boundary(seed - M_PI / 2.0);
    const double w = std::min(right - seed, seed - left);
    lo = seed - w;
    hi = seed + w;
}

Expression scaled(double c, Expression e) {
    return c == 1.0 ? e : Expression::constant(c) * e;
}

// c1 * first - c2 * second, with unit/zero coefficients folded away.
Expression two_term(double c1, const Expression& first, double c2, const Expression& second) {
    if (c1 == 0.0) return scaled(-c2, second);
    if (c2 == 0.0) return scaled(c1, first);
    return scaled(c1, first) - scaled(c2, second);
}

ProfileFamily trig_family(double c1, double c2, bool second_kind) {
    if (c1 == 0.0 && c2 == 0.0) throw InputError("family needs (c1, c2) != (0, 0)");

    const Expression cos2v = Expression::unary(UnaryOp::Cos, two_v());
    const Expression sin2v = Expression::unary(UnaryOp::Sin, two_v());

    // first kind:  radicand = c1 cos 2v - c2 sin 2v, peak at -atan2(c2,c1)/2
    // second kind: radicand = c1 sin 2v - c2 cos 2v, peak at  atan2(c1,-c2)/2
    Expression radicand;
    double peak;
    if (!second_kind) {
        radicand = two_term(c1, cos2v, c2, sin2v);
        peak = -0.5 * std::atan2(c2, c1);
    } else {
        radicand = two_term(c1, sin2v, c2, cos2v);
        peak = 0.5 * std::atan2(c1, -c2);
    }

    const double seed = radicand.eval(0.0, 0.0) > kRadicandFloor ? 0.0 : peak;

    ProfileFamily fam;
    fam.radicand = radicand;
    const Expression root = Expression::unary(UnaryOp::Sqrt, radicand);
    fam.r = second_kind ? Expression::constant(1.0) / root : root;
    positive_interval(radicand, seed, fam.v_min, fam.v_max);
    return fam;
}

}  // namespace

ProfileFamily first_kind_profile(double c1, double c2) { return trig_family(c1, c2, false); }

ProfileFamily second_kind_profile(double c1, double c2) { return trig_family(c1, c2, true); }

ProfileFamily exponential_profile(double c1, double c2) {
    if (c1 == 0.0) throw InputError("exponential family needs c1 != 0");
    ProfileFamily fam;
    const Expression growth =
        Expression::unary(UnaryOp::Exp, Expression::constant(c2) * Expression::var_v());
    if (c2 == 0.0) fam.r = Expression::constant(c1);
    else if (c1 == 1.0) fam.r = growth;
    else fam.r = Expression::constant(c1) * growth;
    fam.radicand = Expression::constant(1.0);
    fam.v_min = -2.0;
    fam.v_max = 2.0;
    return fam;
}

ProfileFamily make_family(const std::string& name, double c1, double c2) {
    if (name == "first-kind") return first_kind_profile(c1, c2);
    if (name == "second-kind") return second_kind_profile(c1, c2);
    if (name == "exponential") return exponential_profile(c1, c2);
    throw InputError("unknown family '" + name +
                     "' (expected first-kind, second-kind or exponential)");
}

double ode_residual_first(const VranceanuProfile& profile, double v) {
    const ProfilePoint p = profile_functions(profile, v);
    return p.r1 * p.r1 + p.r * p.r2 + 2.0 * p.r * p.r;
}

double ode_residual_second(const VranceanuProfile& profile, double v) {
    const ProfilePoint p = profile_functions(profile, v);
    return 3.0 * p.r1 * p.r1 - p.r * p.r2 + 2.0 * p.r * p.r;
}

std::array<double, 3> semiparallel_residual_closed(const VranceanuProfile& profile, double v) {
    const ProfilePoint p = profile_functions(profile, v);
    const double a = p.a, b = p.b;
    return {3.0 * a * a * (a - b), a * (a - b) * (2.0 * a - b),
            a * (3.0 * a * b - 2.0 * a * a - b * b)};
}

}  // namespace wintgen
