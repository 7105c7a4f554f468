#pragma once

#include <cmath>

namespace wintgen {

// Truncated 2-jet of a scalar function of (u,v): value, first and second
// partials. Arithmetic follows the exact product/chain rules, so every slot
// is an analytic derivative, never a finite difference. Order > 2 is not
// carried; nothing downstream needs it.
struct ScalarJet2 {
    double v = 0.0;    // value
    double du = 0.0;   // d/du
    double dv = 0.0;   // d/dv
    double duu = 0.0;  // d2/du2
    double duv = 0.0;  // d2/dudv
    double dvv = 0.0;  // d2/dv2

    static ScalarJet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static ScalarJet2 var_u(double u0) { return {u0, 1, 0, 0, 0, 0}; }
    static ScalarJet2 var_v(double v0) { return {v0, 0, 1, 0, 0, 0}; }

    bool is_constant() const {
        return du == 0 && dv == 0 && duu == 0 && duv == 0 && dvv == 0;
    }
};

inline ScalarJet2 operator-(const ScalarJet2& x) {
    return {-x.v, -x.du, -x.dv, -x.duu, -x.duv, -x.dvv};
}

inline ScalarJet2 operator+(const ScalarJet2& a, const ScalarJet2& b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv,
            a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}

inline ScalarJet2 operator-(const ScalarJet2& a, const ScalarJet2& b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv,
            a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}

inline ScalarJet2 operator*(const ScalarJet2& a, const ScalarJet2& b) {
    ScalarJet2 r;
    r.v = a.v * b.v;
    r.du = a.du * b.v + a.v * b.du;
    r.dv = a.dv * b.v + a.v * b.dv;
    r.duu = a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu;
    r.duv = a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv;
    r.dvv = a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv;
    return r;
}

inline ScalarJet2 operator*(double s, const ScalarJet2& a) {
    return {s * a.v, s * a.du, s * a.dv, s * a.duu, s * a.duv, s * a.dvv};
}

// Composition with a scalar function given by (f(x0), f'(x0), f''(x0)).
inline ScalarJet2 jet_chain(const ScalarJet2& x, double f0, double f1, double f2) {
    ScalarJet2 r;
    r.v = f0;
    r.du = f1 * x.du;
    r.dv = f1 * x.dv;
    r.duu = f2 * x.du * x.du + f1 * x.duu;
    r.duv = f2 * x.du * x.dv + f1 * x.duv;
    r.dvv = f2 * x.dv * x.dv + f1 * x.dvv;
    return r;
}

// Caller guarantees b.v != 0.
inline ScalarJet2 operator/(const ScalarJet2& a, const ScalarJet2& b) {
    const double iv = 1.0 / b.v;
    return a * jet_chain(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline ScalarJet2 jet_sin(const ScalarJet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return jet_chain(x, s, c, -s);
}

inline ScalarJet2 jet_cos(const ScalarJet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return jet_chain(x, c, -s, -c);
}

// Caller guarantees cos(x.v) != 0.
inline ScalarJet2 jet_tan(const ScalarJet2& x) {
    const double t = std::tan(x.v);
    const double d = 1.0 + t * t;
    return jet_chain(x, t, d, 2.0 * t * d);
}

inline ScalarJet2 jet_exp(const ScalarJet2& x) {
    const double e = std::exp(x.v);
    return jet_chain(x, e, e, e);
}

// Caller guarantees x.v > 0.
inline ScalarJet2 jet_log(const ScalarJet2& x) {
    const double iv = 1.0 / x.v;
    return jet_chain(x, std::log(x.v), iv, -iv * iv);
}

// Caller guarantees x.v > 0.
inline ScalarJet2 jet_sqrt(const ScalarJet2& x) {
    const double s = std::sqrt(x.v);
    return jet_chain(x, s, 0.5 / s, -0.25 / (s * x.v));
}

// Caller guarantees x.v != 0 (abs is not differentiable at 0).
inline ScalarJet2 jet_abs(const ScalarJet2& x) {
    return x.v > 0 ? x : -x;
}

// Power with constant exponent. Caller guarantees the base/exponent pair is
// in the smooth domain: a.v > 0, or a.v < 0 with integer c, or a.v == 0 with
// c a nonnegative integer.
inline ScalarJet2 jet_pow_const(const ScalarJet2& a, double c) {
    if (c == 0.0) return ScalarJet2::constant(1.0);
    if (c == 1.0) return a;
    if (c == 2.0) return a * a;
    if (a.v == 0.0) {
        // c >= 3 integer here; value and both derivative factors vanish.
        const double f1 = (c == 1.0) ? 1.0 : 0.0;
        const double f2 = (c == 2.0) ? 2.0 : 0.0;
        return jet_chain(a, 0.0, f1, f2);
    }
    const double f0 = std::pow(a.v, c);
    const double f1 = c * std::pow(a.v, c - 1.0);
    const double f2 = c * (c - 1.0) * std::pow(a.v, c - 2.0);
    return jet_chain(a, f0, f1, f2);
}

// General power a^b = exp(b*log(a)). Caller guarantees a.v > 0.
inline ScalarJet2 jet_pow(const ScalarJet2& a, const ScalarJet2& b) {
    return jet_exp(b * jet_log(a));
}

}  // namespace wintgen
