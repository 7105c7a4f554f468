#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace wintgen {

// Ambient vectors are tiny (n <= 8 in practice); plain std::vector<double>
// plus a handful of free functions covers everything the engine needs.
using Vec = std::vector<double>;

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec operator-(const Vec& a) { return -1.0 * a; }

inline void axpy(double s, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

inline Vec normalized(const Vec& a) { return (1.0 / norm(a)) * a; }

// Removes from x its components along the given orthonormal vectors.
inline Vec orthogonalize(Vec x, const std::vector<Vec>& basis) {
    for (const Vec& b : basis) axpy(-dot(x, b), b, x);
    return x;
}

// Grassmann norm of the 2-vector a ^ b.
inline double wedge_norm(const Vec& a, const Vec& b) {
    const double g = norm2(a) * norm2(b) - dot(a, b) * dot(a, b);
    return g > 0.0 ? std::sqrt(g) : 0.0;
}

inline double max_abs(const Vec& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace wintgen
