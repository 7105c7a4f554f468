#pragma once

#include <cstdint>
#include <vector>

#include "wintgen/linalg.hpp"

namespace wintgen {

// Deterministic generator for the randomized verification suites. splitmix64
// keeps the streams identical across platforms and standard-library versions,
// which the byte-identical-report requirement depends on. A suite derives one
// child stream per case index, so worker order cannot perturb results.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // uniform integer in [lo, hi]
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Child stream for case k of a seeded suite.
    static Rng for_case(std::uint64_t seed, std::uint64_t k) {
        Rng mix(seed * 0x9e3779b97f4a7c15ull + k + 1);
        return Rng(mix.next_u64());
    }

    Vec uniform_vec(std::size_t n, double lo, double hi) {
        Vec r(n);
        for (double& x : r) x = uniform(lo, hi);
        return r;
    }

  private:
    std::uint64_t state_;
};

// Random orthonormal frame in R^n: Gram-Schmidt over uniform raw vectors,
// retrying any draw that is nearly dependent on the ones kept so far.
inline std::vector<Vec> random_orthonormal_frame(Rng& rng, std::size_t n, std::size_t count) {
    std::vector<Vec> frame;
    frame.reserve(count);
    while (frame.size() < count) {
        Vec cand = orthogonalize(rng.uniform_vec(n, -1.0, 1.0), frame);
        if (norm(cand) < 1e-3) continue;
        frame.push_back(normalized(cand));
    }
    return frame;
}

}  // namespace wintgen
