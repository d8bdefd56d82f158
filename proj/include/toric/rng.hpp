/// @file rng.hpp
/// @brief Deterministic seeded random source for evaluation points.
///
/// splitmix64; identical sequences on every platform for a given seed.

#pragma once

#include <cstdint>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] by rejection; lo <= hi required.
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    long nonzero_int_in(long lo, long hi) {
        long v;
        do {
            v = int_in(lo, hi);
        } while (v == 0);
        return v;
    }

    /// Random rational with numerator in [-97, 97] and denominator in [1, 97].
    Rat rat() { return make_rat(int_in(-97, 97), int_in(1, 97)); }

    Rat nonzero_rat() { return make_rat(nonzero_int_in(-97, 97), int_in(1, 97)); }

    std::vector<Rat> point(int k) {
        std::vector<Rat> p;
        p.reserve(k);
        for (int i = 0; i < k; ++i) p.push_back(rat());
        return p;
    }

    std::vector<Rat> nonzero_point(int k) {
        std::vector<Rat> p;
        p.reserve(k);
        for (int i = 0; i < k; ++i) p.push_back(nonzero_rat());
        return p;
    }

  private:
    std::uint64_t state_;
};

}  // namespace toric
