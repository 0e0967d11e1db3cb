#pragma once

#include "symharm/form.hpp"

#include <cstdint>

namespace symharm {

// Deterministic 64-bit generator (splitmix64). Used instead of std
// distributions so seeded runs agree across standard libraries.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + (long long)below((std::uint64_t)(hi - lo + 1));
  }

  Rng fork(std::uint64_t stream) {
    Rng r(state ^ (0xd1342543de82ef95ull * (stream + 1)));
    r.next();
    return r;
  }
};

// Random form with integer coefficients in [-bound, bound].
Form random_form(Rng& rng, int n, int grade, long long bound);

}  // namespace symharm
