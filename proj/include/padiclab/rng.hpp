#ifndef PADICLAB_RNG_HPP
#define PADICLAB_RNG_HPP

// Seeded splitmix64 generator.  Pinned here (rather than <random>) so that
// identical seeds give identical streams on every platform and standard
// library, which the deterministic-output contract requires.

#include <cstdint>

#include "padiclab/padic.hpp"

namespace padiclab {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Uniform-enough residue in [0, p^N); deterministic digit construction.
  bigint residue(int64_t p, int N) {
    bigint r = 0;
    for (int i = 0; i < N; ++i) r = r * p + bigint(below((uint64_t)p));
    return r;
  }

  // Residue with valuation exactly 0.
  bigint unit_residue(int64_t p, int N) {
    bigint r = residue(p, N);
    bigint low = r % p;
    if (low == 0) r += 1 + bigint(below((uint64_t)(p - 1)));
    return r;
  }

 private:
  uint64_t state_;
};

}  // namespace padiclab

#endif
