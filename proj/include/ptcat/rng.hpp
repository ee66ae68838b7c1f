// Deterministic PRNG for the sampled suites. splitmix64 is used directly
// instead of <random> distributions so that the same seed produces the same
// instance stream on every platform and standard library.
#pragma once

#include <cstdint>
#include <vector>

#include "ptcat/matrix.hpp"

namespace ptcat {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

  // A fresh generator whose stream is independent of this one's future use.
  Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

 private:
  uint64_t state_;
};

// Entries from {-3,…,3}, scaled by 1/1 or 1/2.
inline Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = rat(rng.uniform(-3, 3), rng.coin() ? 1 : 2);
  return m;
}

}  // namespace ptcat
