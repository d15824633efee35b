#pragma once

// Portable seeded integers. std::mt19937_64 has a fully specified output
// sequence; the standard distributions do not, so bounded draws are done here
// by rejection sampling on the raw 64-bit stream.

#include <cstdint>
#include <random>

#include "brank/matrix.hpp"

namespace brank {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, span) for span >= 1.
  std::uint64_t below(std::uint64_t span) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % span;
  }

  /// Uniform in {-bound, ..., bound}.
  long symmetric(long bound) {
    return static_cast<long>(below(static_cast<std::uint64_t>(2 * bound + 1))) - bound;
  }

  /// Uniform in {-bound, ..., bound} \ {0}; requires bound >= 1.
  long nonzero(long bound) {
    const long v = static_cast<long>(below(static_cast<std::uint64_t>(2 * bound))) - bound;
    return v >= 0 ? v + 1 : v;
  }

  Vector vector(std::size_t size, long bound) {
    Vector v(size);
    for (auto& x : v) x = symmetric(bound);
    return v;
  }

  Vector nonzero_vector(std::size_t size, long bound) {
    Vector v;
    do {
      v = vector(size, bound);
    } while (is_zero(v));
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long bound) {
    return Matrix::from_vector(vector(rows * cols, bound), rows, cols);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace brank
