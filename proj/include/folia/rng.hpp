#pragma once

#include <cstdint>

#include "folia/rational.hpp"

namespace folia {

/// Deterministic splitmix64 generator. Does not depend on libstdc++
/// distribution internals, so a seed pins byte-identical output everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }

  /// Small integer in [-9, 9]; the sampling range used by the basic-space
  /// oracle (exact arithmetic keeps kernels exact on such points).
  Rat small_int() { return Rat(uniform(-9, 9)); }

  /// Small nonzero integer.
  Rat small_nonzero() {
    std::int64_t v = 0;
    while (v == 0) v = uniform(-9, 9);
    return Rat(v);
  }

  /// Small rational p/q with |p| <= 9, 1 <= q <= 4.
  Rat small_rat() {
    Rat r(uniform(-9, 9), uniform(1, 4));
    r.canonicalize();
    return r;
  }

  VecR int_vector(std::size_t n) {
    VecR v(n);
    for (auto& x : v) x = small_int();
    return v;
  }

  /// Integer vector that is not identically zero.
  VecR nonzero_int_vector(std::size_t n) {
    while (true) {
      VecR v = int_vector(n);
      for (const auto& x : v)
        if (x != 0) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace folia
