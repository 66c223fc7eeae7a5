#pragma once

#include <cstdint>

#include "homjet/linalg.hpp"

namespace homjet {

/// Deterministic pseudo-random source for exact test vectors (splitmix64).
/// Fixed seeds keep every verification and report byte-reproducible.
class DetRng {
public:
  explicit DetRng(std::uint64_t seed) : m_state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
  Rational rational() {
    long num = long(next() % 19) - 9;
    long den = long(next() % 3) + 1;
    return Rational(num, den);
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (sgn(r) != 0) return r;
    }
  }

  Vec vector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = Scalar(rational());
    return v;
  }

  Vec nonzero_vector(int n) {
    for (;;) {
      Vec v = vector(n);
      if (!is_zero_vec(v)) return v;
    }
  }

private:
  std::uint64_t m_state;
};

} // namespace homjet
