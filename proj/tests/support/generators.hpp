#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "goncurve/proj_line.hpp"

namespace goncurve::testing {

// Small-height random objects for property loops.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long height = 20) {
    long den = integer(1, height);
    Rational r(integer(-height, height), den);
    r.canonicalize();
    return r;
  }

  ProjPoint point(long height = 20) {
    for (;;) {
      long a0 = integer(0, height), a1 = integer(-height, height);
      if (a0 != 0 || a1 != 0) return ProjPoint(a0, a1);
    }
  }

  std::vector<ProjPoint> distinct_points(int n, long height = 20) {
    std::vector<ProjPoint> out;
    while (static_cast<int>(out.size()) < n) {
      ProjPoint p = point(height);
      bool fresh = true;
      for (const auto& q : out) fresh = fresh && !(q == p);
      if (fresh) out.push_back(p);
    }
    return out;
  }

  MoebiusMap moebius(long height = 9) {
    for (;;) {
      long a = integer(-height, height), b = integer(-height, height);
      long c = integer(-height, height), d = integer(-height, height);
      if (a * d - b * c != 0) return MoebiusMap(a, b, c, d);
    }
  }

  std::vector<Rational> coefficients(int n, long height = 9) {
    std::vector<Rational> out(n);
    for (auto& x : out) x = integer(-height, height);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace goncurve::testing
