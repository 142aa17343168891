#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "goncurve/scalar.hpp"

namespace goncurve {

/// A point [a0 : a1] of the projective line.
///
/// Always stored in canonical form: coprime integers with the first nonzero
/// coordinate positive, so equality is equality of representatives. The
/// affine value of the point is a1/a0; [1 : 0] is 0 and [0 : 1] is infinity.
class ProjPoint {
 public:
  /// Canonicalizes (a0, a1). Throws zero_point for (0, 0).
  ProjPoint(const Rational& a0, const Rational& a1);

  static ProjPoint affine(const Rational& z) { return ProjPoint(1, z); }
  static ProjPoint infinity() { return ProjPoint(0, 1); }

  const Integer& a0() const { return a0_; }
  const Integer& a1() const { return a1_; }
  bool is_infinity() const { return a0_ == 0; }

  std::string to_string() const;

  friend bool operator==(const ProjPoint& lhs, const ProjPoint& rhs) {
    return lhs.a0_ == rhs.a0_ && lhs.a1_ == rhs.a1_;
  }
  friend std::strong_ordering operator<=>(const ProjPoint& lhs, const ProjPoint& rhs);

 private:
  Integer a0_;
  Integer a1_;
};

ProjPoint canonicalize_point(const Rational& a0, const Rational& a1);

/// Degree-k monomials (a0^k, a0^(k-1) a1, ..., a1^k) evaluated at p.
std::vector<Rational> eval_vector(const ProjPoint& p, int k);

/// Invertible 2x2 matrix acting on homogeneous coordinates, up to scale.
///
/// Canonical form: coprime integer entries with the first nonzero entry
/// positive. Entries are row-major: (a0, a1) -> (m00 a0 + m01 a1, m10 a0 + m11 a1).
class MoebiusMap {
 public:
  MoebiusMap(const Rational& m00, const Rational& m01, const Rational& m10, const Rational& m11);

  static MoebiusMap identity() { return MoebiusMap(1, 0, 0, 1); }

  const Integer& operator()(int row, int col) const { return m_[2 * row + col]; }
  Integer det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  MoebiusMap inverse() const;
  std::string to_string() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

 private:
  std::array<Integer, 4> m_;
};

ProjPoint apply_moebius(const MoebiusMap& m, const ProjPoint& p);

/// outer ∘ inner
MoebiusMap compose(const MoebiusMap& outer, const MoebiusMap& inner);

/// The unique map with m(src[i]) = dst[i]. Throws degenerate_input on repeats.
MoebiusMap moebius_from_three_pairs(const std::array<ProjPoint, 3>& src,
                                    const std::array<ProjPoint, 3>& dst);

/// T(p4) for the Moebius T with T(p1) = 0, T(p2) = 1, T(p3) = infinity.
ProjPoint cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                      const ProjPoint& p4);

/// Text forms: "inf", "p/q" or "n" (affine values); the homogeneous pair form
/// is handled by the JSON layer. Throws parse_error.
ProjPoint parse_point(const std::string& text);

}  // namespace goncurve
