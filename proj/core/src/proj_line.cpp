#include "goncurve/proj_line.hpp"

#include "goncurve/error.hpp"

namespace goncurve {

namespace {

// Scales a list of rationals to coprime integers with the first nonzero
// entry positive. The list must not be all zero.
template <std::size_t N>
std::array<Integer, N> primitive_integers(const std::array<Rational, N>& values) {
  Integer lcm_den = 1;
  for (const auto& v : values) lcm_den = lcm(lcm_den, v.get_den());
  std::array<Integer, N> out;
  Integer content = 0;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = values[i].get_num() * (lcm_den / values[i].get_den());
    content = gcd(content, out[i]);
  }
  int sign = 0;
  for (const auto& v : out) {
    if (sgn(v) != 0) {
      sign = sgn(v);
      break;
    }
  }
  for (auto& v : out) {
    v /= content;
    if (sign < 0) v = -v;
  }
  return out;
}

}  // namespace

ProjPoint::ProjPoint(const Rational& a0, const Rational& a1) {
  if (sgn(a0) == 0 && sgn(a1) == 0) fail(ErrorCode::zero_point, "point (0, 0) is not in P^1");
  auto c = primitive_integers<2>({a0, a1});
  a0_ = std::move(c[0]);
  a1_ = std::move(c[1]);
}

std::strong_ordering operator<=>(const ProjPoint& lhs, const ProjPoint& rhs) {
  int c = cmp(lhs.a0_, rhs.a0_);
  if (c == 0) c = cmp(lhs.a1_, rhs.a1_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ProjPoint::to_string() const {
  return "[" + a0_.get_str() + ":" + a1_.get_str() + "]";
}

ProjPoint canonicalize_point(const Rational& a0, const Rational& a1) { return ProjPoint(a0, a1); }

std::vector<Rational> eval_vector(const ProjPoint& p, int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "negative degree");
  std::vector<Integer> pow0(k + 1), pow1(k + 1);
  pow0[0] = 1;
  pow1[0] = 1;
  for (int i = 1; i <= k; ++i) {
    pow0[i] = pow0[i - 1] * p.a0();
    pow1[i] = pow1[i - 1] * p.a1();
  }
  std::vector<Rational> out(k + 1);
  for (int i = 0; i <= k; ++i) out[i] = pow0[k - i] * pow1[i];
  return out;
}

MoebiusMap::MoebiusMap(const Rational& m00, const Rational& m01, const Rational& m10,
                       const Rational& m11) {
  if (m00 * m11 - m01 * m10 == 0) {
    fail(ErrorCode::degenerate_input, "Moebius matrix is singular");
  }
  m_ = primitive_integers<4>({m00, m01, m10, m11});
}

MoebiusMap MoebiusMap::inverse() const {
  return MoebiusMap(Rational(m_[3]), Rational(-m_[1]), Rational(-m_[2]), Rational(m_[0]));
}

std::string MoebiusMap::to_string() const {
  return "[[" + m_[0].get_str() + "," + m_[1].get_str() + "],[" + m_[2].get_str() + "," +
         m_[3].get_str() + "]]";
}

ProjPoint apply_moebius(const MoebiusMap& m, const ProjPoint& p) {
  return ProjPoint(Rational(m(0, 0) * p.a0() + m(0, 1) * p.a1()),
                   Rational(m(1, 0) * p.a0() + m(1, 1) * p.a1()));
}

MoebiusMap compose(const MoebiusMap& outer, const MoebiusMap& inner) {
  auto at = [&](int r, int c) {
    return Rational(outer(r, 0) * inner(0, c) + outer(r, 1) * inner(1, c));
  };
  return MoebiusMap(at(0, 0), at(0, 1), at(1, 0), at(1, 1));
}

namespace {

// The map sending 0 = [1:0], infinity = [0:1] and 1 = [1:1] to q1, q3, q2.
MoebiusMap frame_map(const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3) {
  // Columns lambda*q1 and mu*q3 with lambda*q1 + mu*q3 = q2 (Cramer's rule,
  // both scaled by the common determinant).
  Integer lambda = q2.a0() * q3.a1() - q3.a0() * q2.a1();
  Integer mu = q1.a0() * q2.a1() - q2.a0() * q1.a1();
  return MoebiusMap(Rational(lambda * q1.a0()), Rational(mu * q3.a0()),
                    Rational(lambda * q1.a1()), Rational(mu * q3.a1()));
}

void require_distinct(const std::array<ProjPoint, 3>& pts, const char* which) {
  if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) {
    fail(ErrorCode::degenerate_input, std::string(which) + " points are not pairwise distinct");
  }
}

}  // namespace

MoebiusMap moebius_from_three_pairs(const std::array<ProjPoint, 3>& src,
                                    const std::array<ProjPoint, 3>& dst) {
  require_distinct(src, "source");
  require_distinct(dst, "destination");
  MoebiusMap to_src = frame_map(src[0], src[1], src[2]);
  MoebiusMap to_dst = frame_map(dst[0], dst[1], dst[2]);
  return compose(to_dst, to_src.inverse());
}

ProjPoint cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                      const ProjPoint& p4) {
  static const std::array<ProjPoint, 3> frame{ProjPoint(1, 0), ProjPoint(1, 1), ProjPoint(0, 1)};
  return apply_moebius(moebius_from_three_pairs({p1, p2, p3}, frame), p4);
}

ProjPoint parse_point(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return ProjPoint::infinity();
  return ProjPoint::affine(parse_rational(text));
}

}  // namespace goncurve
