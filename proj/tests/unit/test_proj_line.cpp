#include <gtest/gtest.h>

#include "generators.hpp"
#include "goncurve/error.hpp"
#include "goncurve/proj_line.hpp"

using namespace goncurve;
using goncurve::testing::Gen;

namespace {

ProjPoint z(long value) { return ProjPoint::affine(value); }
const ProjPoint kInf = ProjPoint::infinity();

// Affine cross-ratio (z4 - z1)(z2 - z3) / ((z4 - z3)(z2 - z1)) for finite points.
Rational affine_cross_ratio(const Rational& z1, const Rational& z2, const Rational& z3, const Rational& z4) {
  Rational r = (z4 - z1) * (z2 - z3) / ((z4 - z3) * (z2 - z1));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(CanonicalizePoint, ClearsDenominatorsAndCommonFactor) {
  ProjPoint p = canonicalize_point(Rational(2, 3), Rational(4, 3));
  EXPECT_EQ(p.a0(), 1);
  EXPECT_EQ(p.a1(), 2);
}

TEST(CanonicalizePoint, NormalizesSignAndScale) {
  ProjPoint p = canonicalize_point(0, -5);
  EXPECT_EQ(p.a0(), 0);
  EXPECT_EQ(p.a1(), 1);
}

TEST(CanonicalizePoint, LeadingCoordinateOnly) {
  ProjPoint p = canonicalize_point(7, 0);
  EXPECT_EQ(p.a0(), 1);
  EXPECT_EQ(p.a1(), 0);
}

TEST(CanonicalizePoint, RejectsZero) {
  try {
    canonicalize_point(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_point);
  }
}

TEST(CanonicalizePoint, Idempotent) {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    ProjPoint p = canonicalize_point(gen.rational(), gen.rational() + 1);
    EXPECT_EQ(canonicalize_point(Rational(p.a0()), Rational(p.a1())), p);
  }
}

TEST(EvalVector, Examples) {
  EXPECT_EQ(eval_vector(ProjPoint(1, 0), 2), (std::vector<Rational>{1, 0, 0}));
  EXPECT_EQ(eval_vector(ProjPoint(1, 1), 2), (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(eval_vector(ProjPoint(1, 2), 3), (std::vector<Rational>{1, 2, 4, 8}));
}

TEST(EvalVector, NeverZeroAndDegreeOneIndependent) {
  Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    auto pts = gen.distinct_points(2);
    int k = static_cast<int>(gen.integer(0, 6));
    auto e = eval_vector(pts[0], k);
    EXPECT_TRUE(std::any_of(e.begin(), e.end(), [](const Rational& x) { return sgn(x) != 0; }));
    auto u = eval_vector(pts[0], 1), v = eval_vector(pts[1], 1);
    EXPECT_NE(u[0] * v[1] - u[1] * v[0], 0);
  }
}

TEST(MoebiusFromThreePairs, Identity) {
  MoebiusMap m = moebius_from_three_pairs({z(0), z(1), kInf}, {z(0), z(1), kInf});
  EXPECT_EQ(m, MoebiusMap::identity());
}

TEST(MoebiusFromThreePairs, Inversion) {
  MoebiusMap m = moebius_from_three_pairs({z(0), z(1), kInf}, {kInf, z(1), z(0)});
  EXPECT_EQ(m, MoebiusMap(0, 1, 1, 0));
  EXPECT_EQ(apply_moebius(m, z(0)), kInf);
  EXPECT_EQ(apply_moebius(m, z(1)), z(1));
  EXPECT_EQ(apply_moebius(m, kInf), z(0));
}

TEST(MoebiusFromThreePairs, Translation) {
  MoebiusMap m = moebius_from_three_pairs({z(0), z(1), kInf}, {z(1), z(2), kInf});
  EXPECT_EQ(apply_moebius(m, z(0)), z(1));
  EXPECT_EQ(apply_moebius(m, z(1)), z(2));
  EXPECT_EQ(apply_moebius(m, kInf), kInf);
  EXPECT_EQ(apply_moebius(m, z(5)), z(6));
}

TEST(MoebiusFromThreePairs, RejectsRepeats) {
  EXPECT_THROW(moebius_from_three_pairs({z(0), z(0), kInf}, {z(0), z(1), kInf}), Error);
  EXPECT_THROW(moebius_from_three_pairs({z(0), z(1), kInf}, {z(2), z(1), z(2)}), Error);
}

TEST(MoebiusFromThreePairs, ReproducesDestinations) {
  Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    auto src = gen.distinct_points(3), dst = gen.distinct_points(3);
    MoebiusMap m = moebius_from_three_pairs({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
    for (int j = 0; j < 3; ++j) EXPECT_EQ(apply_moebius(m, src[j]), dst[j]);
  }
}

TEST(ApplyMoebius, Examples) {
  EXPECT_EQ(apply_moebius(MoebiusMap::identity(), ProjPoint(3, 5)), ProjPoint(3, 5));
  EXPECT_EQ(apply_moebius(MoebiusMap(0, 1, 1, 0), ProjPoint(1, 0)), ProjPoint(0, 1));
  // z -> z + 1 acting on (a0, a1): a1 -> a0 + a1.
  EXPECT_EQ(apply_moebius(MoebiusMap(1, 0, 1, 1), ProjPoint(1, 2)), ProjPoint(1, 3));
}

TEST(ApplyMoebius, InverseRoundTrip) {
  Gen gen(14);
  for (int i = 0; i < 300; ++i) {
    MoebiusMap m = gen.moebius();
    ProjPoint p = gen.point();
    EXPECT_EQ(apply_moebius(m.inverse(), apply_moebius(m, p)), p);
    EXPECT_EQ(apply_moebius(compose(m.inverse(), m), p), p);
  }
}

TEST(MoebiusMap, CanonicalAndInvertible) {
  EXPECT_EQ(MoebiusMap(-2, 0, 0, -2), MoebiusMap::identity());
  EXPECT_THROW(MoebiusMap(1, 2, 2, 4), Error);
}

TEST(CrossRatio, Examples) {
  Gen gen(15);
  for (int i = 0; i < 50; ++i) {
    ProjPoint p = gen.point();
    EXPECT_EQ(cross_ratio(z(0), z(1), kInf, p), p);
  }
  EXPECT_EQ(cross_ratio(z(1), z(2), z(3), z(4)), ProjPoint::affine(affine_cross_ratio(1, 2, 3, 4)));
  EXPECT_EQ(cross_ratio(z(1), z(2), z(3), z(4)), z(-3));
  EXPECT_EQ(cross_ratio(z(0), z(1), kInf, z(0)), z(0));
}

TEST(CrossRatio, MatchesAffineFormula) {
  Gen gen(16);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> zs;
    while (zs.size() < 4) {
      Rational x = gen.rational();
      if (std::find(zs.begin(), zs.end(), x) == zs.end()) zs.push_back(x);
    }
    ProjPoint got = cross_ratio(ProjPoint::affine(zs[0]), ProjPoint::affine(zs[1]), ProjPoint::affine(zs[2]),
                                ProjPoint::affine(zs[3]));
    EXPECT_EQ(got, ProjPoint::affine(affine_cross_ratio(zs[0], zs[1], zs[2], zs[3])));
  }
}

TEST(CrossRatio, RejectsRepeatedFrame) {
  EXPECT_THROW(cross_ratio(z(1), z(1), z(3), z(4)), Error);
}

TEST(CrossRatio, MoebiusInvariant) {
  Gen gen(17);
  for (int i = 0; i < 300; ++i) {
    auto p = gen.distinct_points(3);
    ProjPoint p4 = gen.point();
    MoebiusMap m = gen.moebius();
    EXPECT_EQ(cross_ratio(apply_moebius(m, p[0]), apply_moebius(m, p[1]), apply_moebius(m, p[2]),
                          apply_moebius(m, p4)),
              cross_ratio(p[0], p[1], p[2], p4));
  }
}

TEST(ParsePoint, TextForms) {
  EXPECT_EQ(parse_point("inf"), kInf);
  EXPECT_EQ(parse_point("3/4"), ProjPoint(4, 3));
  EXPECT_EQ(parse_point("-7"), z(-7));
  EXPECT_THROW(parse_point("x"), Error);
  EXPECT_THROW(parse_point("1/0"), Error);
}
