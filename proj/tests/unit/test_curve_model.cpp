#include <gtest/gtest.h>

#include "generators.hpp"
#include "goncurve/curve_model.hpp"
#include "goncurve/error.hpp"
#include "goncurve/json_io.hpp"

using namespace goncurve;
using goncurve::testing::Gen;

namespace {

ProjPoint z(long value) { return ProjPoint::affine(value); }
const ProjPoint kInf = ProjPoint::infinity();

IrreducibleNodalCurve pairs_curve(std::vector<std::pair<long, long>> pairs) {
  IrreducibleNodalCurve c;
  for (auto [a, b] : pairs) c.pairs.emplace_back(z(a), z(b));
  return c;
}

}  // namespace

TEST(Genus, Examples) {
  EXPECT_EQ(genus(pairs_curve({{0, 1}, {2, 3}, {4, 5}})), 3);
  EXPECT_EQ(genus(BinaryCurve{{z(0), z(1), kInf}, {z(0), z(1), kInf}}), 2);
  EXPECT_EQ(genus(BinaryCurve{{z(0), z(1), z(2), z(3), z(4), kInf}, {z(0), z(1), z(2), z(3), z(4), kInf}}), 5);
}

TEST(Validate, RepeatedPointAcrossPairs) {
  auto issues = validate(pairs_curve({{0, 1}, {0, 2}}));
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().index, 1);
}

TEST(Validate, CrossSideRepeatsAllowed) {
  EXPECT_TRUE(validate(BinaryCurve{{z(0), z(1), kInf}, {z(0), z(1), kInf}}).empty());
}

TEST(Validate, CoincidentBranches) {
  auto issues = validate(pairs_curve({{0, 0}, {1, 2}}), false);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues.front().index, 0);
}

TEST(Validate, GenusTooSmallOnlyForGonality) {
  auto c = pairs_curve({{0, 1}});
  EXPECT_TRUE(validate(c, false).empty());
  EXPECT_FALSE(validate(c, true).empty());
  EXPECT_THROW(require_valid(c), Error);
}

TEST(Validate, BinarySideLengthsAndRepeats) {
  EXPECT_FALSE(validate(BinaryCurve{{z(0), z(1), kInf}, {z(0), z(1)}}).empty());
  EXPECT_FALSE(validate(BinaryCurve{{z(0), z(1), z(1)}, {z(0), z(1), z(2)}}).empty());
}

TEST(RandomCurve, IrreducibleGenusTwoReproducible) {
  CurveDocument a = random_curve(Family::irreducible, 2, 0), b = random_curve(Family::irreducible, 2, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(dump_canonical(to_json(a)), dump_canonical(to_json(b)));
  EXPECT_EQ(genus(a.curve), 2);
  EXPECT_TRUE(validate(a.curve).empty());
}

TEST(RandomCurve, BinaryGenusFive) {
  CurveDocument d = random_curve(Family::binary, 5, 7);
  EXPECT_EQ(d.binary().side1.size(), 6u);
  EXPECT_EQ(d.binary().side2.size(), 6u);
  EXPECT_TRUE(validate(d.curve).empty());
  EXPECT_EQ(d.seed, 7u);
  EXPECT_EQ(d.height, 1000);
}

TEST(RandomCurve, AlwaysValidAndBounded) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (Family family : {Family::irreducible, Family::binary}) {
      int g = 2 + static_cast<int>(seed % 7);
      int height = 2 * g + 2 + static_cast<int>(seed % 5);
      CurveDocument d = random_curve(family, g, seed, height);
      EXPECT_TRUE(validate(d.curve).empty());
      EXPECT_EQ(genus(d.curve), g);
      auto check = [&](const ProjPoint& p) {
        EXPECT_LE(abs(p.a0()), height);
        EXPECT_LE(abs(p.a1()), height);
      };
      if (family == Family::irreducible) {
        for (const auto& [a, b] : d.irreducible().pairs) check(a), check(b);
      } else {
        for (const auto& p : d.binary().side1) check(p);
        for (const auto& p : d.binary().side2) check(p);
      }
    }
  }
}

TEST(RandomCurve, RejectsBadArguments) {
  try {
    random_curve(Family::binary, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bad_genus);
  }
  EXPECT_THROW(random_curve(Family::irreducible, 4, 0, 9), Error);
}

TEST(Transform, Identity) {
  CurveDocument d = random_curve(Family::binary, 3, 1);
  EXPECT_EQ(transform(d.binary(), MoebiusMap::identity()), d.binary());
  CurveDocument e = random_curve(Family::irreducible, 3, 1);
  EXPECT_EQ(transform(e.irreducible(), MoebiusMap::identity()), e.irreducible());
}

TEST(Transform, ShiftBothSides) {
  BinaryCurve c{{z(0), z(1), kInf}, {z(2), z(3), z(4)}};
  BinaryCurve t = transform(c, MoebiusMap(1, 0, 1, 1));
  EXPECT_EQ(t.side1, (std::vector<ProjPoint>{z(1), z(2), kInf}));
  EXPECT_EQ(t.side2, (std::vector<ProjPoint>{z(3), z(4), z(5)}));
}

TEST(Transform, InverseRoundTripAndGenus) {
  Gen gen(51);
  for (int i = 0; i < 100; ++i) {
    MoebiusMap m1 = gen.moebius(), m2 = gen.moebius();
    CurveDocument b = random_curve(Family::binary, 2 + i % 5, static_cast<std::uint64_t>(i));
    BinaryCurve tb = transform(b.binary(), m1, m2);
    EXPECT_TRUE(validate(tb).empty());
    EXPECT_EQ(genus(tb), genus(b.binary()));
    EXPECT_EQ(transform(tb, m1.inverse(), m2.inverse()), b.binary());
    CurveDocument a = random_curve(Family::irreducible, 2 + i % 5, static_cast<std::uint64_t>(i));
    IrreducibleNodalCurve ta = transform(a.irreducible(), m1);
    EXPECT_TRUE(validate(ta).empty());
    EXPECT_EQ(transform(ta, m1.inverse()), a.irreducible());
  }
}

TEST(Family, Names) {
  EXPECT_EQ(parse_family("binary"), Family::binary);
  EXPECT_EQ(to_string(Family::irreducible), "irreducible");
  EXPECT_THROW(parse_family("ternary"), Error);
}
