#include <gtest/gtest.h>

#include "generators.hpp"
#include "goncurve/error.hpp"
#include "goncurve/gonality_engine.hpp"
#include "goncurve/oracle.hpp"

using namespace goncurve;
using goncurve::testing::Gen;
using oracle::Verdict;

namespace {

ProjPoint z(long value) { return ProjPoint::affine(value); }

// Direct homogeneous evaluation from the coefficient lists.
std::pair<Rational, Rational> direct(const Pencil& p, const ProjPoint& x) {
  Rational f = 0, g = 0, a0 = x.a0(), a1 = x.a1();
  int k = p.k();
  for (int i = 0; i <= k; ++i) {
    Rational mono = 1;
    for (int t = 0; t < k - i; ++t) mono *= a0;
    for (int t = 0; t < i; ++t) mono *= a1;
    f += p.exact_f()[i].rational_part() * mono;
    g += p.exact_g()[i].rational_part() * mono;
  }
  return {f, g};
}

}  // namespace

TEST(VanishPolePencil, GenusTwoWitness) {
  Pencil p = oracle::vanish_pole_pencil({z(0), z(1)}, {z(2), z(3)});
  EXPECT_EQ(p.k(), 2);
  for (long x : {0, 1}) {
    auto [f, g] = direct(p, z(x));
    EXPECT_EQ(f, 0);
    EXPECT_NE(g, 0);
  }
  for (long x : {2, 3}) {
    auto [f, g] = direct(p, z(x));
    EXPECT_NE(f, 0);
    EXPECT_EQ(g, 0);
  }
  // z(z - 1) and (z - 2)(z - 3) up to a common scale.
  std::vector<Rational> f{0, -1, 1}, g{6, -5, 1};
  Rational s = p.exact_g()[0].rational_part() / 6;
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(p.exact_f()[i].rational_part(), s * f[i]);
    EXPECT_EQ(p.exact_g()[i].rational_part(), s * g[i]);
  }
}

TEST(VanishPolePencil, DegreeOne) {
  Pencil p = oracle::vanish_pole_pencil({z(0)}, {ProjPoint::infinity()});
  EXPECT_EQ(p.k(), 1);
  EXPECT_EQ(direct(p, z(0)).first, 0);
  EXPECT_EQ(direct(p, ProjPoint::infinity()).second, 0);
  EXPECT_NE(direct(p, z(5)).first * direct(p, z(5)).second, 0);
}

TEST(VanishPolePencil, TriplesIdentified) {
  Pencil p = oracle::vanish_pole_pencil({z(0), z(1), z(2)}, {z(3), z(4), z(5)});
  EXPECT_EQ(p.k(), 3);
  for (long x : {0, 1, 2}) EXPECT_EQ(direct(p, z(x)).first, 0);
  for (long x : {3, 4, 5}) EXPECT_EQ(direct(p, z(x)).second, 0);
}

TEST(VanishPolePencil, GroupsMatchUnderImagesMatch) {
  Gen gen(61);
  for (int i = 0; i < 100; ++i) {
    int s = static_cast<int>(gen.integer(1, 4));
    auto pts = gen.distinct_points(2 * s);
    std::vector<ProjPoint> a(pts.begin(), pts.begin() + s), b(pts.begin() + s, pts.end());
    Pencil p = oracle::vanish_pole_pencil(a, b);
    for (int j = 1; j < s; ++j) {
      EXPECT_TRUE(images_match(p, a[0], a[j]));
      EXPECT_TRUE(images_match(p, b[0], b[j]));
    }
  }
}

TEST(VanishPolePencil, RejectsBadGroups) {
  EXPECT_THROW(oracle::vanish_pole_pencil({z(0)}, {z(0)}), Error);
  EXPECT_THROW(oracle::vanish_pole_pencil({z(0), z(1)}, {z(2)}), Error);
  EXPECT_THROW(oracle::vanish_pole_pencil({}, {}), Error);
}

TEST(ExactMinIdentifyDegree, Examples) {
  EXPECT_EQ(oracle::exact_min_identify_degree({{z(0), z(1)}}, 1), (std::vector<Verdict>{Verdict::empty}));
  auto two = oracle::exact_min_identify_degree({{z(0), z(1)}, {z(2), z(3)}}, 2);
  EXPECT_EQ(two.back(), Verdict::exists);
  Gen gen(62);
  int empty = 0;
  for (int i = 0; i < 20; ++i) {
    auto pts = gen.distinct_points(6, 1000);
    auto v = oracle::exact_min_identify_degree({{pts[0], pts[1]}, {pts[2], pts[3]}, {pts[4], pts[5]}}, 2);
    empty += v[1] == Verdict::empty;
  }
  EXPECT_EQ(empty, 20);
}

TEST(ExactMinIdentifyDegree, Names) {
  EXPECT_EQ(oracle::to_string(Verdict::exists), "EXISTS");
  EXPECT_EQ(oracle::to_string(Verdict::empty), "EMPTY");
  EXPECT_EQ(oracle::to_string(Verdict::undecided), "UNDECIDED");
}

TEST(PlantedBinaryCurve, IdentityDiagonal) {
  Pencil id = Pencil::rational({1, 0}, {0, 1});
  BinaryCurve c = oracle::planted_binary_curve(id, {z(0), z(1), ProjPoint::infinity()}, 0);
  EXPECT_EQ(c.side1, c.side2);
  EXPECT_EQ(c.side1, (std::vector<ProjPoint>{z(0), z(1), ProjPoint::infinity()}));
}

TEST(PlantedBinaryCurve, Square) {
  Pencil sq = Pencil::rational({1, 0, 0}, {0, 0, 1});
  BinaryCurve c = oracle::planted_binary_curve(sq, {z(0), z(1), z(2), z(3), z(4)}, 0);
  EXPECT_EQ(c.side2, (std::vector<ProjPoint>{z(0), z(1), z(4), z(9), z(16)}));
}

TEST(PlantedBinaryCurve, OffendingNodesReplaced) {
  // z^2 sends 1 and -1 together; one of them must be replaced.
  Pencil sq = Pencil::rational({1, 0, 0}, {0, 0, 1});
  BinaryCurve c = oracle::planted_binary_curve(sq, {z(1), z(-1), z(2), z(3)}, 4);
  EXPECT_TRUE(validate(c, false).empty());
  for (std::size_t j = 0; j < c.side1.size(); ++j) EXPECT_EQ(evaluate(sq, c.side1[j]), c.side2[j]);
}

TEST(ExactMinIdentifyDegree, SpuriousLocusIsNotExistence) {
  // Both rank-2 points of the k = 3 locus have a base point at a node, so
  // neither is a degree-3 map identifying the pairs.
  std::vector<std::pair<ProjPoint, ProjPoint>> pairs{{ProjPoint(1, -2), ProjPoint(1, 0)},
                                                     {ProjPoint(0, 1), ProjPoint(6, 5)},
                                                     {ProjPoint(3, 4), ProjPoint(1, -1)},
                                                     {ProjPoint(3, -1), ProjPoint(1, -4)}};
  auto v = oracle::exact_min_identify_degree(pairs, 3);
  EXPECT_EQ(v[2], Verdict::undecided);
  IdentifyResult r = identify_pairs(pairs, 3, GonalityConfig{});
  EXPECT_FALSE(r.pencil);
  EXPECT_EQ(r.exclusion, Exclusion::exact);
}
