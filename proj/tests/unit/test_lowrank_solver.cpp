#include <gtest/gtest.h>

#include "generators.hpp"
#include "goncurve/error.hpp"
#include "goncurve/lowrank_solver.hpp"

using namespace goncurve;
using goncurve::testing::Gen;

namespace {

RationalMatrix antisym(int n, const std::vector<std::tuple<int, int, long>>& entries) {
  RationalMatrix m(n, n);
  for (auto [i, j, v] : entries) {
    m(i, j) = v;
    m(j, i) = -v;
  }
  return m;
}

RationalMatrix random_antisym(Gen& gen, int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = gen.integer(-9, 9);
      m(j, i) = -m(i, j);
    }
  return m;
}

RationalMatrix random_rect(Gen& gen, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gen.integer(-9, 9);
  return m;
}

// u v^T - v u^T for integer vectors.
RationalMatrix wedge(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  int n = static_cast<int>(u.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u[i] * v[j] - v[i] * u[j];
  return m;
}

RationalMatrix two_term(const std::vector<Rational>& x, const std::vector<Rational>& y, const std::vector<Rational>& z,
                        const std::vector<Rational>& w) {
  RationalMatrix m(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = x[i] * y[j] - z[i] * w[j];
  return m;
}

ComplexMatrix recompose(const Rank2Witness& w) {
  auto col = [](const std::vector<Complex>& v) { return Eigen::Map<const ComplexVector>(v.data(), v.size()); };
  if (w.antisymmetric) return col(w.x) * col(w.y).transpose() - col(w.y) * col(w.x).transpose();
  return col(w.x) * col(w.y).transpose() - col(w.z) * col(w.w).transpose();
}

ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

void expect_valid(const LinearMatrixSpace& space, const Rank2Witness& w, double tol) {
  EXPECT_LE(space.membership_residual(w.matrix), tol);
  EXPECT_LE(w.residual, tol);
  EXPECT_TRUE(verify_rank2(w.matrix, tol).accept);
  double scale = w.matrix.norm();
  EXPECT_LE((recompose(w) - w.matrix).norm(), tol * scale);
}

}  // namespace

TEST(FindRankLe2, PfaffianNonzeroOnLine) {
  auto space = LinearMatrixSpace::exact(4, 4, true, {antisym(4, {{0, 1, 1}, {2, 3, 1}})});
  SolveResult r = find_rank_le2(space, {});
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.exclusion, Exclusion::exact);
}

TEST(FindRankLe2, GeneratorAlreadyRankTwo) {
  auto space = LinearMatrixSpace::exact(3, 3, true, {wedge({1, 0, 0}, {0, 1, 0})});
  SolveResult r = find_rank_le2(space, {});
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->exact);
  // Factors lie in span{e1, e2}.
  EXPECT_TRUE(r.witness->ex[2].is_zero());
  EXPECT_TRUE(r.witness->ey[2].is_zero());
  expect_valid(space, *r.witness, 1e-12);
}

TEST(FindRankLe2, PlantedAntisymmetricFiveByFive) {
  Gen gen(41);
  int recovered = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<RationalMatrix> basis{wedge(gen.coefficients(5), gen.coefficients(5))};
    for (int j = 0; j < 3; ++j) basis.push_back(random_antisym(gen, 5));
    auto space = LinearMatrixSpace::exact(5, 5, true, basis);
    SolverConfig config;
    config.seed = static_cast<std::uint64_t>(i);
    SolveResult r = find_rank_le2(space, config);
    ASSERT_TRUE(r.witness) << "instance " << i;
    expect_valid(space, *r.witness, 1e-9);
    ++recovered;
  }
  EXPECT_EQ(recovered, 20);
}

TEST(FindRankLe2, ForcedNumericAgreesOnExactEmptiness) {
  Gen gen(42);
  int checked = 0;
  while (checked < 30) {
    RationalMatrix m = random_antisym(gen, 4);
    if (pfaffian4(to_exact(m)).is_zero()) continue;
    auto space = LinearMatrixSpace::exact(4, 4, true, {m});
    EXPECT_EQ(find_rank_le2(space, {}).exclusion, Exclusion::exact);
    SolverConfig config;
    config.force_numeric = true;
    config.restarts = 20;
    EXPECT_FALSE(find_rank_le2(space, config).witness);
    ++checked;
  }
}

TEST(FindRankLe2, RectangularTwoColumnsExact) {
  Gen gen(43);
  for (int i = 0; i < 50; ++i) {
    int rows = static_cast<int>(gen.integer(2, 5)), dim = static_cast<int>(gen.integer(1, 3));
    std::vector<RationalMatrix> basis;
    for (int j = 0; j < dim; ++j) basis.push_back(random_rect(gen, rows, 2));
    auto space = LinearMatrixSpace::exact(rows, 2, false, basis);
    SolveResult r = find_rank_le2(space, {});
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(r.witness->exact);
    EXPECT_EQ(r.witness->residual, 0.0);
    expect_valid(space, *r.witness, 1e-12);
  }
}

TEST(FindRankLe2, PlantedRectangularNumeric) {
  Gen gen(44);
  for (int i = 0; i < 10; ++i) {
    auto x = gen.coefficients(4), y = gen.coefficients(4), z = gen.coefficients(4), w = gen.coefficients(4);
    std::vector<RationalMatrix> basis{two_term(x, y, z, w)};
    for (int j = 0; j < 4; ++j) basis.push_back(random_rect(gen, 4, 4));
    auto space = LinearMatrixSpace::exact(4, 4, false, basis);
    SolverConfig config;
    config.seed = 100 + static_cast<std::uint64_t>(i);
    SolveResult r = find_rank_le2(space, config);
    ASSERT_TRUE(r.witness);
    expect_valid(space, *r.witness, 1e-9);
  }
}

TEST(FindRankLe2, Deterministic) {
  Gen gen(45);
  std::vector<RationalMatrix> basis{wedge(gen.coefficients(5), gen.coefficients(5))};
  for (int j = 0; j < 3; ++j) basis.push_back(random_antisym(gen, 5));
  auto space = LinearMatrixSpace::exact(5, 5, true, basis);
  SolverConfig config;
  config.seed = 9;
  SolveResult a = find_rank_le2(space, config), b = find_rank_le2(space, config);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->matrix, b.witness->matrix);
  EXPECT_EQ(a.witness->x, b.witness->x);
}

TEST(FindRankLe2, RejectsBadShapes) {
  EXPECT_THROW(LinearMatrixSpace::exact(3, 4, true, {RationalMatrix(3, 4)}), Error);
  Gen gen(49);
  RationalMatrix square = random_rect(gen, 3, 3);
  square(0, 1) = 1;
  square(1, 0) = 1;
  EXPECT_THROW(LinearMatrixSpace::exact(3, 3, true, {square}), Error);
  RationalMatrix m = antisym(3, {{0, 1, 1}});
  EXPECT_THROW(LinearMatrixSpace::exact(3, 3, true, {m, m}), Error);
}

TEST(ExactRank2Locus, FourByFourPencilOfMatrices) {
  Gen gen(46);
  for (int i = 0; i < 100; ++i) {
    RationalMatrix a = random_antisym(gen, 4), b = random_antisym(gen, 4);
    if (exact_rank(a) == 0 || exact_rank(b) == 0) continue;
    auto space = LinearMatrixSpace::exact(4, 4, true, {a, b});
    auto locus = exact_rank2_locus(space);
    // Pf(s a + t b) is a binary quadratic in (s, t); count its projective roots.
    ExactMatrix ea = to_exact(a), eb = to_exact(b), apb(4, 4), amb(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        apb(r, c) = ea(r, c) + eb(r, c);
        amb(r, c) = ea(r, c) - eb(r, c);
      }
    Rational pa = pfaffian4(ea).rational_part(), pb = pfaffian4(eb).rational_part();
    Rational mixed = (pfaffian4(apb).rational_part() - pfaffian4(amb).rational_part()) / 2;
    Rational disc = mixed * mixed - 4 * pa * pb;
    if (pa == 0 && pb == 0 && mixed == 0) {
      EXPECT_FALSE(locus);
      continue;
    }
    ASSERT_TRUE(locus);
    std::size_t expected = sgn(disc) == 0 ? 1 : 2;
    EXPECT_EQ(locus->size(), expected);
    for (const auto& w : *locus) {
      EXPECT_TRUE(pfaffian4(w.exact_matrix).is_zero());
      EXPECT_EQ(exact_rank(w.exact_matrix), 2);
    }
  }
}

TEST(FactorRank2, AntisymmetricUnit) {
  Rank2Witness w = factor_rank2(to_exact(wedge({1, 0, 0}, {0, 1, 0})), true);
  EXPECT_EQ(w.ex[2], ExactScalar(0));
  EXPECT_EQ(w.ey[2], ExactScalar(0));
  EXPECT_LE((recompose(w) - w.matrix).norm(), 0.0);
}

TEST(FactorRank2, PlantedRectangularExactRecomposition) {
  Gen gen(47);
  for (int i = 0; i < 100; ++i) {
    int rows = static_cast<int>(gen.integer(2, 6)), cols = static_cast<int>(gen.integer(2, 6));
    RationalMatrix m;
    do {
      m = two_term(gen.coefficients(rows), gen.coefficients(cols), gen.coefficients(rows), gen.coefficients(cols));
    } while (exact_rank(m) != 2);
    Rank2Witness w = factor_rank2(to_exact(m), false);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) EXPECT_EQ(w.ex[r] * w.ey[c] - w.ez[r] * w.ew[c], ExactScalar(m(r, c)));
    Rank2Witness n = factor_rank2(to_complex_scaled(m), false, 1e-9);
    EXPECT_LE((recompose(n) - n.matrix).norm(), 1e-9 * n.matrix.norm());
  }
}

TEST(FactorRank2, RankOneRejected) {
  RationalMatrix m = two_term({1, 2}, {3, 4}, {0, 0}, {0, 0});
  try {
    factor_rank2(to_exact(m), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rank_mismatch);
  }
  EXPECT_THROW(factor_rank2(to_complex_scaled(m), false, 1e-9), Error);
}

TEST(VerifyRank2, Examples) {
  RationalMatrix m = wedge({1, 2, 3}, {0, 1, -1});
  EXPECT_EQ(verify_rank2(to_exact(m)).residual, 0.0);
  EXPECT_TRUE(verify_rank2(to_exact(m)).accept);
  RankReport id = verify_rank2(ComplexMatrix::Identity(3, 3), 1e-9);
  EXPECT_FALSE(id.accept);
  EXPECT_NEAR(id.residual, 1.0, 1e-15);
  std::mt19937_64 rng(48);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 50; ++i) {
    ComplexMatrix p = ComplexMatrix::Random(5, 2) * ComplexMatrix::Random(2, 4);
    ComplexMatrix noise(5, 4);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 4; ++c) noise(r, c) = Complex(normal(rng), normal(rng));
    ComplexMatrix noisy = p + 1e-12 * p.norm() / noise.norm() * noise;
    EXPECT_TRUE(verify_rank2(noisy, 1e-9).accept);
  }
}

TEST(Rank2Codimension, Values) {
  EXPECT_EQ(rank2_codimension(3, 3, true), 0);
  EXPECT_EQ(rank2_codimension(4, 4, true), 1);
  EXPECT_EQ(rank2_codimension(5, 5, true), 3);
  EXPECT_EQ(rank2_codimension(3, 2, false), 0);
  EXPECT_EQ(rank2_codimension(3, 3, false), 1);
  EXPECT_EQ(rank2_codimension(4, 5, false), 6);
}
