#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goncurve/linear_core.hpp"

namespace goncurve {

struct SolverConfig {
  double tol = 1e-9;
  int restarts = 200;
  int max_iter = 50;
  std::uint64_t seed = 0;
  /// Cap for restart escalation in the upper-bound search.
  int max_restarts = 3200;
  /// Skip the exact fast paths (except for the zero space).
  bool force_numeric = false;
  /// Never run the numeric search; undecided cases report search-exhausted.
  bool exact_only = false;
};

/// Span of a list of m x n matrices. Antisymmetric spaces are square and
/// every basis element satisfies B^T = -B.
class LinearMatrixSpace {
 public:
  static LinearMatrixSpace exact(int rows, int cols, bool antisymmetric, std::vector<RationalMatrix> basis);
  static LinearMatrixSpace numeric(int rows, int cols, bool antisymmetric, std::vector<ComplexMatrix> basis);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool antisymmetric() const { return antisymmetric_; }
  int dim() const { return static_cast<int>(exact_ ? exact_basis_.size() : numeric_basis_.size()); }
  bool is_exact() const { return exact_; }

  const std::vector<RationalMatrix>& exact_basis() const { return exact_basis_; }
  /// Orthonormal (Frobenius) basis of the same span.
  const std::vector<ComplexMatrix>& numeric_basis() const { return numeric_basis_; }

  /// Relative distance ||M - proj(M)|| / ||M|| from the span.
  double membership_residual(const ComplexMatrix& m) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  bool antisymmetric_ = false;
  bool exact_ = false;
  std::vector<RationalMatrix> exact_basis_;
  std::vector<ComplexMatrix> numeric_basis_;
};

/// A rank-2 element with its factorization.
///
/// Antisymmetric: matrix = x y^T - y x^T (z, w unused).
/// Rectangular: matrix = x y^T - z w^T.
/// The numeric fields are always filled; the exact ones only when exact.
struct Rank2Witness {
  bool exact = false;
  bool antisymmetric = false;
  ExactMatrix exact_matrix;
  std::vector<ExactScalar> ex, ey, ez, ew;
  ComplexMatrix matrix;
  std::vector<Complex> x, y, z, w;
  /// sigma_3 / sigma_1; 0 for exact witnesses.
  double residual = 0.0;
};

enum class Exclusion { exact, search_exhausted };

struct SolveResult {
  std::optional<Rank2Witness> witness;
  /// Meaningful when no witness was found.
  Exclusion exclusion = Exclusion::search_exhausted;
};

/// Rank-2 element of span(space). Exact paths first, then Newton restarts.
SolveResult find_rank_le2(const LinearMatrixSpace& space, const SolverConfig& config);

/// Every rank-2 element up to scale, when the locus is finite and exactly
/// computable (dimension <= 1, or 4 x 4 antisymmetric of dimension 2).
/// Returns nullopt otherwise. An empty list proves there is none.
std::optional<std::vector<Rank2Witness>> exact_rank2_locus(const LinearMatrixSpace& space);

/// Factors an exact rank-2 matrix. Throws rank_mismatch otherwise.
Rank2Witness factor_rank2(const ExactMatrix& m, bool antisymmetric);
/// Factors a numeric rank-2 matrix; throws rank_mismatch when sigma_3 /
/// sigma_1 > tol, sigma_2 / sigma_1 <= tol, or recomposition misses tol.
Rank2Witness factor_rank2(const ComplexMatrix& m, bool antisymmetric, double tol);

struct RankReport {
  double residual;
  bool accept;
};

RankReport verify_rank2(const ComplexMatrix& m, double tol);
RankReport verify_rank2(const ExactMatrix& m);

/// Codimension of the rank <= 2 locus.
int rank2_codimension(int rows, int cols, bool antisymmetric);

/// Pfaffian p01 p23 - p02 p13 + p03 p12 of a 4 x 4 antisymmetric matrix.
ExactScalar pfaffian4(const ExactMatrix& m);

}  // namespace goncurve
