#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "goncurve/scalar.hpp"

namespace goncurve {

/// Row-major dense matrix over an exact field.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  std::span<const T> row(int r) const { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
  std::span<T> row(int r) { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!goncurve::is_zero(x)) return false;
    }
    return true;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using ExactMatrix = DenseMatrix<ExactScalar>;
using RationalVector = std::vector<Rational>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

int exact_rank(const RationalMatrix& a);
int exact_rank(const ExactMatrix& a);

/// Basis of {x : A x = 0}. Each vector is scaled to primitive integers.
std::vector<RationalVector> exact_nullspace(const RationalMatrix& a);

/// Returns true for candidates generic_element must skip.
using RejectPredicate = std::function<bool(const RationalVector&)>;

/// Random integer combination of `basis` that `reject` does not reject.
///
/// Coefficients are drawn from [-R, R], starting at R = 8 and doubling after
/// every rejection. Throws exhausted_retries after `attempts` rejections.
RationalVector generic_element(std::span<const RationalVector> basis, std::uint64_t seed,
                               const RejectPredicate& reject, int attempts = 64);

/// Orthonormal basis (as columns) of the numeric nullspace: right singular
/// vectors whose singular value is at most tol * sigma_max.
ComplexMatrix numeric_nullspace(const ComplexMatrix& a, double tol = 1e-10);

/// Solves the square system A x = b. Throws singular_system when A is
/// numerically singular or the residual check fails.
ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b);

/// Minimum-norm least-squares solution of A x = b (any shape, any rank).
ComplexVector solve_least_squares(const ComplexMatrix& a, const ComplexVector& b);

Eigen::VectorXd singular_values(const ComplexMatrix& a);
int numeric_rank(const ComplexMatrix& a, double tol = 1e-10);

/// Converts with each entry divided by the largest-magnitude entry, so huge
/// exact entries do not overflow. Returns the zero matrix for zero input.
ComplexMatrix to_complex_scaled(const RationalMatrix& a);
ComplexMatrix to_complex(const ExactMatrix& a);

}  // namespace goncurve
