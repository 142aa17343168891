#include "goncurve/linear_core.hpp"

#include <algorithm>
#include <random>

#include "goncurve/error.hpp"

namespace goncurve {

namespace {

std::size_t height(const Rational& x) { return bit_height(x); }
std::size_t height(const ExactScalar& x) {
  return bit_height(x.rational_part()) + bit_height(x.radical_part());
}

// In-place Gauss-Jordan reduction. Pivots are chosen by smallest height in
// the column to limit coefficient growth. Returns the pivot columns.
template <class T>
std::vector<int> row_reduce(DenseMatrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    std::size_t best_height = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t h = height(m(i, c));
      if (best < 0 || h < best_height) {
        best = i;
        best_height = h;
      }
    }
    if (best < 0) continue;
    if (best != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
    }
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T factor = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void make_primitive(RationalVector& v) {
  Integer den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
  Integer content = 0;
  for (auto& x : v) {
    x *= den_lcm;
    content = gcd(content, x.get_num());
  }
  if (content == 0) return;
  int sign = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  }
  for (auto& x : v) {
    x /= content;
    if (sign < 0) x = -x;
  }
}

}  // namespace

int exact_rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return static_cast<int>(row_reduce(m).size());
}

int exact_rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  return static_cast<int>(row_reduce(m).size());
}

std::vector<RationalVector> exact_nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(a.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(static_cast<int>(r), free);
    make_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalVector generic_element(std::span<const RationalVector> basis, std::uint64_t seed,
                               const RejectPredicate& reject, int attempts) {
  if (basis.empty()) fail(ErrorCode::invalid_argument, "generic_element needs a nonempty basis");
  const std::size_t n = basis.front().size();
  std::mt19937_64 rng(seed);
  long range = 8;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::uniform_int_distribution<long> coeff(-range, range);
    RationalVector v(n);
    for (const auto& b : basis) {
      Rational c(coeff(rng));
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] += c * b[i];
    }
    if (!reject(v)) return v;
    if (range < (1L << 40)) range *= 2;
  }
  fail(ErrorCode::exhausted_retries,
       "no acceptable element after " + std::to_string(attempts) + " attempts");
}

ComplexMatrix numeric_nullspace(const ComplexMatrix& a, double tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    fail(ErrorCode::bad_shape, "solve_linear needs a square system");
  }
  Eigen::FullPivLU<ComplexMatrix> lu(a);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) fail(ErrorCode::singular_system, "matrix is numerically singular");
  ComplexVector x = lu.solve(b);
  double bound = 1e-10 * (a.norm() * x.norm() + b.norm());
  if (!((a * x - b).norm() <= bound)) {
    fail(ErrorCode::singular_system, "residual check failed; system is ill-conditioned");
  }
  return x;
}

ComplexVector solve_least_squares(const ComplexMatrix& a, const ComplexVector& b) {
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(a);
  return cod.solve(b);
}

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

int numeric_rank(const ComplexMatrix& a, double tol) {
  Eigen::VectorXd sv = singular_values(a);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++rank;
  }
  return rank;
}

ComplexMatrix to_complex_scaled(const RationalMatrix& a) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  Rational largest = 0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (abs(a(i, j)) > largest) largest = abs(a(i, j));
    }
  }
  if (sgn(largest) == 0) return out;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0) out(i, j) = to_double(Rational(a(i, j) / largest));
    }
  }
  return out;
}

ComplexMatrix to_complex(const ExactMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_complex();
  }
  return out;
}

}  // namespace goncurve
