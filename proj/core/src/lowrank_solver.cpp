#include "goncurve/lowrank_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "goncurve/error.hpp"
#include "goncurve/seed.hpp"

namespace goncurve {

namespace {

ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = ExactScalar(m(i, j));
  }
  return out;
}

RationalVector flatten(const RationalMatrix& m) {
  RationalVector v;
  v.reserve(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  }
  return v;
}

RationalMatrix unflatten(const RationalVector& v, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = v[std::size_t(i) * cols + j];
  }
  return m;
}

ExactMatrix axpy(const ExactMatrix& a, const ExactScalar& t, const ExactMatrix& b) {
  ExactMatrix out = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!b(i, j).is_zero()) out(i, j) += t * b(i, j);
    }
  }
  return out;
}

int rows_of(const ExactMatrix& m) { return m.rows(); }
int cols_of(const ExactMatrix& m) { return m.cols(); }
int rows_of(const ComplexMatrix& m) { return static_cast<int>(m.rows()); }
int cols_of(const ComplexMatrix& m) { return static_cast<int>(m.cols()); }

// Pivot preference: small height for exact entries, large modulus for floats.
double score(const ExactScalar& x) {
  if (x.is_zero()) return 0.0;
  return 1.0 / (1.0 + double(bit_height(x.rational_part()) + bit_height(x.radical_part())));
}
double score(const Complex& x) { return std::abs(x); }

// Writes a candidate factorization; false when the matrix has rank < 2.
template <class Mat, class T>
bool factor_candidate(const Mat& m, bool antisymmetric, std::vector<T>& x, std::vector<T>& y,
                      std::vector<T>& z, std::vector<T>& w) {
  const int rows = rows_of(m), cols = cols_of(m);
  if (antisymmetric) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int i = 0; i < rows; ++i) {
      for (int j = i + 1; j < cols; ++j) {
        double s = score(m(i, j));
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) return false;
    T inv = T(1) / m(bi, bj);
    x.assign(rows, T(0));
    y.assign(rows, T(0));
    for (int r = 0; r < rows; ++r) {
      x[r] = m(r, bi) * inv;
      y[r] = m(r, bj);
    }
    z.clear();
    w.clear();
    return true;
  }

  int r1 = -1, c1 = -1;
  double best = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      double s = score(m(i, j));
      if (s > best) {
        best = s;
        r1 = i;
        c1 = j;
      }
    }
  }
  if (r1 < 0) return false;
  const T p1 = m(r1, c1);
  int r2 = -1, c2 = -1;
  best = 0.0;
  for (int i = 0; i < rows; ++i) {
    if (i == r1) continue;
    for (int j = 0; j < cols; ++j) {
      if (j == c1) continue;
      T schur = m(i, j) - m(i, c1) * m(r1, j) / p1;
      double s = score(schur);
      if (s > best) {
        best = s;
        r2 = i;
        c2 = j;
      }
    }
  }
  if (r2 < 0) return false;
  // M = M[:, c] S^{-1} M[r, :] with S = M[r, c].
  const T s00 = m(r1, c1), s01 = m(r1, c2), s10 = m(r2, c1), s11 = m(r2, c2);
  const T det = s00 * s11 - s01 * s10;
  if (is_zero(det)) return false;
  const T i00 = s11 / det, i01 = -s01 / det, i10 = -s10 / det, i11 = s00 / det;
  x.assign(rows, T(0));
  z.assign(rows, T(0));
  for (int i = 0; i < rows; ++i) {
    x[i] = m(i, c1);
    z[i] = -m(i, c2);
  }
  y.assign(cols, T(0));
  w.assign(cols, T(0));
  for (int j = 0; j < cols; ++j) {
    y[j] = i00 * m(r1, j) + i01 * m(r2, j);
    w[j] = i10 * m(r1, j) + i11 * m(r2, j);
  }
  return true;
}

template <class T>
T recomposed(const std::vector<T>& x, const std::vector<T>& y, const std::vector<T>& z,
             const std::vector<T>& w, bool antisymmetric, int i, int j) {
  if (antisymmetric) return x[i] * y[j] - y[i] * x[j];
  return x[i] * y[j] - z[i] * w[j];
}

std::vector<Complex> to_complex(const std::vector<ExactScalar>& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_complex());
  return out;
}

ComplexMatrix orthonormalize(const std::vector<ComplexMatrix>& basis, int rows, int cols) {
  ComplexMatrix stacked(Eigen::Index(rows) * cols, Eigen::Index(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    ComplexMatrix m = basis[b];
    double scale = m.norm();
    if (scale > 0) m /= scale;
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) stacked(Eigen::Index(i) * cols + j, Eigen::Index(b)) = m(i, j);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(stacked);
  return qr.householderQ() * ComplexMatrix::Identity(stacked.rows(), stacked.cols());
}

std::vector<ComplexMatrix> unstack(const ComplexMatrix& q, int rows, int cols) {
  std::vector<ComplexMatrix> out;
  for (Eigen::Index b = 0; b < q.cols(); ++b) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = q(Eigen::Index(i) * cols + j, b);
    }
    out.push_back(std::move(m));
  }
  return out;
}

void check_antisymmetric(const RationalMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) fail(ErrorCode::bad_shape, "basis matrix is not antisymmetric");
    }
  }
}

void check_antisymmetric(const ComplexMatrix& m) {
  if ((m + m.transpose()).norm() > 1e-12 * std::max(1.0, m.norm())) {
    fail(ErrorCode::bad_shape, "basis matrix is not antisymmetric");
  }
}

Rank2Witness exact_witness(const ExactMatrix& m, bool antisymmetric) { return factor_rank2(m, antisymmetric); }

std::vector<ExactMatrix> exact_basis(const LinearMatrixSpace& space) {
  std::vector<ExactMatrix> out;
  for (const auto& b : space.exact_basis()) out.push_back(to_exact(b));
  return out;
}

// Every element of the space has rank <= 1: all share one column line or
// one row line. Only meaningful for rectangular spaces.
bool rank1_space(const LinearMatrixSpace& space) {
  const auto& basis = space.exact_basis();
  const int d = space.dim(), m = space.rows(), n = space.cols();
  RationalMatrix wide(m, n * d), tall(m * d, n);
  for (int b = 0; b < d; ++b) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        wide(i, b * n + j) = basis[b](i, j);
        tall(b * m + i, j) = basis[b](i, j);
      }
    }
  }
  return exact_rank(wide) <= 1 || exact_rank(tall) <= 1;
}

RationalMatrix random_element(const LinearMatrixSpace& space, std::uint64_t seed, const RejectPredicate& reject) {
  std::vector<RationalVector> flat;
  for (const auto& b : space.exact_basis()) flat.push_back(flatten(b));
  return unflatten(generic_element(flat, seed, reject), space.rows(), space.cols());
}

bool all_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Roots [s : t] of a s^2 + b s t + c t^2 as elements s B1 + t B2.
std::vector<ExactMatrix> quadratic_roots(const ExactMatrix& b1, const ExactMatrix& b2, const Rational& a,
                                         const Rational& b, const Rational& c) {
  std::vector<ExactMatrix> out;
  if (sgn(c) != 0) {
    Rational disc = b * b - 4 * a * c;
    ExactScalar root = ExactScalar::sqrt(disc);
    ExactScalar t1 = (ExactScalar(Rational(-b)) + root) / ExactScalar(Rational(2 * c));
    out.push_back(axpy(b1, t1, b2));
    if (sgn(disc) != 0) {
      ExactScalar t2 = (ExactScalar(Rational(-b)) - root) / ExactScalar(Rational(2 * c));
      out.push_back(axpy(b1, t2, b2));
    }
    return out;
  }
  out.push_back(b2);
  if (sgn(b) != 0) out.push_back(axpy(b1, ExactScalar(Rational(-a / b)), b2));
  return out;
}

struct PfaffianPlane {
  Rational a, b, c;
};

PfaffianPlane restrict_pfaffian(const ExactMatrix& b1, const ExactMatrix& b2) {
  Rational a = pfaffian4(b1).rational_part();
  Rational c = pfaffian4(b2).rational_part();
  Rational both = pfaffian4(axpy(b1, ExactScalar(1), b2)).rational_part();
  return {a, both - a - c, c};
}

// Gauss-Newton on the rank <= 2 equations of a sliced numeric space.
class NewtonSystem {
 public:
  NewtonSystem(const LinearMatrixSpace& space) : m_(space.rows()), n_(space.cols()), antisym_(space.antisymmetric()) {
    const auto& basis = space.numeric_basis();
    d_ = static_cast<int>(basis.size());
    stacked_.resize(Eigen::Index(m_) * n_, d_);
    for (int b = 0; b < d_; ++b) {
      for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < n_; ++j) stacked_(Eigen::Index(i) * n_ + j, b) = basis[b](i, j);
      }
    }
    if (antisym_) {
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          for (int c = b + 1; c < n_; ++c)
            for (int e = c + 1; e < n_; ++e) quads_.push_back({a, b, c, e});
    } else {
      triples(m_, row_triples_);
      triples(n_, col_triples_);
    }
    int e = d_ - 1 - rank2_codimension(m_, n_, antisym_);
    slices_count_ = std::max(0, e);
  }

  int dim() const { return d_; }
  int slices() const { return slices_count_; }

  ComplexMatrix assemble(const ComplexVector& y) const {
    ComplexVector v = stacked_ * y;
    ComplexMatrix out(m_, n_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) out(i, j) = v(Eigen::Index(i) * n_ + j);
    }
    return out;
  }

  void evaluate(const ComplexVector& y, const ComplexMatrix& slice, const ComplexVector& normal, ComplexVector& f,
                ComplexMatrix* jac) const {
    const ComplexMatrix mat = assemble(y);
    const Eigen::Index rank_eqs = antisym_ ? Eigen::Index(quads_.size())
                                           : Eigen::Index(row_triples_.size() * col_triples_.size());
    const Eigen::Index total = rank_eqs + slice.rows() + 1;
    f.resize(total);
    ComplexMatrix grad;
    if (jac) grad = ComplexMatrix::Zero(rank_eqs, Eigen::Index(m_) * n_);
    auto idx = [&](int i, int j) { return Eigen::Index(i) * n_ + j; };
    Eigen::Index row = 0;
    if (antisym_) {
      for (const auto& q : quads_) {
        const int a = q[0], b = q[1], c = q[2], e = q[3];
        f(row) = mat(a, b) * mat(c, e) - mat(a, c) * mat(b, e) + mat(a, e) * mat(b, c);
        if (jac) {
          grad(row, idx(a, b)) += mat(c, e);
          grad(row, idx(c, e)) += mat(a, b);
          grad(row, idx(a, c)) -= mat(b, e);
          grad(row, idx(b, e)) -= mat(a, c);
          grad(row, idx(a, e)) += mat(b, c);
          grad(row, idx(b, c)) += mat(a, e);
        }
        ++row;
      }
    } else {
      for (const auto& r : row_triples_) {
        for (const auto& c : col_triples_) {
          Eigen::Matrix3cd s;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s(i, j) = mat(r[i], c[j]);
          f(row) = s.determinant();
          if (jac) {
            for (int i = 0; i < 3; ++i) {
              for (int j = 0; j < 3; ++j) {
                const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                grad(row, idx(r[i], c[j])) = s(i1, j1) * s(i2, j2) - s(i1, j2) * s(i2, j1);
              }
            }
          }
          ++row;
        }
      }
    }
    if (slice.rows() > 0) f.segment(row, slice.rows()) = slice * y;
    f(total - 1) = normal.cwiseProduct(y).sum() - Complex(1.0);
    if (jac) {
      jac->resize(total, d_);
      if (rank_eqs > 0) jac->topRows(rank_eqs) = grad * stacked_;
      if (slice.rows() > 0) jac->middleRows(rank_eqs, slice.rows()) = slice;
      jac->row(total - 1) = normal.transpose();
    }
  }

 private:
  static void triples(int n, std::vector<std::array<int, 3>>& out) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
  }

  int m_, n_;
  bool antisym_;
  int d_ = 0;
  int slices_count_ = 0;
  ComplexMatrix stacked_;
  std::vector<std::array<int, 4>> quads_;
  std::vector<std::array<int, 3>> row_triples_, col_triples_;
};

ComplexVector random_complex(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double re = normal(rng);
    double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

std::optional<Rank2Witness> newton_restart(const NewtonSystem& system, bool antisymmetric, const SolverConfig& config,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = system.dim();
  ComplexMatrix slice(system.slices(), d);
  for (int s = 0; s < system.slices(); ++s) {
    ComplexVector row = random_complex(rng, d);
    slice.row(s) = row.transpose() / row.norm();
  }
  ComplexVector normal = random_complex(rng, d);
  normal /= normal.norm();
  ComplexVector y = random_complex(rng, d);
  Complex along = (normal.transpose() * y)(0);
  if (std::abs(along) < 1e-8) return std::nullopt;
  y /= along;

  ComplexVector f, trial_f;
  ComplexMatrix jac;
  system.evaluate(y, slice, normal, f, &jac);
  double fnorm = f.norm();
  for (int iter = 0; iter < config.max_iter && fnorm > 1e-15; ++iter) {
    ComplexVector step = solve_least_squares(jac, -f);
    double t = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 12; ++halving, t *= 0.5) {
      ComplexVector candidate = y + t * step;
      system.evaluate(candidate, slice, normal, trial_f, nullptr);
      if (trial_f.norm() < fnorm) {
        y = candidate;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    system.evaluate(y, slice, normal, f, &jac);
    fnorm = f.norm();
  }
  if (!std::isfinite(fnorm)) return std::nullopt;

  ComplexMatrix mat = system.assemble(y);
  mat /= mat.norm();
  RankReport report = verify_rank2(mat, config.tol);
  if (!report.accept) return std::nullopt;
  try {
    return factor_rank2(mat, antisymmetric, config.tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::rank_mismatch) return std::nullopt;
    throw;
  }
}

}  // namespace

ExactScalar pfaffian4(const ExactMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) fail(ErrorCode::bad_shape, "pfaffian4 needs a 4x4 matrix");
  return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

int rank2_codimension(int rows, int cols, bool antisymmetric) {
  if (antisymmetric) return rows < 4 ? 0 : (rows - 2) * (rows - 3) / 2;
  if (rows < 2 || cols < 2) return 0;
  return (rows - 2) * (cols - 2);
}

LinearMatrixSpace LinearMatrixSpace::exact(int rows, int cols, bool antisymmetric, std::vector<RationalMatrix> basis) {
  if (rows < 0 || cols < 0 || (antisymmetric && rows != cols)) fail(ErrorCode::bad_shape, "invalid space shape");
  for (const auto& b : basis) {
    if (b.rows() != rows || b.cols() != cols) fail(ErrorCode::bad_shape, "basis matrices must share the shape");
    if (antisymmetric) check_antisymmetric(b);
  }
  if (!basis.empty()) {
    RationalMatrix stacked(static_cast<int>(basis.size()), rows * cols);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto flat = flatten(basis[b]);
      for (std::size_t i = 0; i < flat.size(); ++i) stacked(static_cast<int>(b), static_cast<int>(i)) = flat[i];
    }
    if (exact_rank(stacked) != static_cast<int>(basis.size())) {
      fail(ErrorCode::invalid_argument, "basis matrices are linearly dependent");
    }
  }
  LinearMatrixSpace space;
  space.rows_ = rows;
  space.cols_ = cols;
  space.antisymmetric_ = antisymmetric;
  space.exact_ = true;
  std::vector<ComplexMatrix> converted;
  for (const auto& b : basis) converted.push_back(to_complex_scaled(b));
  space.exact_basis_ = std::move(basis);
  if (!converted.empty()) space.numeric_basis_ = unstack(orthonormalize(converted, rows, cols), rows, cols);
  return space;
}

LinearMatrixSpace LinearMatrixSpace::numeric(int rows, int cols, bool antisymmetric, std::vector<ComplexMatrix> basis) {
  if (rows < 0 || cols < 0 || (antisymmetric && rows != cols)) fail(ErrorCode::bad_shape, "invalid space shape");
  for (const auto& b : basis) {
    if (b.rows() != rows || b.cols() != cols) fail(ErrorCode::bad_shape, "basis matrices must share the shape");
    if (antisymmetric) check_antisymmetric(b);
  }
  LinearMatrixSpace space;
  space.rows_ = rows;
  space.cols_ = cols;
  space.antisymmetric_ = antisymmetric;
  if (!basis.empty()) {
    ComplexMatrix q = orthonormalize(basis, rows, cols);
    ComplexMatrix stacked(q.rows(), q.cols());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      ComplexMatrix m = basis[b] / basis[b].norm();
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) stacked(Eigen::Index(i) * cols + j, Eigen::Index(b)) = m(i, j);
    }
    if (numeric_rank(stacked, 1e-10) != static_cast<int>(basis.size())) {
      fail(ErrorCode::invalid_argument, "basis matrices are linearly dependent");
    }
    space.numeric_basis_ = unstack(q, rows, cols);
  }
  return space;
}

double LinearMatrixSpace::membership_residual(const ComplexMatrix& m) const {
  double norm = m.norm();
  if (norm == 0.0) return 0.0;
  ComplexMatrix rest = m;
  for (const auto& b : numeric_basis_) {
    Complex coeff = (b.conjugate().cwiseProduct(m)).sum();
    rest -= coeff * b;
  }
  return rest.norm() / norm;
}

Rank2Witness factor_rank2(const ExactMatrix& m, bool antisymmetric) {
  Rank2Witness w;
  w.exact = true;
  w.antisymmetric = antisymmetric;
  if (antisymmetric && m.rows() != m.cols()) fail(ErrorCode::bad_shape, "antisymmetric factor needs a square matrix");
  if (!factor_candidate(m, antisymmetric, w.ex, w.ey, w.ez, w.ew)) {
    fail(ErrorCode::rank_mismatch, "matrix has rank below 2");
  }
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!(recomposed(w.ex, w.ey, w.ez, w.ew, antisymmetric, i, j) == m(i, j))) {
        fail(ErrorCode::rank_mismatch, "matrix has rank above 2");
      }
    }
  }
  w.exact_matrix = m;
  w.matrix = to_complex(m);
  w.x = to_complex(w.ex);
  w.y = to_complex(w.ey);
  w.z = to_complex(w.ez);
  w.w = to_complex(w.ew);
  return w;
}

Rank2Witness factor_rank2(const ComplexMatrix& m, bool antisymmetric, double tol) {
  RankReport report = verify_rank2(m, tol);
  if (!report.accept) fail(ErrorCode::rank_mismatch, "matrix is not numerically rank 2");
  Rank2Witness w;
  w.antisymmetric = antisymmetric;
  if (!factor_candidate(m, antisymmetric, w.x, w.y, w.z, w.w)) {
    fail(ErrorCode::rank_mismatch, "matrix has rank below 2");
  }
  ComplexMatrix diff = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      diff(i, j) -= recomposed(w.x, w.y, w.z, w.w, antisymmetric, int(i), int(j));
    }
  }
  if (diff.norm() > tol * m.norm()) fail(ErrorCode::rank_mismatch, "rank-2 recomposition exceeds tolerance");
  w.matrix = m;
  w.residual = report.residual;
  return w;
}

RankReport verify_rank2(const ComplexMatrix& m, double tol) {
  Eigen::VectorXd sv = singular_values(m);
  if (sv.size() < 2 || sv(0) == 0.0) return {sv.size() > 0 && sv(0) == 0.0 ? 0.0 : 1.0, false};
  double residual = sv.size() > 2 ? sv(2) / sv(0) : 0.0;
  bool accept = residual <= tol && sv(1) / sv(0) > std::max(tol, 1e-6);
  return {residual, accept};
}

RankReport verify_rank2(const ExactMatrix& m) {
  if (exact_rank(m) == 2) return {0.0, true};
  RankReport numeric = verify_rank2(to_complex(m), 0.0);
  return {numeric.residual, false};
}

std::optional<std::vector<Rank2Witness>> exact_rank2_locus(const LinearMatrixSpace& space) {
  using List = std::vector<Rank2Witness>;
  const int d = space.dim();
  if (d == 0) return List{};
  if (!space.is_exact()) return std::nullopt;
  const bool anti = space.antisymmetric();
  const int small = std::min(space.rows(), space.cols());
  if (small < 2) return List{};
  auto basis = exact_basis(space);
  if (d == 1) {
    if (exact_rank(basis[0]) != 2) return List{};
    return List{exact_witness(basis[0], anti)};
  }
  if (!anti && small == 2 && rank1_space(space)) return List{};
  if (anti && space.rows() == 4 && d == 2) {
    PfaffianPlane q = restrict_pfaffian(basis[0], basis[1]);
    if (sgn(q.a) == 0 && sgn(q.b) == 0 && sgn(q.c) == 0) return std::nullopt;
    List out;
    for (const auto& m : quadratic_roots(basis[0], basis[1], q.a, q.b, q.c)) out.push_back(exact_witness(m, true));
    return out;
  }
  return std::nullopt;
}

SolveResult find_rank_le2(const LinearMatrixSpace& space, const SolverConfig& config) {
  const int d = space.dim();
  const bool anti = space.antisymmetric();
  const int small = std::min(space.rows(), space.cols());
  if (d == 0 || small < 2) return {std::nullopt, Exclusion::exact};

  if (space.is_exact() && !config.force_numeric) {
    auto locus = exact_rank2_locus(space);
    if (locus && locus->empty()) return {std::nullopt, Exclusion::exact};
    if (locus) {
      // Several finite witnesses: pick one by seed so retries see the others.
      std::size_t pick = std::size_t(config.seed % locus->size());
      return {(*locus)[pick], Exclusion::exact};
    }
    if ((!anti && small == 2) || (anti && space.rows() <= 3)) {
      RejectPredicate reject = [&](const RationalVector& v) {
        if (all_zero(v)) return true;
        return anti ? false : exact_rank(unflatten(v, space.rows(), space.cols())) < 2;
      };
      RationalMatrix m = random_element(space, derive_seed(config.seed, 0), reject);
      return {exact_witness(to_exact(m), anti), Exclusion::exact};
    }
    if (anti && space.rows() == 4) {
      RejectPredicate nonzero = [](const RationalVector& v) { return all_zero(v); };
      ExactMatrix a = to_exact(random_element(space, derive_seed(config.seed, 1), nonzero));
      ExactMatrix b = to_exact(random_element(space, derive_seed(config.seed, 2), nonzero));
      PfaffianPlane q = restrict_pfaffian(a, b);
      if (sgn(q.a) == 0) return {exact_witness(a, true), Exclusion::exact};
      if (sgn(q.c) == 0) return {exact_witness(b, true), Exclusion::exact};
      auto roots = quadratic_roots(a, b, q.a, q.b, q.c);
      return {exact_witness(roots.front(), true), Exclusion::exact};
    }
  }
  if (config.exact_only) return {std::nullopt, Exclusion::search_exhausted};

  NewtonSystem system(space);
  for (int restart = 0; restart < config.restarts; ++restart) {
    auto found = newton_restart(system, anti, config, derive_seed(config.seed, 1000 + std::uint64_t(restart)));
    if (found) return {std::move(found), Exclusion::search_exhausted};
  }
  return {std::nullopt, Exclusion::search_exhausted};
}

}  // namespace goncurve
