#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "goncurve/gonality_engine.hpp"
#include "goncurve/linear_core.hpp"
#include "goncurve/seed.hpp"

namespace goncurve {

namespace {

using PairList = std::vector<std::pair<ProjPoint, ProjPoint>>;

// Tolerance below which a numeric pencil counts as vanishing at a node.
constexpr double kNearBaseTol = 1e-7;

void check_pairs(const PairList& pairs) {
  std::set<ProjPoint> seen;
  for (const auto& [a, b] : pairs) {
    if (a == b) fail(ErrorCode::degenerate_input, "pair " + a.to_string() + " repeats a point");
    if (!seen.insert(a).second || !seen.insert(b).second) {
      fail(ErrorCode::degenerate_input, "points of the pairs are not distinct");
    }
  }
}

void check_distinct(const std::vector<ProjPoint>& points, const std::string& what) {
  std::set<ProjPoint> seen(points.begin(), points.end());
  if (seen.size() != points.size()) fail(ErrorCode::degenerate_input, what + " has repeated points");
}

std::vector<Complex> scaled(std::vector<Complex> v, double s) {
  for (auto& x : v) x /= s;
  return v;
}

double max_abs(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (const auto& x : a) m = std::max(m, std::abs(x));
  for (const auto& x : b) m = std::max(m, std::abs(x));
  return m;
}

// Pencil (f, g) spanning the same plane as (u, v), with orthonormal forms.
Pencil numeric_plane(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  ComplexMatrix m(u.size(), 2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    m(i, 0) = u[i];
    m(i, 1) = v[i];
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), 2);
  std::vector<Complex> f(u.size()), g(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    f[i] = q(i, 0);
    g[i] = q(i, 1);
  }
  return Pencil::numeric(std::move(f), std::move(g));
}

using Forms = std::vector<ExactScalar>;

// 2 x 2 change of basis T taking the rows (f, g) to reduced row echelon form.
std::array<ExactScalar, 4> echelon_basis(const Forms& f, const Forms& g) {
  std::size_t p1 = 0;
  while (f[p1].is_zero() && g[p1].is_zero()) ++p1;
  std::size_t p2 = p1 + 1;
  while ((f[p1] * g[p2] - f[p2] * g[p1]).is_zero()) ++p2;
  ExactScalar det = f[p1] * g[p2] - f[p2] * g[p1];
  return {g[p2] / det, -f[p2] / det, -g[p1] / det, f[p1] / det};
}

Pencil apply_basis(const std::array<ExactScalar, 4>& t, const Pencil& p) {
  Forms f(p.exact_f().size()), g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = t[0] * p.exact_f()[i] + t[1] * p.exact_g()[i];
    g[i] = t[2] * p.exact_f()[i] + t[3] * p.exact_g()[i];
  }
  return reduce(Pencil::exact(std::move(f), std::move(g))).pencil;
}

struct Checked {
  Pencil pencil;
  int degree;
  double residual;
};

std::optional<Checked> check_identify(const Rank2Witness& w, const PairList& pairs, double tol) {
  try {
    if (w.exact) {
      Reduced r = reduce(Pencil::exact(w.ex, w.ey));
      for (const auto& [a, b] : pairs) {
        if (!images_match(r.pencil, a, b)) return std::nullopt;
      }
      Pencil p = apply_basis(echelon_basis(r.pencil.exact_f(), r.pencil.exact_g()), r.pencil);
      return Checked{p, r.effective_degree, 0.0};
    }
    Pencil p = numeric_plane(w.x, w.y);
    double residual = w.residual;
    for (const auto& [a, b] : pairs) {
      if (is_base_point(p, a, kNearBaseTol) || is_base_point(p, b, kNearBaseTol)) return std::nullopt;
      double mismatch = image_mismatch(p, a, p, b);
      if (!(mismatch <= tol)) return std::nullopt;
      residual = std::max(residual, mismatch);
    }
    return Checked{p, effective_degree(p), residual};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::degenerate_pencil || e.code() == ErrorCode::base_point) return std::nullopt;
    throw;
  }
}

struct CheckedPair {
  Pencil first, second;
  int d1, d2;
  double residual;
};

std::optional<CheckedPair> check_joint(const Rank2Witness& w, const std::vector<ProjPoint>& side1,
                                       const std::vector<ProjPoint>& side2, double tol) {
  try {
    if (w.exact) {
      Reduced r1 = reduce(Pencil::exact(w.ex, w.ez));
      Reduced r2 = reduce(Pencil::exact(w.ew, w.ey));
      for (std::size_t j = 0; j < side1.size(); ++j) {
        if (!images_equal(r1.pencil, side1[j], r2.pencil, side2[j])) return std::nullopt;
      }
      // The same target coordinates on both sides keep the node matches.
      auto t = echelon_basis(r1.pencil.exact_f(), r1.pencil.exact_g());
      return CheckedPair{apply_basis(t, r1.pencil), apply_basis(t, r2.pencil), r1.effective_degree,
                         r2.effective_degree, 0.0};
    }
    double s1 = max_abs(w.x, w.z), s2 = max_abs(w.w, w.y);
    Pencil p1 = Pencil::numeric(scaled(w.x, s1), scaled(w.z, s1));
    Pencil p2 = Pencil::numeric(scaled(w.w, s2), scaled(w.y, s2));
    double residual = w.residual;
    for (std::size_t j = 0; j < side1.size(); ++j) {
      if (is_base_point(p1, side1[j], kNearBaseTol) || is_base_point(p2, side2[j], kNearBaseTol)) return std::nullopt;
      double mismatch = image_mismatch(p1, side1[j], p2, side2[j]);
      if (!(mismatch <= tol)) return std::nullopt;
      residual = std::max(residual, mismatch);
    }
    return CheckedPair{p1, p2, effective_degree(p1), effective_degree(p2), residual};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::degenerate_pencil || e.code() == ErrorCode::base_point) return std::nullopt;
    throw;
  }
}

// Runs the exact finite-locus enumeration, then seeded solver attempts,
// until `accept` takes a witness. Returns the exclusion label otherwise.
template <class Accept>
Exclusion search(const LinearMatrixSpace& space, const GonalityConfig& config, Accept accept) {
  if (space.dim() == 0) return Exclusion::exact;
  if (!config.solver.force_numeric) {
    if (auto locus = exact_rank2_locus(space)) {
      for (const auto& w : *locus) {
        if (accept(w)) return Exclusion::exact;
      }
      return Exclusion::exact;
    }
  }
  SolverConfig solver = config.solver;
  for (int attempt = 0; attempt < std::max(1, config.spurious_retries); ++attempt) {
    solver.seed = attempt == 0 ? config.solver.seed : derive_seed(config.solver.seed, std::uint64_t(attempt));
    SolveResult r = find_rank_le2(space, solver);
    if (!r.witness) return r.exclusion;
    if (accept(*r.witness)) return Exclusion::exact;
  }
  return Exclusion::search_exhausted;
}

}  // namespace

std::string to_string(Exclusion kind) { return kind == Exclusion::exact ? "exact" : "search-exhausted"; }

RationalMatrix interpolation_matrix(const std::vector<ProjPoint>& sources, const std::vector<ProjPoint>& targets,
                                    int k) {
  if (sources.size() != targets.size()) fail(ErrorCode::bad_shape, "sources and targets differ in length");
  const int n = k + 1;
  RationalMatrix a(static_cast<int>(sources.size()), 2 * n);
  for (std::size_t j = 0; j < sources.size(); ++j) {
    auto e = eval_vector(sources[j], k);
    for (int i = 0; i < n; ++i) {
      a(int(j), i) = Rational(targets[j].a1()) * e[i];
      a(int(j), n + i) = -Rational(targets[j].a0()) * e[i];
    }
  }
  return a;
}

std::optional<Pencil> interpolate_pairs(const std::vector<ProjPoint>& sources, const std::vector<ProjPoint>& targets,
                                        int k, std::uint64_t seed) {
  if (sources.size() != targets.size()) fail(ErrorCode::bad_shape, "sources and targets differ in length");
  if (k < 1) fail(ErrorCode::invalid_argument, "degree must be at least 1");
  check_distinct(sources, "sources");
  const int n = k + 1;
  RationalMatrix a = interpolation_matrix(sources, targets, k);
  auto basis = exact_nullspace(a);
  if (basis.empty()) return std::nullopt;

  auto split = [n](const RationalVector& v) {
    return std::pair{RationalVector(v.begin(), v.begin() + n), RationalVector(v.begin() + n, v.end())};
  };
  std::optional<Pencil> result;
  RejectPredicate reject = [&](const RationalVector& v) {
    auto [f, g] = split(v);
    try {
      Reduced r = reduce(Pencil::rational(f, g));
      for (std::size_t j = 0; j < sources.size(); ++j) {
        if (!(evaluate(r.pencil, sources[j]) == targets[j])) return true;
      }
      result = r.pencil;
      return false;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::degenerate_pencil || e.code() == ErrorCode::base_point) return true;
      throw;
    }
  };
  try {
    generic_element(basis, seed, reject);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::exhausted_retries) return std::nullopt;
    throw;
  }
  return result;
}

LinearMatrixSpace identify_space(const PairList& pairs, int k) {
  const int n = k + 1;
  std::vector<std::pair<int, int>> index;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) index.emplace_back(i, j);
  RationalMatrix a(static_cast<int>(pairs.size()), static_cast<int>(index.size()));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto ea = eval_vector(pairs[r].first, k);
    auto eb = eval_vector(pairs[r].second, k);
    for (std::size_t c = 0; c < index.size(); ++c) {
      auto [i, j] = index[c];
      a(int(r), int(c)) = ea[i] * eb[j] - ea[j] * eb[i];
    }
  }
  std::vector<RationalMatrix> basis;
  for (const auto& v : exact_nullspace(a)) {
    RationalMatrix m(n, n);
    for (std::size_t c = 0; c < index.size(); ++c) {
      auto [i, j] = index[c];
      m(i, j) = v[c];
      m(j, i) = -v[c];
    }
    basis.push_back(std::move(m));
  }
  return LinearMatrixSpace::exact(n, n, true, std::move(basis));
}

IdentifyResult identify_pairs(const PairList& pairs, int k, const GonalityConfig& config) {
  if (k < 1) fail(ErrorCode::invalid_argument, "degree must be at least 1");
  check_pairs(pairs);
  LinearMatrixSpace space = identify_space(pairs, k);
  IdentifyResult result;
  result.exclusion = search(space, config, [&](const Rank2Witness& w) {
    auto checked = check_identify(w, pairs, config.solver.tol);
    if (!checked) return false;
    result.pencil = checked->pencil;
    result.degree = checked->degree;
    result.residual = checked->residual;
    return true;
  });
  return result;
}

HyperellipticResult hyperelliptic_binary(const BinaryCurve& curve) {
  require_valid(curve, true);
  MoebiusMap psi = moebius_from_three_pairs({curve.side1[0], curve.side1[1], curve.side1[2]},
                                            {curve.side2[0], curve.side2[1], curve.side2[2]});
  for (std::size_t j = 3; j < curve.side1.size(); ++j) {
    if (!(apply_moebius(psi, curve.side1[j]) == curve.side2[j])) return {false, std::nullopt};
  }
  return {true, psi};
}

LinearMatrixSpace joint_space(const std::vector<ProjPoint>& side1, const std::vector<ProjPoint>& side2, int k1,
                              int k2) {
  const int m = k1 + 1, n = k2 + 1;
  RationalMatrix a(static_cast<int>(side1.size()), m * n);
  for (std::size_t j = 0; j < side1.size(); ++j) {
    auto e1 = eval_vector(side1[j], k1);
    auto e2 = eval_vector(side2[j], k2);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) a(int(j), r * n + c) = e1[r] * e2[c];
  }
  std::vector<RationalMatrix> basis;
  for (const auto& v : exact_nullspace(a)) {
    RationalMatrix mat(m, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) mat(r, c) = v[std::size_t(r) * n + c];
    basis.push_back(std::move(mat));
  }
  return LinearMatrixSpace::exact(m, n, false, std::move(basis));
}

JointResult joint_witness(const std::vector<ProjPoint>& side1, const std::vector<ProjPoint>& side2, int k1, int k2,
                          const GonalityConfig& config) {
  if (k1 < 1 || k2 < 1) fail(ErrorCode::invalid_argument, "component degrees must be at least 1");
  if (side1.size() != side2.size()) fail(ErrorCode::degenerate_input, "sides differ in length");
  check_distinct(side1, "side1");
  check_distinct(side2, "side2");
  LinearMatrixSpace space = joint_space(side1, side2, k1, k2);
  JointResult result;
  result.exclusion = search(space, config, [&](const Rank2Witness& w) {
    auto checked = check_joint(w, side1, side2, config.solver.tol);
    if (!checked) return false;
    result.pencils = std::pair{checked->first, checked->second};
    result.degrees = {checked->d1, checked->d2};
    result.residual = checked->residual;
    return true;
  });
  return result;
}

JointResult binary_witness(const BinaryCurve& curve, int k1, int k2, const GonalityConfig& config) {
  return joint_witness(curve.side1, curve.side2, k1, k2, config);
}

}  // namespace goncurve
