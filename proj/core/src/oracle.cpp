#include "goncurve/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "goncurve/error.hpp"

namespace goncurve::oracle {

namespace {

using Row = std::vector<Rational>;

Rational power(const Integer& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Degree-k monomials of [a0 : a1], computed directly.
Row monomials(const ProjPoint& p, int k) {
  Row out;
  for (int i = 0; i <= k; ++i) out.push_back(power(p.a0(), k - i) * power(p.a1(), i));
  return out;
}

// Plain Gaussian elimination; returns a nullspace basis.
std::vector<Row> kernel(std::vector<Row> rows, int cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Row> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(v);
  }
  return basis;
}

Rational pfaffian(const Row& p, int n) {
  // p holds entries (i, j), i < j, in lexicographic order.
  auto at = [&](int i, int j) {
    int index = 0;
    for (int a = 0; a < i; ++a) index += n - 1 - a;
    return p[index + (j - i - 1)];
  };
  return at(0, 1) * at(2, 3) - at(0, 2) * at(1, 3) + at(0, 3) * at(1, 2);
}

Rational value(const std::vector<ExactScalar>& c, const ProjPoint& p) {
  Rational s = 0;
  const int k = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= k; ++i) s += c[i].rational_part() * power(p.a0(), k - i) * power(p.a1(), i);
  return s;
}

std::vector<Rational> times_linear(const std::vector<Rational>& form, const ProjPoint& p) {
  // (a1 x0 - a0 x1) vanishes at [a0 : a1].
  std::vector<Rational> out(form.size() + 1, Rational(0));
  for (std::size_t i = 0; i < form.size(); ++i) {
    out[i] += form[i] * p.a1();
    out[i + 1] -= form[i] * p.a0();
  }
  return out;
}


// (P e)_i for the antisymmetric P with upper entries p. P = f ^ g has a base
// point at the node with monomials e exactly when P e = 0.
Row apply(const Row& p, int n, const Row& e) {
  Row out(n, Rational(0));
  int index = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++index) {
      out[i] += p[index] * e[j];
      out[j] -= p[index] * e[i];
    }
  return out;
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

// Whether some element of span(basis) has no base point at any node. The
// elements with a base point at one node form a linear subspace, so this
// holds unless one node is a base point of the whole span.
bool avoids_base_points(const std::vector<Row>& basis, const std::vector<Row>& nodes, int n) {
  for (const auto& e : nodes) {
    bool some = false;
    for (const auto& b : basis) some = some || !is_zero_row(apply(b, n, e));
    if (!some) return false;
  }
  return true;
}

Row combine(const Rational& s, const Row& a, const Rational& t, const Row& b) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  return out;
}

// Rank-2 points of the plane span{a, b} of 4 x 4 matrices: EXISTS when one
// of them has no base point at a node, nullopt when the analysis is silent.
std::optional<Verdict> plane_verdict(const Row& a, const Row& b, const std::vector<Row>& nodes) {
  // Pf(s a + t b) = qa s^2 + qm s t + qb t^2.
  Rational qa = pfaffian(a, 4), qb = pfaffian(b, 4);
  Rational qm = pfaffian(combine(1, a, 1, b), 4) - qa - qb;
  if (qa == 0 && qm == 0 && qb == 0) {
    if (avoids_base_points({a, b}, nodes, 4)) return Verdict::exists;
    return std::nullopt;
  }
  std::vector<std::pair<Rational, Rational>> roots;  // (s, t)
  Rational disc = qm * qm - 4 * qa * qb;
  if (qa == 0) {
    // t (qm s + qb t) = 0
    roots.emplace_back(1, 0);
    roots.emplace_back(qb, -qm);
  } else if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) &&
             mpz_perfect_square_p(disc.get_den_mpz_t())) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), disc.get_den_mpz_t());
    Rational root(rn, rd);
    roots.emplace_back(-qm + root, 2 * qa);
    roots.emplace_back(-qm - root, 2 * qa);
  } else {
    // Conjugate irrational roots: a node is a base point of such a root
    // only if both a and b annihilate its monomials.
    for (const auto& e : nodes) {
      if (is_zero_row(apply(a, 4, e)) && is_zero_row(apply(b, 4, e))) return std::nullopt;
    }
    return Verdict::exists;
  }
  for (const auto& [u, v] : roots) {
    Row p = combine(u, a, v, b);
    if (is_zero_row(p) || pfaffian(p, 4) != 0) continue;
    bool clean = true;
    for (const auto& e : nodes) clean = clean && !is_zero_row(apply(p, 4, e));
    if (clean) return Verdict::exists;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exists:
      return "EXISTS";
    case Verdict::empty:
      return "EMPTY";
    case Verdict::undecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

Pencil vanish_pole_pencil(const std::vector<ProjPoint>& group0, const std::vector<ProjPoint>& group_inf) {
  if (group0.empty() || group0.size() != group_inf.size()) {
    fail(ErrorCode::degenerate_input, "groups must be nonempty and of equal size");
  }
  std::set<ProjPoint> seen;
  for (const auto* g : {&group0, &group_inf}) {
    for (const auto& p : *g) {
      if (!seen.insert(p).second) fail(ErrorCode::degenerate_input, "group points must be distinct");
    }
  }
  std::vector<Rational> f{1}, g{1};
  for (const auto& p : group0) f = times_linear(f, p);
  for (const auto& p : group_inf) g = times_linear(g, p);
  return Pencil::rational(f, g);
}

namespace {

// Dimension >= 2 in the 4 x 4 case. Larger spaces are probed along a few
// seeded planes; a generic plane meets every component of the rank-2 locus.
Verdict quadric_verdict(const std::vector<Row>& basis, const std::vector<Row>& nodes) {
  if (basis.size() == 2) return plane_verdict(basis[0], basis[1], nodes).value_or(Verdict::undecided);
  std::mt19937_64 rng(basis.size());
  std::uniform_int_distribution<long> draw(-50, 50);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Row a(basis[0].size(), Rational(0)), b = a;
    for (const auto& v : basis) {
      a = combine(1, a, draw(rng), v);
      b = combine(1, b, draw(rng), v);
    }
    if (auto v = plane_verdict(a, b, nodes)) return *v;
  }
  return Verdict::undecided;
}

}  // namespace

std::vector<Verdict> exact_min_identify_degree(const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int kmax) {
  std::vector<Verdict> out;
  for (int k = 1; k <= kmax; ++k) {
    const int n = k + 1;
    const int cols = n * (n - 1) / 2;
    std::vector<Row> rows, nodes;
    for (const auto& [a, b] : pairs) {
      Row ea = monomials(a, k), eb = monomials(b, k);
      Row row;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) row.push_back(ea[i] * eb[j] - ea[j] * eb[i]);
      rows.push_back(row);
      nodes.push_back(ea);
      nodes.push_back(eb);
    }
    auto basis = kernel(rows, cols);
    if (basis.empty()) {
      out.push_back(Verdict::empty);
    } else if (n <= 3) {
      // Every nonzero element has rank 2.
      out.push_back(avoids_base_points(basis, nodes, n) ? Verdict::exists : Verdict::undecided);
    } else if (n == 4) {
      if (basis.size() == 1) {
        if (pfaffian(basis[0], n) != 0) {
          out.push_back(Verdict::empty);
        } else {
          out.push_back(avoids_base_points(basis, nodes, n) ? Verdict::exists : Verdict::undecided);
        }
      } else {
        out.push_back(quadric_verdict(basis, nodes));
      }
    } else {
      out.push_back(Verdict::undecided);
    }
  }
  return out;
}

BinaryCurve planted_binary_curve(const Pencil& phi, const std::vector<ProjPoint>& nodes1, std::uint64_t seed) {
  if (!phi.is_rational()) fail(ErrorCode::invalid_argument, "planting needs a rational pencil");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-1000, 1000);
  std::vector<ProjPoint> side1 = nodes1;
  const int budget = 1000 * static_cast<int>(nodes1.size() + 1);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::set<ProjPoint> sources, images;
    std::size_t bad = side1.size();
    std::vector<ProjPoint> side2;
    for (std::size_t j = 0; j < side1.size() && bad == side1.size(); ++j) {
      Rational f = value(phi.exact_f(), side1[j]), g = value(phi.exact_g(), side1[j]);
      if (f == 0 && g == 0) {
        bad = j;
        break;
      }
      ProjPoint image(f, g);
      if (!sources.insert(side1[j]).second || !images.insert(image).second) bad = j;
      side2.push_back(image);
    }
    if (bad == side1.size()) return {side1, side2};
    long a0 = 0, a1 = 0;
    while (a0 == 0 && a1 == 0) {
      a0 = std::abs(draw(rng));
      a1 = draw(rng);
    }
    side1[bad] = ProjPoint(a0, a1);
  }
  fail(ErrorCode::exhausted_retries, "could not plant distinct node images");
}

}  // namespace goncurve::oracle
