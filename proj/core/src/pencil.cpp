#include "goncurve/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "goncurve/error.hpp"
#include "goncurve/linear_core.hpp"

namespace goncurve {

namespace {

// Polynomials in the affine coordinate z = a1/a0; index i holds z^i.
template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> divmod(std::vector<T> a, const std::vector<T>& b) {
  trim(a);
  std::vector<T> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, T(0));
  const T lead_inv = T(1) / b.back();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const T& top = a[shift + b.size() - 1];
    if (is_zero(top)) continue;
    T c = top * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

template <class T>
std::vector<T> poly_gcd(std::vector<T> a, std::vector<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    T inv = T(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
bool proportional(const std::vector<T>& f, const std::vector<T>& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!is_zero(f[i] * g[j] - f[j] * g[i])) return false;
    }
  }
  return true;
}

// Monomial values at p with the point scaled so its larger coordinate is 1.
std::vector<double> unit_eval(const ProjPoint& p, int k) {
  Integer s = abs(p.a0()) > abs(p.a1()) ? Integer(abs(p.a0())) : Integer(abs(p.a1()));
  double x0 = to_double(Rational(p.a0()) / s);
  double x1 = to_double(Rational(p.a1()) / s);
  std::vector<double> e(k + 1);
  for (int i = 0; i <= k; ++i) e[i] = std::pow(x0, k - i) * std::pow(x1, i);
  return e;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double coeff_norm(const std::vector<Complex>& f, const std::vector<Complex>& g) {
  double s = 0;
  for (const auto& x : f) s += std::norm(x);
  for (const auto& x : g) s += std::norm(x);
  return std::sqrt(s);
}

Complex dot(const std::vector<Complex>& c, const std::vector<double>& e) {
  Complex s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * e[i];
  return s;
}

ExactScalar dot(const std::vector<ExactScalar>& c, const std::vector<Rational>& e) {
  ExactScalar s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero() && sgn(e[i]) != 0) s += c[i] * ExactScalar(e[i]);
  }
  return s;
}

template <class T>
T from_integer(const Integer& x);
template <>
ExactScalar from_integer<ExactScalar>(const Integer& x) {
  return ExactScalar(Rational(x));
}
template <>
Complex from_integer<Complex>(const Integer& x) {
  return Complex(to_double(Rational(x)), 0.0);
}

// Coefficient vector of the form c ∘ m, where m substitutes
// a0 -> m00 a0 + m01 a1 and a1 -> m10 a0 + m11 a1.
template <class T>
std::vector<T> substitute(const std::vector<T>& c, const MoebiusMap& m) {
  const int k = static_cast<int>(c.size()) - 1;
  const std::vector<T> l0{from_integer<T>(m(0, 0)), from_integer<T>(m(0, 1))};
  const std::vector<T> l1{from_integer<T>(m(1, 0)), from_integer<T>(m(1, 1))};
  std::vector<std::vector<T>> p0{{T(1)}}, p1{{T(1)}};
  for (int i = 1; i <= k; ++i) {
    p0.push_back(multiply(p0.back(), l0));
    p1.push_back(multiply(p1.back(), l1));
  }
  std::vector<T> out(k + 1, T(0));
  for (int i = 0; i <= k; ++i) {
    if (is_zero(c[i])) continue;
    auto term = multiply(p0[k - i], p1[i]);
    for (int j = 0; j <= k; ++j) out[j] += c[i] * term[j];
  }
  return out;
}

Integer common_radicand(const std::vector<ExactScalar>& f, const std::vector<ExactScalar>& g) {
  Integer d = 0;
  for (const auto* v : {&f, &g}) {
    for (const auto& x : *v) {
      if (x.radicand() == 0) continue;
      if (d == 0) {
        d = x.radicand();
      } else if (d != x.radicand()) {
        fail(ErrorCode::invalid_argument, "pencil coefficients lie in different quadratic fields");
      }
    }
  }
  return d;
}

void check_shape(std::size_t f, std::size_t g) {
  if (f == 0 || f != g) fail(ErrorCode::bad_shape, "pencil forms need equal nonzero length");
}

}  // namespace

Pencil Pencil::exact(std::vector<ExactScalar> f, std::vector<ExactScalar> g) {
  check_shape(f.size(), g.size());
  common_radicand(f, g);
  if (proportional(f, g)) fail(ErrorCode::degenerate_pencil, "f and g are proportional");
  Pencil p;
  p.k_ = static_cast<int>(f.size()) - 1;
  p.ef_ = std::move(f);
  p.eg_ = std::move(g);
  return p;
}

Pencil Pencil::rational(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  return exact(std::vector<ExactScalar>(f.begin(), f.end()),
               std::vector<ExactScalar>(g.begin(), g.end()));
}

Pencil Pencil::numeric(std::vector<Complex> f, std::vector<Complex> g) {
  check_shape(f.size(), g.size());
  for (const auto* v : {&f, &g}) {
    for (const auto& x : *v) {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        fail(ErrorCode::invalid_argument, "non-finite pencil coefficient");
      }
    }
  }
  ComplexMatrix m(2, f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    m(0, i) = f[i];
    m(1, i) = g[i];
  }
  if (numeric_rank(m, 1e-10) < 2) fail(ErrorCode::degenerate_pencil, "f and g are numerically proportional");
  Pencil p;
  p.k_ = static_cast<int>(f.size()) - 1;
  p.numeric_ = true;
  p.nf_ = std::move(f);
  p.ng_ = std::move(g);
  return p;
}

bool Pencil::is_rational() const {
  if (numeric_) return false;
  return std::all_of(ef_.begin(), ef_.end(), [](const auto& x) { return x.is_rational(); }) &&
         std::all_of(eg_.begin(), eg_.end(), [](const auto& x) { return x.is_rational(); });
}

Integer Pencil::radicand() const { return numeric_ ? Integer(0) : common_radicand(ef_, eg_); }

std::vector<Complex> Pencil::complex_f() const {
  if (numeric_) return nf_;
  std::vector<Complex> out;
  for (const auto& x : ef_) out.push_back(x.to_complex());
  return out;
}

std::vector<Complex> Pencil::complex_g() const {
  if (numeric_) return ng_;
  std::vector<Complex> out;
  for (const auto& x : eg_) out.push_back(x.to_complex());
  return out;
}

Pencil Pencil::to_numeric() const { return numeric_ ? *this : numeric(complex_f(), complex_g()); }

std::array<ExactScalar, 2> evaluate_exact(const Pencil& pencil, const ProjPoint& p) {
  if (pencil.is_numeric()) fail(ErrorCode::invalid_argument, "evaluate_exact needs an exact pencil");
  auto e = eval_vector(p, pencil.k());
  std::array<ExactScalar, 2> out{dot(pencil.exact_f(), e), dot(pencil.exact_g(), e)};
  if (out[0].is_zero() && out[1].is_zero()) fail(ErrorCode::base_point, p.to_string() + " is a base point");
  return out;
}

ProjPoint evaluate(const Pencil& pencil, const ProjPoint& p) {
  if (!pencil.is_rational()) fail(ErrorCode::invalid_argument, "evaluate needs a rational pencil");
  auto v = evaluate_exact(pencil, p);
  return ProjPoint(v[0].rational_part(), v[1].rational_part());
}

std::array<Complex, 2> evaluate_numeric(const Pencil& pencil, const ProjPoint& p, double tol) {
  auto f = pencil.complex_f();
  auto g = pencil.complex_g();
  auto e = unit_eval(p, pencil.k());
  Complex x = dot(f, e), y = dot(g, e);
  double size = std::hypot(std::abs(x), std::abs(y));
  if (size <= tol * norm(e) * coeff_norm(f, g)) fail(ErrorCode::base_point, p.to_string() + " is a base point");
  return {x / size, y / size};
}

bool is_base_point(const Pencil& pencil, const ProjPoint& p, double tol) {
  try {
    if (pencil.is_numeric()) {
      evaluate_numeric(pencil, p, tol);
    } else {
      evaluate_exact(pencil, p);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::base_point) return true;
    throw;
  }
  return false;
}

Reduced reduce(const Pencil& pencil) {
  if (pencil.is_numeric()) fail(ErrorCode::invalid_argument, "reduce needs an exact pencil");
  const int k = pencil.k();
  auto pf = pencil.exact_f();
  auto pg = pencil.exact_g();
  trim(pf);
  trim(pg);
  const int x0_power = std::min(k - (static_cast<int>(pf.size()) - 1), k - (static_cast<int>(pg.size()) - 1));
  auto common = poly_gcd(pf, pg);
  const int removed = x0_power + static_cast<int>(common.size()) - 1;
  const int reduced_k = k - removed;

  auto rf = divmod(pf, common).first;
  auto rg = divmod(pg, common).first;
  rf.resize(reduced_k + 1, ExactScalar(0));
  rg.resize(reduced_k + 1, ExactScalar(0));

  // Scale jointly: primitive integers for rational pencils, otherwise make
  // the first nonzero coefficient 1.
  bool rational = std::all_of(rf.begin(), rf.end(), [](const auto& x) { return x.is_rational(); }) &&
                  std::all_of(rg.begin(), rg.end(), [](const auto& x) { return x.is_rational(); });
  std::vector<ExactScalar*> all;
  for (auto& x : rf) all.push_back(&x);
  for (auto& x : rg) all.push_back(&x);
  ExactScalar first;
  for (auto* x : all) {
    if (!x->is_zero()) {
      first = *x;
      break;
    }
  }
  if (rational) {
    Integer den = 1, content = 0;
    for (auto* x : all) den = lcm(den, x->rational_part().get_den());
    for (auto* x : all) {
      Rational scaled = x->rational_part() * den;
      content = gcd(content, scaled.get_num());
    }
    Rational factor(den, content);
    factor.canonicalize();
    if (sgn(first.rational_part()) < 0) factor = -factor;
    for (auto* x : all) *x = ExactScalar(Rational(x->rational_part() * factor));
  } else {
    ExactScalar inv = ExactScalar(1) / first;
    for (auto* x : all) *x *= inv;
  }
  return {Pencil::exact(std::move(rf), std::move(rg)), reduced_k};
}

int effective_degree(const Pencil& pencil, double tol) {
  if (!pencil.is_numeric()) return reduce(pencil).effective_degree;
  const int k = pencil.k();
  if (k == 0) return 0;
  auto f = pencil.numeric_f();
  auto g = pencil.numeric_g();
  auto unit = [](std::vector<Complex> v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    s = std::sqrt(s);
    for (auto& x : v) x /= s;
    return v;
  };
  f = unit(f);
  g = unit(g);
  ComplexMatrix s = ComplexMatrix::Zero(2 * k, 2 * k);
  for (int r = 0; r < k; ++r) {
    for (int i = 0; i <= k; ++i) {
      s(r, r + i) = f[i];
      s(k + r, r + i) = g[i];
    }
  }
  return k - (2 * k - numeric_rank(s, tol));
}

double image_mismatch(const Pencil& first, const ProjPoint& p, const Pencil& second, const ProjPoint& q) {
  auto f1 = first.complex_f(), g1 = first.complex_g();
  auto f2 = second.complex_f(), g2 = second.complex_g();
  auto ep = unit_eval(p, first.k());
  auto eq = unit_eval(q, second.k());
  Complex bracket = dot(f1, ep) * dot(g2, eq) - dot(g1, ep) * dot(f2, eq);
  return std::abs(bracket) / (norm(ep) * norm(eq) * coeff_norm(f1, g1) * coeff_norm(f2, g2));
}

bool images_equal(const Pencil& first, const ProjPoint& p, const Pencil& second, const ProjPoint& q,
                  double tol) {
  bool exact = !first.is_numeric() && !second.is_numeric();
  if (exact) {
    Integer d1 = first.radicand(), d2 = second.radicand();
    exact = d1 == 0 || d2 == 0 || d1 == d2;
  }
  if (!exact) return image_mismatch(first, p, second, q) <= tol;
  auto ep = eval_vector(p, first.k());
  auto eq = eval_vector(q, second.k());
  ExactScalar bracket = dot(first.exact_f(), ep) * dot(second.exact_g(), eq) -
                        dot(first.exact_g(), ep) * dot(second.exact_f(), eq);
  return bracket.is_zero();
}

bool images_match(const Pencil& pencil, const ProjPoint& p, const ProjPoint& q, double tol) {
  if (p == q) return true;
  return images_equal(pencil, p, pencil, q, tol);
}

Pencil precompose_moebius(const Pencil& pencil, const MoebiusMap& m) {
  if (pencil.is_numeric()) {
    return Pencil::numeric(substitute(pencil.numeric_f(), m), substitute(pencil.numeric_g(), m));
  }
  return Pencil::exact(substitute(pencil.exact_f(), m), substitute(pencil.exact_g(), m));
}

Pencil postcompose_moebius(const Pencil& pencil, const MoebiusMap& m) {
  auto mix = [&](const auto& f, const auto& g, auto conv) {
    using T = typename std::decay_t<decltype(f)>::value_type;
    std::vector<T> nf(f.size()), ng(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      nf[i] = conv(m(0, 0)) * f[i] + conv(m(0, 1)) * g[i];
      ng[i] = conv(m(1, 0)) * f[i] + conv(m(1, 1)) * g[i];
    }
    return std::pair{nf, ng};
  };
  if (pencil.is_numeric()) {
    auto [f, g] = mix(pencil.numeric_f(), pencil.numeric_g(), from_integer<Complex>);
    return Pencil::numeric(std::move(f), std::move(g));
  }
  auto [f, g] = mix(pencil.exact_f(), pencil.exact_g(), from_integer<ExactScalar>);
  return Pencil::exact(std::move(f), std::move(g));
}

}  // namespace goncurve
