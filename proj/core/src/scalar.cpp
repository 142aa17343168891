#include "goncurve/scalar.hpp"

#include <cctype>

#include "goncurve/error.hpp"

namespace goncurve {

std::size_t bit_height(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

double to_double(const Rational& x) {
  if (sgn(x) == 0) return 0.0;
  // mpq_get_d truncates; go through a long mantissa to keep rounding sane.
  mpf_class value(0, 128);
  value = x;
  return value.get_d();
}

Rational parse_rational(const std::string& text) {
  auto is_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    fail(ErrorCode::parse_error, "not a decimal rational: '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) fail(ErrorCode::parse_error, "zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

namespace {

// Writes n = c^2 * m, stripping square factors of small primes and folding
// the remainder when it is itself a perfect square.
void split_square_part(Integer& n, Integer& c) {
  c = 1;
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    Integer pp = p * p;
    if (pp > abs(n)) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      c *= p;
    }
  }
  if (n > 0 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    c *= root;
    n = 1;
  }
}

}  // namespace

ExactScalar::ExactScalar(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (sgn(b_) != 0) {
    if (d_ == 0) fail(ErrorCode::invalid_argument, "radicand must be nonzero");
    Integer c;
    split_square_part(d_, c);
    b_ *= c;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  normalize();
}

ExactScalar ExactScalar::sqrt(const Rational& x) {
  if (sgn(x) == 0) return ExactScalar();
  // sqrt(n/m) = sqrt(n*m)/m
  Integer n = x.get_num() * x.get_den();
  Integer c;
  split_square_part(n, c);
  Rational coeff(c, x.get_den());
  coeff.canonicalize();
  if (n == 1) return ExactScalar(coeff);
  ExactScalar out;
  out.b_ = coeff;
  out.d_ = n;
  return out;
}

void ExactScalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
}

const Integer& ExactScalar::joint_radicand(const ExactScalar& rhs) const {
  if (sgn(b_) == 0) return rhs.d_;
  if (sgn(rhs.b_) != 0 && d_ != rhs.d_) {
    fail(ErrorCode::invalid_argument,
         "mixing quadratic fields sqrt(" + d_.get_str() + ") and sqrt(" + rhs.d_.get_str() + ")");
  }
  return d_;
}

Rational ExactScalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

ExactScalar ExactScalar::conjugate() const {
  ExactScalar out = *this;
  out.b_ = -b_;
  return out;
}

Complex ExactScalar::to_complex() const {
  if (sgn(b_) == 0) return {to_double(a_), 0.0};
  mpf_class root(0, 256);
  mpf_class magnitude(abs(d_), 256);
  root = ::sqrt(magnitude);
  mpf_class scaled(0, 256);
  scaled = b_;
  scaled *= root;
  if (d_ > 0) {
    mpf_class total(0, 256);
    total = a_;
    total += scaled;
    return {total.get_d(), 0.0};
  }
  return {to_double(a_), scaled.get_d()};
}

std::string ExactScalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  d_ = joint_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  d_ = joint_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  Integer d = joint_radicand(rhs);
  if (sgn(b_) == 0 && sgn(rhs.b_) == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational a = a_ * rhs.a_ + Rational(d) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = sgn(b_) == 0 ? Integer(0) : d;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::invalid_argument, "division by zero");
  if (sgn(rhs.b_) == 0) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  return sgn(lhs.b_) == 0 || lhs.d_ == rhs.d_;
}

}  // namespace goncurve
