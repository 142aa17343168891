#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace goncurve {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Bit size of numerator plus denominator; used to prefer small pivots.
std::size_t bit_height(const Rational& x);

/// Nearest double to x, computed without overflow for large numerators and
/// denominators of comparable size.
double to_double(const Rational& x);

/// Parses a decimal integer ("-12") or fraction ("3/4"). Throws parse_error.
Rational parse_rational(const std::string& text);

/// Element a + b*sqrt(d) of Q or of a quadratic extension Q(sqrt d).
///
/// Plain rationals have b = 0 and carry no radicand (radicand() == 0).
/// Mixing two irrational values requires equal radicands; values produced by
/// one computation always share the radicand they were created with.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& value) : a_(value) {}  // NOLINT(implicit)
  ExactScalar(long value) : a_(value) {}             // NOLINT(implicit)
  ExactScalar(Rational a, Rational b, Integer radicand);

  /// sqrt(x) as an exact scalar. Square factors are pulled out of the
  /// radicand so that perfect squares come back rational.
  static ExactScalar sqrt(const Rational& x);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Field norm a^2 - d b^2 (the product with the conjugate).
  Rational norm() const;
  ExactScalar conjugate() const;
  Complex to_complex() const;
  std::string to_string() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs);

 private:
  const Integer& joint_radicand(const ExactScalar& rhs) const;
  void normalize();

  Rational a_;
  Rational b_;
  Integer d_;  // 0 when b_ == 0
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

}  // namespace goncurve
