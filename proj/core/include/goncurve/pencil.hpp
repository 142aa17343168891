#pragma once

#include <array>
#include <optional>
#include <vector>

#include "goncurve/proj_line.hpp"
#include "goncurve/scalar.hpp"

namespace goncurve {

/// A map P^1 -> P^1 given by two degree-k binary forms, p -> [f(p) : g(p)].
///
/// Coefficients follow the eval_vector monomial order. Exact pencils hold
/// ExactScalar coefficients (rational, or all in one field Q(sqrt d)); numeric
/// pencils hold complex doubles. Construction rejects constant maps.
class Pencil {
 public:
  static Pencil exact(std::vector<ExactScalar> f, std::vector<ExactScalar> g);
  static Pencil rational(const std::vector<Rational>& f, const std::vector<Rational>& g);
  static Pencil numeric(std::vector<Complex> f, std::vector<Complex> g);

  int k() const { return k_; }
  bool is_numeric() const { return numeric_; }
  /// Exact with every coefficient in Q.
  bool is_rational() const;
  /// Shared radicand of the coefficients; 0 for rational or numeric pencils.
  Integer radicand() const;

  const std::vector<ExactScalar>& exact_f() const { return ef_; }
  const std::vector<ExactScalar>& exact_g() const { return eg_; }
  const std::vector<Complex>& numeric_f() const { return nf_; }
  const std::vector<Complex>& numeric_g() const { return ng_; }

  /// Coefficients as complex doubles, for either kind.
  std::vector<Complex> complex_f() const;
  std::vector<Complex> complex_g() const;
  Pencil to_numeric() const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  Pencil() = default;

  int k_ = 0;
  bool numeric_ = false;
  std::vector<ExactScalar> ef_, eg_;
  std::vector<Complex> nf_, ng_;
};

/// Image of p under a rational pencil, as a canonical point.
/// Throws base_point, or invalid_argument for non-rational pencils.
ProjPoint evaluate(const Pencil& pencil, const ProjPoint& p);

/// Homogeneous image (f(p), g(p)) of an exact pencil. Throws base_point.
std::array<ExactScalar, 2> evaluate_exact(const Pencil& pencil, const ProjPoint& p);

/// Homogeneous image of any pencil, scaled to unit norm. Throws base_point
/// when both values are below tol relative to the coefficient and monomial
/// norms.
std::array<Complex, 2> evaluate_numeric(const Pencil& pencil, const ProjPoint& p,
                                        double tol = 1e-9);

/// True when p is a base point: exactly for exact pencils, within tol
/// (relative, as in evaluate_numeric) for numeric ones.
bool is_base_point(const Pencil& pencil, const ProjPoint& p, double tol = 1e-9);

struct Reduced {
  Pencil pencil;
  int effective_degree;
};

/// Removes the common factor of f and g. Rational results are scaled to
/// primitive integers. Throws invalid_argument for numeric pencils.
Reduced reduce(const Pencil& pencil);

/// Degree after removing common factors. Numeric pencils use the nullity of
/// the 2k x 2k Sylvester matrix at relative tolerance tol.
int effective_degree(const Pencil& pencil, double tol = 1e-10);

/// Whether first(p) == second(q). Exact pencils compare exactly; otherwise
/// |f1(p) g2(q) - g1(p) f2(q)| <= tol * |e(p)| |e(q)| |(f1,g1)| |(f2,g2)|.
bool images_equal(const Pencil& first, const ProjPoint& p, const Pencil& second,
                  const ProjPoint& q, double tol = 1e-9);

/// Whether the pencil identifies p and q.
bool images_match(const Pencil& pencil, const ProjPoint& p, const ProjPoint& q,
                  double tol = 1e-9);

/// Relative size of the bracket used by images_equal (0 for exact matches).
double image_mismatch(const Pencil& first, const ProjPoint& p, const Pencil& second,
                      const ProjPoint& q);

/// pencil ∘ m
Pencil precompose_moebius(const Pencil& pencil, const MoebiusMap& m);

/// m ∘ pencil
Pencil postcompose_moebius(const Pencil& pencil, const MoebiusMap& m);

}  // namespace goncurve
