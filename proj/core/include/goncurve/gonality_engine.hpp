#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goncurve/curve_model.hpp"
#include "goncurve/error.hpp"
#include "goncurve/lowrank_solver.hpp"
#include "goncurve/pencil.hpp"

namespace goncurve {

struct GonalityConfig {
  SolverConfig solver;
  /// Upper-bound search stops (with solver_budget_exceeded) past this degree.
  std::optional<int> max_degree;
  /// Lower bounds throw too_large above this genus.
  int max_subset_genus = 12;
  /// Fresh seeds tried when a witness has a base point at a node.
  int spurious_retries = 8;
  /// Headline lower bound may use dimension-count rows.
  bool allow_heuristic = true;
  /// Run the numeric search on rows below their heuristic estimate.
  bool lower_search = false;
};

std::string to_string(Exclusion kind);

// ---- witness constructors ----

/// Rows [b1 e(a), -b0 e(a)] acting on the concatenated (f; g).
RationalMatrix interpolation_matrix(const std::vector<ProjPoint>& sources, const std::vector<ProjPoint>& targets,
                                    int k);

/// Antisymmetric (k+1) x (k+1) matrices P with <P, e(a) e(b)^T - e(b) e(a)^T> = 0
/// for every pair; rank-2 elements are Pluecker matrices of identifying pencils.
LinearMatrixSpace identify_space(const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int k);

/// (k1+1) x (k2+1) matrices M with e(side1[j])^T M e(side2[j]) = 0 for every j.
LinearMatrixSpace joint_space(const std::vector<ProjPoint>& side1, const std::vector<ProjPoint>& side2, int k1,
                              int k2);

/// Pencil of degree <= k with evaluate(phi, sources[j]) = targets[j].
/// nullopt when the solution space holds only constant maps.
std::optional<Pencil> interpolate_pairs(const std::vector<ProjPoint>& sources, const std::vector<ProjPoint>& targets,
                                        int k, std::uint64_t seed = 0);

struct IdentifyResult {
  std::optional<Pencil> pencil;  // reduced and verified
  int degree = 0;                // effective degree of pencil
  Exclusion exclusion = Exclusion::search_exhausted;
  double residual = 0.0;
};

/// Degree <= k pencil identifying a_j with b_j for every pair.
IdentifyResult identify_pairs(const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int k,
                              const GonalityConfig& config);

struct HyperellipticResult {
  bool hyperelliptic = false;
  std::optional<MoebiusMap> automorphism;
};

/// Exact: the Moebius map through the first three node pairs, checked on the rest.
HyperellipticResult hyperelliptic_binary(const BinaryCurve& curve);

struct JointResult {
  std::optional<std::pair<Pencil, Pencil>> pencils;  // reduced and verified
  std::pair<int, int> degrees{0, 0};
  Exclusion exclusion = Exclusion::search_exhausted;
  double residual = 0.0;
};

/// Pencils psi1 of degree <= k1 and psi2 of degree <= k2 with
/// psi1(side1[j]) = psi2(side2[j]) for every j.
JointResult joint_witness(const std::vector<ProjPoint>& side1, const std::vector<ProjPoint>& side2, int k1, int k2,
                          const GonalityConfig& config);
JointResult binary_witness(const BinaryCurve& curve, int k1, int k2, const GonalityConfig& config);

// ---- certificates ----

struct ExclusionRecord {
  int degree;
  Exclusion kind;
  friend bool operator==(const ExclusionRecord&, const ExclusionRecord&) = default;
};

struct GonalityCertificate {
  Family family = Family::irreducible;
  int genus = 0;
  std::vector<Pencil> witness;  // one pencil, or (psi1, psi2)
  std::vector<int> degrees;
  int claimed_upper = 0;
  bool exact = true;
  double residual = 0.0;
  std::vector<ExclusionRecord> exclusions;
  SolverConfig config;
};

class SolverBudgetExceeded : public Error {
 public:
  SolverBudgetExceeded(const std::string& message, GonalityCertificate partial)
      : Error(ErrorCode::solver_budget_exceeded, message), partial_(std::move(partial)) {}
  const GonalityCertificate& partial() const { return partial_; }

 private:
  GonalityCertificate partial_;
};

int generic_gonality(int genus);

GonalityCertificate irreducible_upper_bound(const IrreducibleNodalCurve& curve, const GonalityConfig& config);
GonalityCertificate binary_upper_bound(const BinaryCurve& curve, const GonalityConfig& config);
GonalityCertificate upper_bound(const Curve& curve, const GonalityConfig& config);

struct VerificationReport {
  bool ok = false;
  std::vector<int> degrees;
  int claimed_upper = 0;
  double residual = 0.0;
  std::vector<std::string> failures;
};

VerificationReport verify_certificate(const Curve& curve, const GonalityCertificate& cert, double tol = 1e-9);

// ---- lower bounds ----

enum class Evidence { exact, dimension_heuristic, search_exhausted };
std::string to_string(Evidence grade);

struct LowerBoundRow {
  std::vector<int> subset;  // node indices
  int exact_estimate = 0;   // proven inner lower bound
  int estimate = 0;         // inner estimate used at the heuristic level
  Evidence kind = Evidence::exact;
};

struct LowerBoundReport {
  Family family = Family::irreducible;
  int genus = 0;
  int bound = 0;        // at the requested level
  int exact_bound = 0;  // exact rows only
  Evidence grade = Evidence::exact;
  bool heuristic_allowed = true;
  std::vector<LowerBoundRow> rows;
  std::vector<std::string> assumptions;
};

LowerBoundReport irreducible_lower_bound(const IrreducibleNodalCurve& curve, const GonalityConfig& config);
LowerBoundReport binary_lower_bound(const BinaryCurve& curve, const GonalityConfig& config);
LowerBoundReport lower_bound(const Curve& curve, const GonalityConfig& config);

}  // namespace goncurve
