#include <algorithm>

#include "goncurve/gonality_engine.hpp"

namespace goncurve {

std::string to_string(Evidence grade) {
  switch (grade) {
    case Evidence::exact:
      return "exact";
    case Evidence::dimension_heuristic:
      return "dimension-heuristic";
    case Evidence::search_exhausted:
      return "search-exhausted";
  }
  return "exact";
}

namespace {

constexpr double kNearBaseTol = 1e-7;

struct Prepared {
  Pencil pencil;
  int degree;
};

std::optional<Prepared> prepare(const Pencil& p, std::vector<std::string>& failures) {
  try {
    if (p.is_numeric()) return Prepared{p, effective_degree(p)};
    Reduced r = reduce(p);
    return Prepared{r.pencil, r.effective_degree};
  } catch (const Error& e) {
    failures.push_back(std::string("witness pencil rejected: ") + e.what());
    return std::nullopt;
  }
}

bool near_base(const Pencil& p, const ProjPoint& node, double tol) {
  return p.is_numeric() ? is_base_point(p, node, std::max(tol, kNearBaseTol)) : is_base_point(p, node);
}

}  // namespace

VerificationReport verify_certificate(const Curve& curve, const GonalityCertificate& cert, double tol) {
  VerificationReport report;
  auto& failures = report.failures;
  const bool irreducible = std::holds_alternative<IrreducibleNodalCurve>(curve);
  const Family family = irreducible ? Family::irreducible : Family::binary;
  if (cert.family != family) failures.push_back("family does not match the curve");
  if (cert.genus != genus(curve)) failures.push_back("genus does not match the curve");
  const std::size_t expected = irreducible ? 1 : 2;
  if (cert.witness.size() != expected) {
    failures.push_back("expected " + std::to_string(expected) + " witness pencils");
    return report;
  }
  if (cert.family != family) return report;

  std::vector<Prepared> prepared;
  for (const auto& p : cert.witness) {
    if (cert.exact && p.is_numeric()) failures.push_back("certificate marked exact holds a numeric pencil");
    auto ready = prepare(p, failures);
    if (!ready) return report;
    prepared.push_back(*ready);
  }

  auto check_node = [&](int index, const Prepared& first, const ProjPoint& p, const Prepared& second,
                        const ProjPoint& q) {
    const std::string where = "node " + std::to_string(index);
    if (near_base(first.pencil, p, tol) || near_base(second.pencil, q, tol)) {
      failures.push_back(where + ": witness vanishes at a branch point");
      return;
    }
    report.residual = std::max(report.residual, image_mismatch(first.pencil, p, second.pencil, q));
    if (!images_equal(first.pencil, p, second.pencil, q, tol)) failures.push_back(where + ": images differ");
  };

  if (irreducible) {
    const auto& pairs = std::get<IrreducibleNodalCurve>(curve).pairs;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      check_node(int(j), prepared[0], pairs[j].first, prepared[0], pairs[j].second);
    }
  } else {
    const auto& bin = std::get<BinaryCurve>(curve);
    for (std::size_t j = 0; j < bin.side1.size(); ++j) {
      check_node(int(j), prepared[0], bin.side1[j], prepared[1], bin.side2[j]);
    }
  }

  for (const auto& p : prepared) {
    report.degrees.push_back(p.degree);
    report.claimed_upper += p.degree;
  }
  if (report.degrees != cert.degrees) failures.push_back("recorded degrees differ from the effective degrees");
  if (report.claimed_upper != cert.claimed_upper) failures.push_back("claimed upper bound differs from the degree sum");
  report.ok = failures.empty();
  return report;
}

}  // namespace goncurve
