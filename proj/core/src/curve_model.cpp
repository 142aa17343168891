#include "goncurve/curve_model.hpp"

#include <map>
#include <random>
#include <set>

#include "goncurve/error.hpp"

namespace goncurve {

std::string to_string(Family family) { return family == Family::irreducible ? "irreducible" : "binary"; }

Family parse_family(const std::string& text) {
  if (text == "irreducible") return Family::irreducible;
  if (text == "binary") return Family::binary;
  fail(ErrorCode::parse_error, "unknown curve family '" + text + "'");
}

int genus(const IrreducibleNodalCurve& curve) { return static_cast<int>(curve.pairs.size()); }
int genus(const BinaryCurve& curve) { return static_cast<int>(curve.side1.size()) - 1; }
int genus(const Curve& curve) {
  return std::visit([](const auto& c) { return genus(c); }, curve);
}

namespace {

void check_distinct(const std::vector<std::pair<ProjPoint, int>>& points, const std::string& what,
                    std::vector<ValidationIssue>& issues) {
  std::map<ProjPoint, int> seen;
  for (const auto& [p, node] : points) {
    auto [it, inserted] = seen.emplace(p, node);
    if (!inserted) {
      issues.push_back({node, what + "point " + p.to_string() + " at node " + std::to_string(node) +
                                  " repeats node " + std::to_string(it->second)});
    }
  }
}

}  // namespace

std::vector<ValidationIssue> validate(const Curve& curve, bool for_gonality) {
  std::vector<ValidationIssue> issues;
  if (const auto* irr = std::get_if<IrreducibleNodalCurve>(&curve)) {
    std::vector<std::pair<ProjPoint, int>> points;
    for (std::size_t j = 0; j < irr->pairs.size(); ++j) {
      const auto& [a, b] = irr->pairs[j];
      if (a == b) {
        issues.push_back({int(j), "branches of node " + std::to_string(j) + " coincide at " + a.to_string()});
        points.emplace_back(a, int(j));
      } else {
        points.emplace_back(a, int(j));
        points.emplace_back(b, int(j));
      }
    }
    check_distinct(points, "", issues);
  } else {
    const auto& bin = std::get<BinaryCurve>(curve);
    if (bin.side1.size() != bin.side2.size()) {
      issues.push_back({-1, "sides have different lengths (" + std::to_string(bin.side1.size()) + " and " +
                                std::to_string(bin.side2.size()) + ")"});
    }
    for (int side = 1; side <= 2; ++side) {
      const auto& pts = side == 1 ? bin.side1 : bin.side2;
      std::vector<std::pair<ProjPoint, int>> points;
      for (std::size_t j = 0; j < pts.size(); ++j) points.emplace_back(pts[j], int(j));
      check_distinct(points, "side" + std::to_string(side) + " ", issues);
    }
  }
  if (for_gonality && genus(curve) < 2) {
    issues.push_back({-1, "genus " + std::to_string(genus(curve)) + " is below 2"});
  }
  return issues;
}

void require_valid(const Curve& curve, bool for_gonality) {
  auto issues = validate(curve, for_gonality);
  if (issues.empty()) return;
  std::string message = "invalid curve:";
  for (const auto& issue : issues) message += " " + issue.message + ";";
  message.pop_back();
  fail(ErrorCode::invalid_curve, message);
}

CurveDocument random_curve(Family family, int genus, std::uint64_t seed, int height) {
  if (genus < 2) fail(ErrorCode::bad_genus, "genus must be at least 2, got " + std::to_string(genus));
  if (height < 2 * genus + 2) {
    fail(ErrorCode::invalid_argument, "height must be at least 2g+2 = " + std::to_string(2 * genus + 2));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw0(0, height), draw1(-height, height);
  const int budget = 1000 * (2 * genus + 2);
  int draws = 0;
  auto fresh = [&](std::set<ProjPoint>& used) {
    while (draws++ < budget) {
      long a0 = draw0(rng), a1 = draw1(rng);
      if (a0 == 0 && a1 == 0) continue;
      ProjPoint p(a0, a1);
      if (used.insert(p).second) return p;
    }
    fail(ErrorCode::exhausted_retries, "could not draw distinct points");
  };

  CurveDocument doc;
  doc.seed = seed;
  doc.height = height;
  if (family == Family::irreducible) {
    IrreducibleNodalCurve c;
    std::set<ProjPoint> used;
    for (int j = 0; j < genus; ++j) {
      ProjPoint a = fresh(used);
      ProjPoint b = fresh(used);
      c.pairs.emplace_back(a, b);
    }
    doc.curve = std::move(c);
  } else {
    BinaryCurve c;
    std::set<ProjPoint> used1, used2;
    for (int j = 0; j <= genus; ++j) {
      c.side1.push_back(fresh(used1));
      c.side2.push_back(fresh(used2));
    }
    doc.curve = std::move(c);
  }
  return doc;
}

IrreducibleNodalCurve transform(const IrreducibleNodalCurve& curve, const MoebiusMap& m) {
  IrreducibleNodalCurve out;
  for (const auto& [a, b] : curve.pairs) out.pairs.emplace_back(apply_moebius(m, a), apply_moebius(m, b));
  return out;
}

BinaryCurve transform(const BinaryCurve& curve, const MoebiusMap& m1, const std::optional<MoebiusMap>& m2) {
  const MoebiusMap& second = m2 ? *m2 : m1;
  BinaryCurve out;
  for (const auto& p : curve.side1) out.side1.push_back(apply_moebius(m1, p));
  for (const auto& p : curve.side2) out.side2.push_back(apply_moebius(second, p));
  return out;
}

}  // namespace goncurve
