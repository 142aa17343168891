#include <algorithm>
#include <bit>

#include "goncurve/gonality_engine.hpp"

namespace goncurve {

int generic_gonality(int genus) {
  if (genus < 2) fail(ErrorCode::bad_genus, "gonality bounds need genus >= 2, got " + std::to_string(genus));
  return (genus + 3) / 2;
}

namespace {

GonalityCertificate blank_certificate(Family family, int genus, const GonalityConfig& config) {
  GonalityCertificate cert;
  cert.family = family;
  cert.genus = genus;
  cert.config = config.solver;
  return cert;
}

[[noreturn]] void budget_exceeded(const std::string& message, const GonalityCertificate& partial) {
  throw SolverBudgetExceeded(message, partial);
}

void check_cap(int degree, const GonalityConfig& config, const GonalityCertificate& cert) {
  if (config.max_degree && degree > *config.max_degree) {
    budget_exceeded("no witness up to --max-degree " + std::to_string(*config.max_degree), cert);
  }
}

// Repeats `attempt` with doubled restarts while it reports search-exhausted.
template <class Attempt>
auto escalate(const GonalityConfig& config, Attempt attempt) {
  GonalityConfig cfg = config;
  auto result = attempt(cfg);
  while (!result.found && result.exclusion == Exclusion::search_exhausted && !cfg.solver.exact_only &&
         cfg.solver.restarts * 2 <= cfg.solver.max_restarts) {
    cfg.solver.restarts *= 2;
    result = attempt(cfg);
  }
  return result;
}

struct IrreducibleAttempt {
  bool found;
  Exclusion exclusion;
  IdentifyResult result;
};

struct BinaryAttempt {
  bool found;
  Exclusion exclusion;
  JointResult result;
};

BinaryAttempt try_total_degree(const BinaryCurve& curve, int t, const GonalityConfig& config) {
  Exclusion kind = Exclusion::exact;
  for (int k1 = t - 1; k1 >= 1; --k1) {
    JointResult r = binary_witness(curve, k1, t - k1, config);
    if (r.pencils) return {true, Exclusion::exact, r};
    if (r.exclusion == Exclusion::search_exhausted) kind = Exclusion::search_exhausted;
  }
  return {false, kind, {}};
}

}  // namespace

GonalityCertificate irreducible_upper_bound(const IrreducibleNodalCurve& curve, const GonalityConfig& config) {
  require_valid(curve, true);
  const int g = genus(curve);
  const int guaranteed = generic_gonality(g);
  GonalityCertificate cert = blank_certificate(Family::irreducible, g, config);
  for (int k = 2; k <= guaranteed; ++k) {
    check_cap(k, config, cert);
    auto attempt = [&](const GonalityConfig& cfg) {
      IdentifyResult r = identify_pairs(curve.pairs, k, cfg);
      return IrreducibleAttempt{r.pencil.has_value(), r.exclusion, r};
    };
    IrreducibleAttempt a = k == guaranteed ? escalate(config, attempt) : attempt(config);
    if (a.found) {
      cert.witness = {*a.result.pencil};
      cert.degrees = {a.result.degree};
      cert.claimed_upper = a.result.degree;
      cert.exact = !a.result.pencil->is_numeric();
      cert.residual = a.result.residual;
      return cert;
    }
    cert.exclusions.push_back({k, a.exclusion});
  }
  budget_exceeded("no witness at the guaranteed degree " + std::to_string(guaranteed), cert);
}

GonalityCertificate binary_upper_bound(const BinaryCurve& curve, const GonalityConfig& config) {
  require_valid(curve, true);
  const int g = genus(curve);
  const int guaranteed = generic_gonality(g);
  GonalityCertificate cert = blank_certificate(Family::binary, g, config);
  for (int t = 2; t <= guaranteed; ++t) {
    check_cap(t, config, cert);
    auto attempt = [&](const GonalityConfig& cfg) { return try_total_degree(curve, t, cfg); };
    BinaryAttempt a = t == guaranteed ? escalate(config, attempt) : attempt(config);
    if (a.found) {
      const auto& [p1, p2] = *a.result.pencils;
      cert.witness = {p1, p2};
      cert.degrees = {a.result.degrees.first, a.result.degrees.second};
      cert.claimed_upper = a.result.degrees.first + a.result.degrees.second;
      cert.exact = !p1.is_numeric() && !p2.is_numeric();
      cert.residual = a.result.residual;
      return cert;
    }
    cert.exclusions.push_back({t, a.exclusion});
  }
  budget_exceeded("no witness at the guaranteed degree " + std::to_string(guaranteed), cert);
}

GonalityCertificate upper_bound(const Curve& curve, const GonalityConfig& config) {
  if (const auto* irr = std::get_if<IrreducibleNodalCurve>(&curve)) return irreducible_upper_bound(*irr, config);
  return binary_upper_bound(std::get<BinaryCurve>(curve), config);
}

namespace {

// Shared subset machinery. `excluded(mask, degree)` reports whether no
// witness of inner degree <= degree exists on the subset, proven exactly;
// `searched(mask, degree)` runs the numeric search (true when none found).
template <class Excluded, class Searched>
LowerBoundReport subset_bound(Family family, int genus, int nodes, int trivial_inner, int (*ceiling)(int),
                              const GonalityConfig& config, Excluded excluded, Searched searched) {
  if (genus > config.max_subset_genus) {
    fail(ErrorCode::too_large, "genus " + std::to_string(genus) + " exceeds the subset budget " +
                                   std::to_string(config.max_subset_genus));
  }
  const unsigned count = 1u << nodes;
  std::vector<unsigned> order(count);
  for (unsigned m = 0; m < count; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  std::vector<int> exact_lb(count, 0);
  LowerBoundReport report;
  report.family = family;
  report.genus = genus;
  report.heuristic_allowed = config.allow_heuristic;
  report.rows.resize(count);
  for (unsigned mask : order) {
    const int size = std::popcount(mask);
    const int ceil = ceiling(size);
    int lb = trivial_inner;
    if (size > 0) {
      lb = std::max(lb, 2);
      for (int i = 0; i < nodes; ++i) {
        if (mask & (1u << i)) lb = std::max(lb, exact_lb[mask & ~(1u << i)]);
      }
      while (lb < ceil && excluded(mask, lb)) ++lb;
    }
    exact_lb[mask] = lb;

    LowerBoundRow& row = report.rows[mask];
    for (int i = 0; i < nodes; ++i) {
      if (mask & (1u << i)) row.subset.push_back(i);
    }
    row.exact_estimate = lb;
    row.estimate = std::max(lb, ceil);
    row.kind = lb >= ceil ? Evidence::exact : Evidence::dimension_heuristic;
    if (row.kind == Evidence::dimension_heuristic && config.lower_search) {
      bool none = true;
      for (int d = lb; d < ceil && none; ++d) none = searched(mask, d);
      if (none) {
        row.kind = Evidence::search_exhausted;
      } else {
        row.estimate = lb;
        row.kind = Evidence::exact;
      }
    }
  }

  const int clamp = family == Family::binary ? nodes : 1 << 30;
  int exact_bound = clamp, bound = clamp;
  for (const auto& row : report.rows) {
    const int rest = nodes - static_cast<int>(row.subset.size());
    exact_bound = std::min(exact_bound, row.exact_estimate + rest);
    bound = std::min(bound, row.estimate + rest);
  }
  report.exact_bound = exact_bound;
  if (!config.allow_heuristic) bound = exact_bound;
  report.bound = bound;
  report.grade = Evidence::exact;
  for (const auto& row : report.rows) {
    const int rest = nodes - static_cast<int>(row.subset.size());
    if (row.exact_estimate + rest >= bound) continue;
    if (row.kind == Evidence::dimension_heuristic) {
      report.grade = Evidence::dimension_heuristic;
      break;
    }
    report.grade = Evidence::search_exhausted;
  }
  report.assumptions.push_back("exact rows: inner degrees excluded by empty solution spaces or exact rank-2 tests");
  if (report.grade != Evidence::exact) {
    report.assumptions.push_back(
        "dimension-heuristic rows assume the branch points are general (expected solution-space dimension)");
  }
  if (config.lower_search) {
    report.assumptions.push_back("search-exhausted rows: the numeric search found no witness below the estimate");
  }
  return report;
}

int irreducible_ceiling(int size) { return size == 0 ? 1 : (size + 3) / 2; }
int binary_ceiling(int size) { return std::max(2, (size + 2) / 2); }

GonalityConfig exact_only(const GonalityConfig& config) {
  GonalityConfig cfg = config;
  cfg.solver.exact_only = true;
  cfg.solver.force_numeric = false;
  return cfg;
}

}  // namespace

LowerBoundReport irreducible_lower_bound(const IrreducibleNodalCurve& curve, const GonalityConfig& config) {
  require_valid(curve, true);
  const int g = genus(curve);
  const GonalityConfig exact_cfg = exact_only(config);
  auto subset = [&](unsigned mask) {
    std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
    for (int i = 0; i < g; ++i) {
      if (mask & (1u << i)) pairs.push_back(curve.pairs[i]);
    }
    return pairs;
  };
  auto excluded = [&](unsigned mask, int k) {
    IdentifyResult r = identify_pairs(subset(mask), k, exact_cfg);
    return !r.pencil && r.exclusion == Exclusion::exact;
  };
  auto searched = [&](unsigned mask, int k) { return !identify_pairs(subset(mask), k, config).pencil; };
  return subset_bound(Family::irreducible, g, g, 1, irreducible_ceiling, config, excluded, searched);
}

LowerBoundReport binary_lower_bound(const BinaryCurve& curve, const GonalityConfig& config) {
  require_valid(curve, true);
  const int g = genus(curve);
  const int nodes = g + 1;
  const GonalityConfig exact_cfg = exact_only(config);
  auto sides = [&](unsigned mask) {
    std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> out;
    for (int i = 0; i < nodes; ++i) {
      if (mask & (1u << i)) {
        out.first.push_back(curve.side1[i]);
        out.second.push_back(curve.side2[i]);
      }
    }
    return out;
  };
  auto all_splits = [&](unsigned mask, int t, const GonalityConfig& cfg, bool need_exact) {
    auto [s1, s2] = sides(mask);
    for (int k1 = t - 1; k1 >= 1; --k1) {
      JointResult r = joint_witness(s1, s2, k1, t - k1, cfg);
      if (r.pencils) return false;
      if (need_exact && r.exclusion != Exclusion::exact) return false;
    }
    return true;
  };
  auto excluded = [&](unsigned mask, int t) { return all_splits(mask, t, exact_cfg, true); };
  auto searched = [&](unsigned mask, int t) { return all_splits(mask, t, config, false); };
  return subset_bound(Family::binary, g, nodes, 2, binary_ceiling, config, excluded, searched);
}

LowerBoundReport lower_bound(const Curve& curve, const GonalityConfig& config) {
  if (const auto* irr = std::get_if<IrreducibleNodalCurve>(&curve)) return irreducible_lower_bound(*irr, config);
  return binary_lower_bound(std::get<BinaryCurve>(curve), config);
}

}  // namespace goncurve
