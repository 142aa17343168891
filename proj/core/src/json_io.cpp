#include "goncurve/json_io.hpp"

#include "goncurve/error.hpp"

namespace goncurve {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected an exact scalar string, got " + j.dump());
}

std::string rational_string(const Rational& x) { return x.get_str(); }

Json exact_scalar_json(const ExactScalar& x, bool radical) {
  if (!radical) return rational_string(x.rational_part());
  return Json::array({rational_string(x.rational_part()), rational_string(x.radical_part())});
}

Json scalars_json(const Pencil& p, bool use_f) {
  Json out = Json::array();
  if (p.is_numeric()) {
    for (const auto& x : use_f ? p.numeric_f() : p.numeric_g()) out.push_back(Json::array({x.real(), x.imag()}));
    return out;
  }
  const bool radical = p.radicand() != 0;
  for (const auto& x : use_f ? p.exact_f() : p.exact_g()) out.push_back(exact_scalar_json(x, radical));
  return out;
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) bad("expected a coefficient list");
  std::vector<Complex> out;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number()) bad("expected [re, im] pairs");
    out.emplace_back(x[0].get<double>(), x[1].get<double>());
  }
  return out;
}

std::vector<ExactScalar> exact_list(const Json& j, const Integer& radicand) {
  if (!j.is_array()) bad("expected a coefficient list");
  std::vector<ExactScalar> out;
  for (const auto& x : j) {
    if (radicand == 0) {
      out.emplace_back(rational_from_json(x));
    } else {
      if (!x.is_array() || x.size() != 2) bad("expected [a, b] pairs for a pencil with a radicand");
      out.emplace_back(rational_from_json(x[0]), rational_from_json(x[1]), radicand);
    }
  }
  return out;
}

Exclusion exclusion_from_string(const std::string& s) {
  if (s == "exact") return Exclusion::exact;
  if (s == "search-exhausted" || s == "budget-exhausted") return Exclusion::search_exhausted;
  bad("unknown exclusion kind '" + s + "'");
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(); }

Json to_json(const ProjPoint& p) { return Json::array({p.a0().get_str(), p.a1().get_str()}); }

ProjPoint point_from_json(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return ProjPoint(rational_from_json(j[0]), rational_from_json(j[1]));
  bad("expected a point, got " + j.dump());
}

Json to_json(const MoebiusMap& m) {
  return Json::array({Json::array({m(0, 0).get_str(), m(0, 1).get_str()}),
                      Json::array({m(1, 0).get_str(), m(1, 1).get_str()})});
}

MoebiusMap moebius_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
    bad("expected a 2x2 matrix");
  }
  return MoebiusMap(rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
                    rational_from_json(j[1][1]));
}

Json to_json(const Pencil& p) {
  Json out{{"k", p.k()}, {"f", scalars_json(p, true)}, {"g", scalars_json(p, false)}, {"numeric", p.is_numeric()}};
  if (!p.is_numeric() && p.radicand() != 0) out["radicand"] = p.radicand().get_str();
  return out;
}

Pencil pencil_from_json(const Json& j) {
  const bool numeric = field(j, "numeric").get<bool>();
  const int k = field(j, "k").get<int>();
  Pencil p = numeric ? Pencil::numeric(complex_list(field(j, "f")), complex_list(field(j, "g")))
                     : Pencil::exact(exact_list(field(j, "f"), j.contains("radicand")
                                                                    ? Integer(j.at("radicand").get<std::string>())
                                                                    : Integer(0)),
                                     exact_list(field(j, "g"), j.contains("radicand")
                                                                    ? Integer(j.at("radicand").get<std::string>())
                                                                    : Integer(0)));
  if (p.k() != k) bad("pencil degree does not match its coefficient count");
  return p;
}

Json to_json(const CurveDocument& doc) {
  Json out;
  out["family"] = to_string(doc.family());
  if (doc.family() == Family::irreducible) {
    Json pairs = Json::array();
    for (const auto& [a, b] : doc.irreducible().pairs) pairs.push_back(Json::array({to_json(a), to_json(b)}));
    out["pairs"] = pairs;
  } else {
    Json s1 = Json::array(), s2 = Json::array();
    for (const auto& p : doc.binary().side1) s1.push_back(to_json(p));
    for (const auto& p : doc.binary().side2) s2.push_back(to_json(p));
    out["side1"] = s1;
    out["side2"] = s2;
  }
  if (doc.seed) out["seed"] = *doc.seed;
  if (doc.height) out["height"] = *doc.height;
  return out;
}

CurveDocument curve_from_json(const Json& j) {
  try {
    CurveDocument doc;
    Family family = parse_family(field(j, "family").get<std::string>());
    if (family == Family::irreducible) {
      IrreducibleNodalCurve c;
      const Json& pairs = field(j, "pairs");
      if (!pairs.is_array()) bad("'pairs' must be a list");
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) bad("each pair must hold two points");
        c.pairs.emplace_back(point_from_json(pair[0]), point_from_json(pair[1]));
      }
      doc.curve = std::move(c);
    } else {
      BinaryCurve c;
      for (const char* key : {"side1", "side2"}) {
        const Json& side = field(j, key);
        if (!side.is_array()) bad(std::string("'") + key + "' must be a list");
        auto& out = std::string(key) == "side1" ? c.side1 : c.side2;
        for (const auto& p : side) out.push_back(point_from_json(p));
      }
      doc.curve = std::move(c);
    }
    if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("height")) doc.height = j.at("height").get<int>();
    return doc;
  } catch (const Json::exception& e) {
    bad(std::string("malformed curve document: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::zero_point) bad(e.what());
    throw;
  }
}

Json to_json(const SolverConfig& c) {
  return Json{{"tol", c.tol}, {"restarts", c.restarts}, {"max_iter", c.max_iter}, {"seed", c.seed}};
}

GonalityConfig config_from_json(const Json& j, GonalityConfig base) {
  try {
    if (!j.is_object()) bad("config must be an object");
    if (j.contains("tol")) base.solver.tol = j.at("tol").get<double>();
    if (j.contains("restarts")) base.solver.restarts = j.at("restarts").get<int>();
    if (j.contains("max_iter")) base.solver.max_iter = j.at("max_iter").get<int>();
    if (j.contains("seed")) base.solver.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_restarts")) base.solver.max_restarts = j.at("max_restarts").get<int>();
    if (j.contains("max_degree")) base.max_degree = j.at("max_degree").get<int>();
    if (j.contains("max_subset_genus")) base.max_subset_genus = j.at("max_subset_genus").get<int>();
    return base;
  } catch (const Json::exception& e) {
    bad(std::string("malformed config: ") + e.what());
  }
}

Json to_json(const GonalityCertificate& cert) {
  Json witness = Json::array();
  for (const auto& p : cert.witness) witness.push_back(to_json(p));
  Json exclusions = Json::array();
  for (const auto& e : cert.exclusions) exclusions.push_back({{"degree", e.degree}, {"kind", to_string(e.kind)}});
  return Json{{"family", to_string(cert.family)},
              {"genus", cert.genus},
              {"witness", witness},
              {"degrees", cert.degrees},
              {"claimed_upper", cert.claimed_upper},
              {"exact", cert.exact},
              {"residual", cert.residual},
              {"exclusions", exclusions},
              {"config", to_json(cert.config)}};
}

GonalityCertificate certificate_from_json(const Json& j) {
  try {
    GonalityCertificate cert;
    cert.family = parse_family(field(j, "family").get<std::string>());
    cert.genus = field(j, "genus").get<int>();
    for (const auto& p : field(j, "witness")) cert.witness.push_back(pencil_from_json(p));
    cert.degrees = field(j, "degrees").get<std::vector<int>>();
    cert.claimed_upper = field(j, "claimed_upper").get<int>();
    cert.exact = field(j, "exact").get<bool>();
    cert.residual = j.value("residual", 0.0);
    if (j.contains("exclusions")) {
      for (const auto& e : j.at("exclusions")) {
        cert.exclusions.push_back({field(e, "degree").get<int>(), exclusion_from_string(field(e, "kind").get<std::string>())});
      }
    }
    if (j.contains("config")) cert.config = config_from_json(j.at("config"), GonalityConfig{}).solver;
    return cert;
  } catch (const Json::exception& e) {
    bad(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const LowerBoundReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"subset", row.subset},
                    {"exact_estimate", row.exact_estimate},
                    {"estimate", row.estimate},
                    {"kind", to_string(row.kind)}});
  }
  return Json{{"family", to_string(report.family)},
              {"genus", report.genus},
              {"bound", report.bound},
              {"exact_bound", report.exact_bound},
              {"grade", to_string(report.grade)},
              {"heuristic_allowed", report.heuristic_allowed},
              {"rows", rows},
              {"assumptions", report.assumptions}};
}

Json to_json(const VerificationReport& report) {
  return Json{{"ok", report.ok},
              {"degrees", report.degrees},
              {"claimed_upper", report.claimed_upper},
              {"residual", report.residual},
              {"failures", report.failures}};
}

}  // namespace goncurve
