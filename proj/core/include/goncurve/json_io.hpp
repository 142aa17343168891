#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "goncurve/curve_model.hpp"
#include "goncurve/gonality_engine.hpp"
#include "goncurve/pencil.hpp"
#include "goncurve/proj_line.hpp"

namespace goncurve {

using Json = nlohmann::json;

/// Compact output with sorted keys.
std::string dump_canonical(const Json& j);

Json to_json(const ProjPoint& p);
/// Accepts ["a0", "a1"] (strings or integers), "inf", "p/q" or "n".
ProjPoint point_from_json(const Json& j);

Json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const Json& j);

Json to_json(const Pencil& p);
Pencil pencil_from_json(const Json& j);

Json to_json(const CurveDocument& doc);
CurveDocument curve_from_json(const Json& j);

Json to_json(const SolverConfig& c);
/// Overrides the fields present in j: tol, restarts, max_iter, seed,
/// max_restarts, max_degree, max_subset_genus.
GonalityConfig config_from_json(const Json& j, GonalityConfig base);

Json to_json(const GonalityCertificate& cert);
GonalityCertificate certificate_from_json(const Json& j);

Json to_json(const LowerBoundReport& report);
Json to_json(const VerificationReport& report);

}  // namespace goncurve
