#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goncurve/curve_model.hpp"
#include "goncurve/pencil.hpp"

// Naive reference constructions. Nothing here calls the linear_core,
// lowrank_solver or pencil evaluation code, so agreement with the main
// solver is independent evidence.
namespace goncurve::oracle {

/// f = product of forms vanishing on group0, g = product vanishing on
/// group_inf, so f vanishes on group0 and g on group_inf.
Pencil vanish_pole_pencil(const std::vector<ProjPoint>& group0, const std::vector<ProjPoint>& group_inf);

enum class Verdict { exists, empty, undecided };
std::string to_string(Verdict v);

/// Verdict for each k = 1..kmax on whether a degree <= k pencil identifies
/// every pair, from exact dimension counts and the 4 x 4 Pfaffian only.
std::vector<Verdict> exact_min_identify_degree(const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs, int kmax);

/// Binary curve with side2[j] = phi(side1[j]). Offending nodes (base points,
/// colliding images, repeats) are replaced by seeded random points.
BinaryCurve planted_binary_curve(const Pencil& phi, const std::vector<ProjPoint>& nodes1, std::uint64_t seed);

}  // namespace goncurve::oracle
