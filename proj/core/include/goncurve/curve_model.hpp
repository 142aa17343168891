#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "goncurve/proj_line.hpp"

namespace goncurve {

enum class Family { irreducible, binary };

std::string to_string(Family family);
Family parse_family(const std::string& text);

/// P^1 with the two points of each pair glued; genus = number of pairs.
struct IrreducibleNodalCurve {
  std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
  friend bool operator==(const IrreducibleNodalCurve&, const IrreducibleNodalCurve&) = default;
};

/// Two copies of P^1 glued at side1[j] ~ side2[j]; genus = nodes - 1.
struct BinaryCurve {
  std::vector<ProjPoint> side1;
  std::vector<ProjPoint> side2;
  friend bool operator==(const BinaryCurve&, const BinaryCurve&) = default;
};

using Curve = std::variant<IrreducibleNodalCurve, BinaryCurve>;

struct CurveDocument {
  Curve curve;
  std::optional<std::uint64_t> seed;
  std::optional<int> height;

  Family family() const { return curve.index() == 0 ? Family::irreducible : Family::binary; }
  const IrreducibleNodalCurve& irreducible() const { return std::get<IrreducibleNodalCurve>(curve); }
  const BinaryCurve& binary() const { return std::get<BinaryCurve>(curve); }

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

int genus(const IrreducibleNodalCurve& curve);
int genus(const BinaryCurve& curve);
int genus(const Curve& curve);

struct ValidationIssue {
  int index;  // node index the issue refers to
  std::string message;
};

/// All invariant violations. With for_gonality, genus < 2 is an issue too.
std::vector<ValidationIssue> validate(const Curve& curve, bool for_gonality = true);

/// Throws invalid_curve listing every issue.
void require_valid(const Curve& curve, bool for_gonality = true);

/// Seeded random curve with a0 in [0, height] and a1 in [-height, height].
/// Throws bad_genus for g < 2, invalid_argument for height < 2g + 2.
CurveDocument random_curve(Family family, int genus, std::uint64_t seed, int height = 1000);

IrreducibleNodalCurve transform(const IrreducibleNodalCurve& curve, const MoebiusMap& m);
/// m2 defaults to m1.
BinaryCurve transform(const BinaryCurve& curve, const MoebiusMap& m1, const std::optional<MoebiusMap>& m2 = std::nullopt);

}  // namespace goncurve
