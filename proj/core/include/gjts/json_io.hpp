#pragma once

#include <optional>
#include <string>

#include "gjts/left_unit.hpp"
#include "gjts/models.hpp"
#include "gjts/triple_system.hpp"

namespace gjts {

/// On-disk system format: {"schema":"1","dim":n,"label":str,
/// "constants":[{"i":..,"j":..,"k":..,"value":[scalar,..]},..]},
/// where a scalar is a 4-array of rational strings "p/q" ("/q" omitted when
/// q=1) ordered by the basis (1, sqrt2, sqrt3, sqrt6), and omitted index
/// triples are zero. A "tripotent" array and a descriptor block are written
/// for built-in models and accepted (or ignored) on input.
std::string system_to_json_text(const TripleSystem& s, const Vector* tripotent = nullptr,
                                const ModelDescriptor* descriptor = nullptr);

struct LoadedSystem {
  TripleSystem system;
  std::optional<Vector> tripotent;
};
LoadedSystem system_from_json_text(const std::string& text);

/// Tripotent file: either {"tripotent":[scalar,..]} or a bare array.
Vector tripotent_from_json_text(const std::string& text, int expect_dim);

/// Circle-algebra format: {"schema":"1","dims":{"u11p":..,"u11m":..,
/// "u13p":..,"u13m":..},"circle":[{"i":..,"j":..,"value":[scalar,..]},..]}.
std::string circle_to_json_text(const CircleAlgebra& c);

struct LoadedCircle {
  GradedSpace space;
  std::map<std::pair<int, int>, Vector> table;
};
LoadedCircle circle_from_json_text(const std::string& text);

}  // namespace gjts
