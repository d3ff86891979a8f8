#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ample/polytope.hpp"

namespace ample {

/// A parsed polytope spec file; owns the root system it was built on.
struct PolytopeSpec {
  std::shared_ptr<RootSystem> rs;
  OrthogonalSet polytope;
};

/// Formats:
///   {"type":"A","rank":2,"build":[{"orbit":[1,1]},{"orbit":[2,1]}],"translate":[0,0]}
///   {"type":"A","rank":2,"explicit":[{"word":[1,2],"mu":[...]}, ...]}
/// Build mode is the Minkowski sum of the listed orbit polytopes plus an
/// optional translation; explicit mode lists all |W| vertices, keyed by
/// 1-based reduced words.
PolytopeSpec parse_polytope_spec(const nlohmann::json& j);
PolytopeSpec parse_polytope_spec(const std::string& path);

/// Explicit-mode spec that re-parses to an equal polytope.
nlohmann::json emit_polytope_spec(const OrthogonalSet& p);

Vec parse_int_list(const std::string& comma_separated);

}  // namespace ample
