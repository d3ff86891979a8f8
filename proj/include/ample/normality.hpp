#pragma once

#include <optional>
#include <vector>

#include "ample/polytope.hpp"

namespace ample {

struct Decomposition {
  std::vector<Vec> parts;  // one Weight per polytope
  Vec target;

  bool validates(const std::vector<OrthogonalSet>& polytopes) const;
};

/// Constructive decomposition of z in Lambda(P_1 + ... + P_m): climb the
/// progressive chain from z to the chamber vertex, then walk the vertex
/// tuple back down, peeling each chain root off the first component that
/// pairs positively with it.
Decomposition decompose(const Vec& z, const std::vector<OrthogonalSet>& polytopes);

/// Exhaustive oracle: lexicographically-first tuple over the product of
/// Lambda sets with prefix pruning, or nullopt.
std::optional<Decomposition> brute_force_decompose(const Vec& z, const std::vector<OrthogonalSet>& polytopes);

struct NormalityReport {
  std::size_t targets = 0;
  std::size_t decomposed = 0;
  std::vector<Vec> failures;
  bool ok() const { return failures.empty() && decomposed == targets; }
};

/// Runs decompose over every z in Lambda(P_1 + ... + P_m) and validates the
/// outputs.  A failure falsifies the implementation, not the theorem.
NormalityReport check_normality(const std::vector<OrthogonalSet>& polytopes);

}  // namespace ample
