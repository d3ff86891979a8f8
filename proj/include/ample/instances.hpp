#pragma once

#include <memory>
#include <random>
#include <vector>

#include "ample/polytope.hpp"

namespace ample {

/// One randomly drawn verification instance: m special ample polytopes over
/// a shared root system.
struct Instance {
  std::shared_ptr<RootSystem> rs;
  std::vector<OrthogonalSet> polytopes;
};

/// Minkowski sum of 1..max_summands orbit polytopes with lambda coordinates
/// in [1, max_coord], plus a small random translation kept only when it
/// preserves speciality.
OrthogonalSet random_polytope(const RootSystem& rs, std::mt19937_64& rng, Int max_coord = 3,
                              int max_summands = 3);

std::vector<Instance> instance_family(Family fam, int rank, int count, std::uint64_t seed,
                                      Int max_coord = 3, int max_summands = 3);

}  // namespace ample
