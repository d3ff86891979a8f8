#include "ample/instances.hpp"

namespace ample {

OrthogonalSet random_polytope(const RootSystem& rs, std::mt19937_64& rng, Int max_coord, int max_summands) {
  std::uniform_int_distribution<Int> coord(1, max_coord);
  std::uniform_int_distribution<int> count(1, max_summands);
  std::uniform_int_distribution<Int> shift(-1, 1);

  int k = count(rng);
  std::vector<OrthogonalSet> parts;
  for (int s = 0; s < k; ++s) {
    Vec lambda(rs.rank());
    for (auto& c : lambda) c = coord(rng);
    parts.push_back(OrthogonalSet::from_orbit(rs, lambda));
  }
  OrthogonalSet p = minkowski_sum(parts);

  for (int attempt = 0; attempt < 10; ++attempt) {
    Vec nu(rs.rank());
    for (auto& c : nu) c = shift(rng);
    if (is_zero(nu)) continue;
    OrthogonalSet shifted = p.translate(nu);
    if (shifted.special_ample()) return shifted;
  }
  return p;
}

std::vector<Instance> instance_family(Family fam, int rank, int count, std::uint64_t seed, Int max_coord,
                                      int max_summands) {
  auto rs = std::make_shared<RootSystem>(RootSystem::build(fam, rank));
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int t = 0; t < count; ++t) {
    Instance inst;
    inst.rs = rs;
    int m = 2 + t % 2;
    for (int i = 0; i < m; ++i) inst.polytopes.push_back(random_polytope(*rs, rng, max_coord, max_summands));
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace ample
