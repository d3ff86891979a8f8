#include "ample/normality.hpp"

#include <algorithm>

namespace ample {

bool Decomposition::validates(const std::vector<OrthogonalSet>& polytopes) const {
  if (parts.size() != polytopes.size()) return false;
  Vec s(target.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!polytopes[i].contains(parts[i])) return false;
    s = add(s, parts[i]);
  }
  return s == target;
}

Decomposition decompose(const Vec& z, const std::vector<OrthogonalSet>& polytopes) {
  if (polytopes.empty()) throw std::invalid_argument("decompose: empty polytope list");
  for (auto& p : polytopes)
    if (!p.special_ample()) throw std::invalid_argument("decompose requires special ample polytopes");
  const RootSystem& rs = polytopes.front().rs();
  OrthogonalSet sum_p = minkowski_sum(polytopes);
  if (!sum_p.contains(z)) throw std::invalid_argument("z not in Lambda(P_1 + ... + P_m)");

  auto [w, dom] = rs.dominant_representative(z);

  // Progressive chain z = x^0, x^{k+1} = x^k + w.alpha_k, ending at the
  // chamber-w vertex.  The chain length equals the root-coordinate height
  // of w^{-1}(mu - z), and every x^k stays winning, so the downward walk
  // below always finds a component with positive pairing.
  Vec height = *rs.root_coords_of_weight(sub(rs.act(rs.inverse(w), sum_p.vertex(w)), dom));
  Int bound = sum(height);
  std::vector<int> chain;  // root indices in Delta
  Vec x = z;
  while (x != sum_p.vertex(w)) {
    if (static_cast<Int>(chain.size()) >= bound)
      throw std::logic_error("progressive chain exceeded its height bound");
    int i = sum_p.progressive_root(x, w);
    Vec e(rs.rank(), 0);
    e[i] = 1;
    int root_idx = rs.find_root(rs.act_root(w, e));
    chain.push_back(root_idx);
    x = add(x, rs.weight_of_root_index(root_idx));
  }

  Decomposition d;
  d.target = z;
  d.parts.reserve(polytopes.size());
  for (auto& p : polytopes) d.parts.push_back(p.vertex(w));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Root& beta = rs.roots()[*it];
    std::size_t pick = d.parts.size();
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      if (rs.pair(d.parts[i], beta) >= 1) {
        pick = i;
        break;
      }
    if (pick == d.parts.size()) throw std::logic_error("no component pairs positively with the chain root");
    d.parts[pick] = sub(d.parts[pick], rs.weight_of_root_index(*it));
  }
  return d;
}

namespace {

bool brute_rec(const Vec& remaining, std::size_t i, const std::vector<std::vector<Vec>>& lambdas,
               const std::vector<OrthogonalSet>& suffix_sums, std::vector<Vec>& parts) {
  std::size_t m = lambdas.size();
  if (i + 1 == m) {
    if (!suffix_sums[i].contains(remaining)) return false;
    parts[i] = remaining;
    return true;
  }
  if (!suffix_sums[i].contains(remaining)) return false;
  for (const Vec& y : lambdas[i]) {
    parts[i] = y;
    if (brute_rec(sub(remaining, y), i + 1, lambdas, suffix_sums, parts)) return true;
  }
  return false;
}

}  // namespace

std::optional<Decomposition> brute_force_decompose(const Vec& z, const std::vector<OrthogonalSet>& polytopes) {
  if (polytopes.empty()) throw std::invalid_argument("brute_force_decompose: empty polytope list");
  std::size_t m = polytopes.size();
  std::vector<std::vector<Vec>> lambdas(m);
  for (std::size_t i = 0; i < m; ++i) lambdas[i] = polytopes[i].lambda_points();  // sorted lex
  std::vector<OrthogonalSet> suffix_sums;
  suffix_sums.reserve(m);
  OrthogonalSet acc = polytopes.back();
  suffix_sums.push_back(acc);
  for (std::size_t i = m - 1; i-- > 0;) {
    acc = acc.minkowski_sum(polytopes[i]);
    suffix_sums.push_back(acc);
  }
  std::reverse(suffix_sums.begin(), suffix_sums.end());

  const RootSystem& rs = polytopes.front().rs();
  if (!rs.root_coords_of_weight(sub(suffix_sums.front().vertex(0), z))) return std::nullopt;

  std::vector<Vec> parts(m);
  if (!brute_rec(z, 0, lambdas, suffix_sums, parts)) return std::nullopt;
  Decomposition d;
  d.target = z;
  d.parts = std::move(parts);
  return d;
}

NormalityReport check_normality(const std::vector<OrthogonalSet>& polytopes) {
  NormalityReport rep;
  OrthogonalSet sum_p = minkowski_sum(polytopes);
  for (const Vec& z : sum_p.lambda_points()) {
    ++rep.targets;
    bool ok = false;
    try {
      ok = decompose(z, polytopes).validates(polytopes);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok)
      ++rep.decomposed;
    else
      rep.failures.push_back(z);
  }
  return rep;
}

}  // namespace ample
