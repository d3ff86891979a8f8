#include "ample/quadraticity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ample {

namespace {

Vec flatten(const LabeledTuple& t) {
  Vec key;
  key.reserve(t.size() * t.front().size());
  for (auto& x : t) key.insert(key.end(), x.begin(), x.end());
  return key;
}

std::vector<int> components(std::size_t node_count, const std::vector<RootMoveEdge>& edges) {
  std::vector<std::vector<int>> adj(node_count);
  for (auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<int> comp(node_count, -1);
  int c = 0;
  for (std::size_t s = 0; s < node_count; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> queue{static_cast<int>(s)};
    comp[s] = c;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = c;
          queue.push_back(v);
        }
    }
    ++c;
  }
  return comp;
}

}  // namespace

bool FiberGraph::connected() const { return !disconnection_witness(); }

std::optional<std::pair<int, int>> FiberGraph::disconnection_witness() const {
  if (nodes.size() <= 1) return std::nullopt;
  std::vector<int> comp = components(nodes.size(), edges);
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (comp[i] != comp[0]) return std::make_pair(0, static_cast<int>(i));
  return std::nullopt;
}

std::optional<LabeledTuple> root_move(const LabeledTuple& t, int i, int j, int root_index,
                                      const std::vector<OrthogonalSet>& polytopes) {
  if (i == j || i < 0 || j < 0 || i >= static_cast<int>(t.size()) || j >= static_cast<int>(t.size()))
    throw std::invalid_argument("root_move: bad component indices");
  const RootSystem& rs = polytopes.front().rs();
  Vec beta = rs.weight_of_root_index(root_index);
  LabeledTuple out = t;
  out[i] = add(out[i], beta);
  out[j] = sub(out[j], beta);
  if (!polytopes[i].contains(out[i]) || !polytopes[j].contains(out[j])) return std::nullopt;
  return out;
}

std::vector<SimpleMove> simple_moves(const RootSystem& rs, const LabeledTuple& t) {
  std::vector<SimpleMove> out;
  for (int j = 0; j < static_cast<int>(t.size()); ++j)
    for (int k = 0; k < static_cast<int>(t.size()); ++k) {
      if (j == k) continue;
      for (int i = 0; i < rs.rank(); ++i)
        if (t[j][i] <= -1 && t[k][i] >= 1) out.push_back({j, k, i});
    }
  return out;
}

namespace {

// Per-tuple data that is independent of the target sum: component lattice
// points and the suffix Minkowski sums used to prune the enumeration.
struct FiberContext {
  std::vector<std::vector<Vec>> lambdas;
  std::vector<OrthogonalSet> suffix;  // suffix[i] = P_i + ... + P_{m-1}
};

FiberContext make_fiber_context(const std::vector<OrthogonalSet>& polytopes) {
  FiberContext ctx;
  std::size_t m = polytopes.size();
  ctx.lambdas.resize(m);
  for (std::size_t i = 0; i < m; ++i) ctx.lambdas[i] = polytopes[i].lambda_points();
  ctx.suffix.reserve(m);
  OrthogonalSet acc = polytopes.back();
  ctx.suffix.push_back(acc);
  for (std::size_t i = m - 1; i-- > 0;) {
    acc = acc.minkowski_sum(polytopes[i]);
    ctx.suffix.push_back(acc);
  }
  std::reverse(ctx.suffix.begin(), ctx.suffix.end());
  return ctx;
}

std::optional<std::vector<LabeledTuple>> enumerate_fiber(const Vec& sum, const FiberContext& ctx,
                                                         std::size_t node_cap) {
  std::size_t m = ctx.lambdas.size();
  std::vector<LabeledTuple> nodes;
  LabeledTuple partial(m);
  bool capped = false;
  auto rec = [&](auto&& self, const Vec& remaining, std::size_t i) -> void {
    if (capped) return;
    if (!ctx.suffix[i].contains(remaining)) return;
    if (i + 1 == m) {
      partial[i] = remaining;
      nodes.push_back(partial);
      if (node_cap && nodes.size() > node_cap) capped = true;
      return;
    }
    for (const Vec& y : ctx.lambdas[i]) {
      partial[i] = y;
      self(self, sub(remaining, y), i + 1);
    }
  };
  rec(rec, sum, 0);
  if (capped) return std::nullopt;
  return nodes;
}

FiberGraph build_fiber_graph(const std::vector<LabeledTuple>& all_nodes,
                             const std::vector<OrthogonalSet>& polytopes, FiberMode mode);

}  // namespace

std::optional<std::vector<LabeledTuple>> fiber_nodes(const Vec& sum,
                                                     const std::vector<OrthogonalSet>& polytopes,
                                                     std::size_t node_cap) {
  return enumerate_fiber(sum, make_fiber_context(polytopes), node_cap);
}

FiberGraph fiber(const Vec& sum, const std::vector<OrthogonalSet>& polytopes, FiberMode mode) {
  if (polytopes.empty()) throw std::invalid_argument("fiber: empty polytope list");
  OrthogonalSet sum_p = minkowski_sum(polytopes);
  if (!sum_p.contains(sum)) throw std::invalid_argument("sum not in Lambda(P_1 + ... + P_m)");
  auto nodes = fiber_nodes(sum, polytopes);
  return build_fiber_graph(*nodes, polytopes, mode);
}

namespace {

FiberGraph build_fiber_graph(const std::vector<LabeledTuple>& all_nodes,
                             const std::vector<OrthogonalSet>& polytopes, FiberMode mode) {
  const RootSystem& rs = polytopes.front().rs();
  FiberGraph g;
  g.mode = mode;
  for (auto& t : all_nodes) {
    if (mode == FiberMode::winning_restricted) {
      bool all_winning = true;
      for (auto& x : t)
        if (!game::is_winning(rs, x)) {
          all_winning = false;
          break;
        }
      if (!all_winning) continue;
    }
    g.nodes.push_back(t);
  }

  std::unordered_map<Vec, int, VecHash> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) index.emplace(flatten(g.nodes[k]), static_cast<int>(k));

  int m = static_cast<int>(polytopes.size());
  int n = rs.rank();
  std::vector<int> pos_roots = rs.positive_roots();
  std::vector<Vec> betas;
  betas.reserve(pos_roots.size());
  for (int ri : pos_roots) betas.push_back(rs.weight_of_root_index(ri));
  Vec key(static_cast<std::size_t>(m) * n);
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const LabeledTuple& t = g.nodes[u];
    for (int k = 0; k < m; ++k)
      std::copy(t[k].begin(), t[k].end(), key.begin() + static_cast<std::size_t>(k) * n);
    for (int i = 0; i < m; ++i) {
      int j_end = mode == FiberMode::adjacent_only ? std::min(i + 2, m) : m;
      for (int j = i + 1; j < j_end; ++j) {
        Int* ki = key.data() + static_cast<std::size_t>(i) * n;
        Int* kj = key.data() + static_cast<std::size_t>(j) * n;
        for (std::size_t b = 0; b < betas.size(); ++b) {
          const Vec& beta = betas[b];
          for (int dir = 0; dir < 2; ++dir) {
            // dir 0: beta flows j -> i; dir 1: beta flows i -> j.
            Int sign = dir == 0 ? 1 : -1;
            for (int k = 0; k < n; ++k) {
              ki[k] = t[i][k] + sign * beta[k];
              kj[k] = t[j][k] - sign * beta[k];
            }
            auto it = index.find(key);
            if (it != index.end() && it->second > static_cast<int>(u))
              g.edges.push_back({static_cast<int>(u), it->second, i, j, pos_roots[b]});
          }
        }
        std::copy(t[i].begin(), t[i].end(), ki);
        std::copy(t[j].begin(), t[j].end(), kj);
      }
    }
  }
  return g;
}

}  // namespace

ConnectivityReport check_connected(const std::vector<OrthogonalSet>& polytopes, FiberMode mode,
                                   std::size_t node_cap) {
  const RootSystem& rs = polytopes.front().rs();
  FiberContext ctx = make_fiber_context(polytopes);
  const OrthogonalSet& sum_p = ctx.suffix.front();
  std::size_t m = polytopes.size();
  ConnectivityReport rep;

  auto record = [&](const Vec& s, const std::vector<LabeledTuple>& nodes) {
    FiberGraph g = build_fiber_graph(nodes, polytopes, mode);
    FiberStats st;
    st.sum = s;
    st.nodes = g.nodes.size();
    st.edges = g.edges.size();
    st.connected = !g.nodes.empty() && g.connected();
    if (!st.connected) {
      ++rep.disconnected;
      if (!rep.witness) {
        rep.witness_sum = s;
        if (auto w = g.disconnection_witness())
          rep.witness = std::make_pair(g.nodes[w->first], g.nodes[w->second]);
      }
    }
    rep.fibers.push_back(std::move(st));
  };

  if (m == 1) {
    for (const Vec& s : sum_p.lambda_points()) {
      if (mode == FiberMode::winning_restricted && !game::is_winning(rs, s)) continue;
      auto nodes = enumerate_fiber(s, ctx, node_cap);
      if (!nodes) continue;  // over the cap; outside this report's scope
      record(s, *nodes);
    }
    return rep;
  }

  // Shared across all sums: bucket the last two components by their partial
  // sum, and fold suffix fiber counts so each sum's fiber size is known
  // before anything is materialized.
  const std::vector<Vec>& lam_a = ctx.lambdas[m - 2];
  const std::vector<Vec>& lam_b = ctx.lambdas[m - 1];
  std::unordered_map<Vec, std::vector<std::int32_t>, VecHash> pair_bucket;
  for (std::int32_t yi = 0; yi < static_cast<std::int32_t>(lam_a.size()); ++yi)
    for (const Vec& z : lam_b) pair_bucket[add(lam_a[yi], z)].push_back(yi);

  // counts[i](s) = number of tuples over components i..m-1 with sum s.
  std::vector<std::unordered_map<Vec, std::uint64_t, VecHash>> counts(m - 1);
  auto& tail = counts[m - 2];
  tail.reserve(pair_bucket.size());
  for (const auto& [s2, ys] : pair_bucket) tail.emplace(s2, ys.size());
  for (std::size_t i = m - 2; i-- > 0;) {
    counts[i].reserve(counts[i + 1].size() * 4);
    for (const Vec& y : ctx.lambdas[i])
      for (const auto& [s2, c] : counts[i + 1]) counts[i][add(y, s2)] += c;
  }

  std::vector<LabeledTuple> nodes;
  LabeledTuple partial(m);
  auto collect = [&](auto&& self, const Vec& remaining, std::size_t i) -> void {
    if (i == m - 2) {
      auto it = pair_bucket.find(remaining);
      if (it == pair_bucket.end()) return;
      for (std::int32_t yi : it->second) {
        partial[m - 2] = lam_a[yi];
        partial[m - 1] = sub(remaining, lam_a[yi]);
        nodes.push_back(partial);
      }
      return;
    }
    const auto& next = counts[i + 1];
    for (const Vec& y : ctx.lambdas[i]) {
      Vec rest = sub(remaining, y);
      if (next.find(rest) == next.end()) continue;
      partial[i] = y;
      self(self, rest, i + 1);
    }
  };

  for (const Vec& s : sum_p.lambda_points()) {
    if (mode == FiberMode::winning_restricted && !game::is_winning(rs, s)) continue;
    auto it = counts[0].find(s);
    std::uint64_t fiber_size = it == counts[0].end() ? 0 : it->second;
    if (node_cap && fiber_size > node_cap) continue;  // over the cap; outside this report's scope
    nodes.clear();
    nodes.reserve(fiber_size);
    collect(collect, s, 0);
    record(s, nodes);
  }
  return rep;
}

std::vector<QuadraticRelation> quadratic_relations(const OrthogonalSet& p, bool spanning_tree) {
  if (!p.special_ample()) throw std::invalid_argument("quadratic_relations requires a special ample polytope");
  std::vector<OrthogonalSet> pair{p, p};
  FiberContext ctx = make_fiber_context(pair);
  const OrthogonalSet& p2 = ctx.suffix.front();
  std::vector<QuadraticRelation> out;
  for (const Vec& s : p2.lambda_points()) {
    FiberGraph g = build_fiber_graph(*enumerate_fiber(s, ctx, 0), pair, FiberMode::all_root_moves);
    auto canon = [](const LabeledTuple& t) {
      return t[0] <= t[1] ? std::make_pair(t[0], t[1]) : std::make_pair(t[1], t[0]);
    };
    if (spanning_tree) {
      // BFS tree over unordered factorizations, edges inherited from the
      // ordered fiber graph.
      std::map<std::pair<Vec, Vec>, std::vector<std::pair<Vec, Vec>>> adj;
      for (auto& t : g.nodes) adj[canon(t)];
      for (auto& e : g.edges) {
        auto a = canon(g.nodes[e.from]), b = canon(g.nodes[e.to]);
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      if (adj.empty()) continue;
      std::set<std::pair<Vec, Vec>> seen{adj.begin()->first};
      std::deque<std::pair<Vec, Vec>> queue{adj.begin()->first};
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto& v : adj[u])
          if (seen.insert(v).second) {
            out.push_back({s, u, v});
            queue.push_back(v);
          }
      }
    } else {
      std::set<std::pair<Vec, Vec>> pairs;
      for (auto& t : g.nodes) pairs.insert(canon(t));
      for (auto a = pairs.begin(); a != pairs.end(); ++a)
        for (auto b = std::next(a); b != pairs.end(); ++b) out.push_back({s, *a, *b});
    }
  }
  return out;
}

}  // namespace ample
