#pragma once

// Independent test oracles, deliberately written against different
// representations than the library: polygon geometry for rank-2 membership
// and an unmemoized play-tree search for the numbers game.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ample/numbers_game.hpp"
#include "ample/polytope.hpp"
#include "ample/root_system.hpp"

namespace oracle {

using ample::Int;
using ample::Vec;

inline Int cross(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Convex hull by monotone chain, counterclockwise, on weight coordinates.
inline std::vector<Vec> hull2(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Membership in the convex hull of the vertex map plus the congruence
// condition, for rank 1 and 2 only.
inline bool polygon_contains(const ample::OrthogonalSet& p, const Vec& x) {
  const ample::RootSystem& rs = p.rs();
  if (!rs.root_coords_of_weight(ample::sub(p.vertex(0), x))) return false;
  if (rs.rank() == 1) {
    Int lo = p.vertex(0)[0], hi = lo;
    for (const Vec& v : p.vertices()) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return lo <= x[0] && x[0] <= hi;
  }
  std::vector<Vec> h = hull2(p.vertices());
  if (h.size() == 1) return x == h[0];
  if (h.size() == 2) {
    // Degenerate segment; check collinearity and the box.
    if (cross(h[0], h[1], x) != 0) return false;
    for (int c = 0; c < 2; ++c)
      if (x[c] < std::min(h[0][c], h[1][c]) || x[c] > std::max(h[0][c], h[1][c])) return false;
    return true;
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], x) < 0) return false;
  return true;
}

// All lattice points of a rank <= 2 polytope by bounding-box scan.
inline std::vector<Vec> polygon_lambda(const ample::OrthogonalSet& p) {
  const ample::RootSystem& rs = p.rs();
  int n = rs.rank();
  Vec lo = p.vertex(0), hi = p.vertex(0);
  for (const Vec& v : p.vertices())
    for (int c = 0; c < n; ++c) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  std::vector<Vec> out;
  Vec x = lo;
  for (;;) {
    if (rs.root_coords_of_weight(ample::sub(p.vertex(0), x)) && polygon_contains(p, x)) out.push_back(x);
    int c = 0;
    while (c < n && x[c] == hi[c]) x[c] = lo[c], ++c;
    if (c == n) break;
    ++x[c];
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PlayTree {
  bool winning = false;
  std::set<std::pair<Vec, int>> outcomes;  // (final, move count) over all wins
};

// Every cutoff play sequence, no memoization; exponential but fine at test
// scale.  Collects the set of distinct winning outcomes.
inline void play_tree_rec(const ample::RootSystem& rs, const Vec& v, int depth, PlayTree& t) {
  for (Int a : v)
    if (a < -1) return;
  if (ample::all_nonneg(v)) {
    t.winning = true;
    t.outcomes.insert({v, depth});
    return;
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (v[i] < 0) play_tree_rec(rs, ample::game::fire(rs, v, i), depth + 1, t);
}

inline PlayTree play_tree(const ample::RootSystem& rs, const Vec& v) {
  PlayTree t;
  play_tree_rec(rs, v, 0, t);
  return t;
}

// The plain game (no cutoff) terminates on finite types; collect every
// reachable terminal outcome.
inline void plain_tree_rec(const ample::RootSystem& rs, const Vec& v, int depth, PlayTree& t) {
  if (ample::all_nonneg(v)) {
    t.winning = true;
    t.outcomes.insert({v, depth});
    return;
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (v[i] < 0) plain_tree_rec(rs, ample::game::fire(rs, v, i), depth + 1, t);
}

inline PlayTree plain_play_tree(const ample::RootSystem& rs, const Vec& v) {
  PlayTree t;
  plain_tree_rec(rs, v, 0, t);
  return t;
}

}  // namespace oracle
