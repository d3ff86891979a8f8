#include <doctest.h>

#include <algorithm>
#include <set>

#include "ample/quadraticity.hpp"

using namespace ample;

TEST_CASE("root moves") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  std::vector<OrthogonalSet> pp{p, p};
  int a = a1.find_root({1});
  int na = a1.find_root({-1});
  LabeledTuple t{{-1}, {1}};
  auto moved = root_move(t, 0, 1, a, pp);
  REQUIRE(moved);
  CHECK(*moved == LabeledTuple{{1}, {-1}});
  // beta from j to i equals -beta from i to j.
  auto swapped = root_move(t, 1, 0, na, pp);
  REQUIRE(swapped);
  CHECK(*swapped == *moved);
  // Pushing past the interval end is invalid.
  CHECK_FALSE(root_move(*moved, 0, 1, a, pp));
  CHECK_THROWS(root_move(t, 0, 0, a, pp));
}

TEST_CASE("simple moves") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  LabeledTuple dominant{{1, 0}, {0, 2}};
  CHECK(simple_moves(a2, dominant).empty());

  LabeledTuple t{{-1, 2}, {1, 1}};
  auto moves = simple_moves(a2, t);
  bool found = false;
  for (const SimpleMove& m : moves) found = found || (m.j == 0 && m.k == 1 && m.simple == 0);
  CHECK(found);
  // Every simple move is a valid root move on suitable polytopes.
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  std::vector<OrthogonalSet> polys{hex, hex};
  for (const SimpleMove& m : moves) {
    auto r = root_move(t, m.j, m.k, a2.simple_root_index(m.simple), polys);
    REQUIRE(r);
    for (const Vec& part : *r) CHECK(hex.contains(part));
  }
}

TEST_CASE("fiber graphs") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  FiberGraph g = fiber({0}, {p, p}, FiberMode::all_root_moves);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.connected());

  g = fiber({2}, {p, p}, FiberMode::all_root_moves);  // the vertex sum
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.connected());

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  g = fiber({1, 1}, {hex, hex}, FiberMode::all_root_moves);
  std::size_t brute = 0;
  for (const Vec& x : hex.lambda_points())
    for (const Vec& y : hex.lambda_points())
      if (add(x, y) == Vec{1, 1}) ++brute;
  CHECK(g.nodes.size() == brute);
  CHECK(g.connected());
  CHECK_THROWS(fiber({6, 6}, {hex, hex}, FiberMode::all_root_moves));

  auto capped = fiber_nodes({1, 1}, {hex, hex}, 2);
  CHECK_FALSE(capped);
}

TEST_CASE("winning restriction") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  FiberGraph all = fiber({0, 0}, {hex, hex}, FiberMode::all_root_moves);
  FiberGraph win = fiber({0, 0}, {hex, hex}, FiberMode::winning_restricted);
  CHECK(win.nodes.size() <= all.nodes.size());
  for (const LabeledTuple& t : win.nodes)
    for (const Vec& x : t) CHECK(game::is_winning(a2, x));
  CHECK(win.connected());
}

TEST_CASE("connectivity reports") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  ConnectivityReport rep = check_connected({p, p}, FiberMode::all_root_moves);
  CHECK(rep.fibers.size() == 3);
  CHECK(rep.ok());

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  CHECK(check_connected({hex, hex, hex}, FiberMode::adjacent_only).ok());
  OrthogonalSet p21 = OrthogonalSet::from_orbit(a2, {2, 1});
  CHECK(check_connected({hex, p21}, FiberMode::all_root_moves).ok());
  CHECK(check_connected({hex, p21}, FiberMode::winning_restricted).ok());
}

TEST_CASE("swap generation for equal polytopes") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  OrthogonalSet p = OrthogonalSet::from_orbit(b2, {1, 1});
  std::vector<OrthogonalSet> pp{p, p};
  for (const Vec& s : p.dilate(2).lambda_points()) {
    FiberGraph g = fiber(s, pp, FiberMode::all_root_moves);
    REQUIRE(g.connected());
    // Connectivity carries the transposed tuple to its mate.
    for (const LabeledTuple& t : g.nodes) {
      LabeledTuple rev{t[1], t[0]};
      CHECK(std::find(g.nodes.begin(), g.nodes.end(), rev) != g.nodes.end());
    }
  }
}

TEST_CASE("trichotomy for movable root pairs") {
  // For positive roots alpha != beta with <alpha, beta^vee> >= 1, alpha -
  // beta is again a root; with <alpha, beta^vee> <= -1, alpha + beta is.
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 2}, {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(fam, rank);
    for (const Root& alpha : rs.roots())
      for (const Root& beta : rs.roots()) {
        if (alpha.root == beta.root || alpha.root == neg(beta.root)) continue;
        Int p = rs.pair(rs.weight_of_root(alpha.root), beta);
        if (p >= 1) CHECK(rs.find_root(sub(alpha.root, beta.root)) >= 0);
        if (p <= -1) CHECK(rs.find_root(add(alpha.root, beta.root)) >= 0);
      }
  }
}

TEST_CASE("quadratic relations") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet seg = OrthogonalSet::from_orbit(a1, {1});
  CHECK(quadratic_relations(seg).empty());  // every degree-2 fiber has one unordered pair

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  auto rels = quadratic_relations(hex);
  std::size_t zero_fiber = 0;
  for (const auto& r : rels)
    if (r.sum == Vec{0, 0}) ++zero_fiber;
  CHECK(zero_fiber == 6);  // 4 unordered factorizations of 0 give C(4,2) pairs
  for (const auto& r : rels) {
    CHECK(add(r.lhs.first, r.lhs.second) == r.sum);
    CHECK(add(r.rhs.first, r.rhs.second) == r.sum);
  }

  auto tree = quadratic_relations(hex, true);
  CHECK(tree.size() < rels.size());
  std::size_t tree_zero = 0;
  for (const auto& r : tree)
    if (r.sum == Vec{0, 0}) ++tree_zero;
  CHECK(tree_zero == 3);  // spanning tree over 4 unordered factorizations
}
