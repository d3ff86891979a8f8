#include <doctest.h>

#include <algorithm>
#include <set>

#include "ample/polytope.hpp"
#include "oracles.hpp"

using namespace ample;

TEST_CASE("orbit construction") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p1 = OrthogonalSet::from_orbit(a1, {1});
  CHECK(p1.vertex(a1.identity()) == Vec{1});
  CHECK(p1.vertex(a1.simple_reflection(0)) == Vec{-1});
  CHECK(p1.special_ample());

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  std::set<Vec> verts(hex.vertices().begin(), hex.vertices().end());
  CHECK(verts.size() == 6);
  std::set<Vec> root_weights;
  for (const Root& beta : a2.roots()) root_weights.insert(a2.weight_of_root(beta.root));
  CHECK(verts == root_weights);  // orbit of rho = the six roots in weight coords

  OrthogonalSet p21 = OrthogonalSet::from_orbit(a2, {2, 1});
  std::set<Vec> v21(p21.vertices().begin(), p21.vertices().end());
  CHECK(v21.size() == 6);
  CHECK(p21.special_ample());

  CHECK_THROWS(OrthogonalSet::from_orbit(a2, {1, 0}));
  CHECK_THROWS(OrthogonalSet::from_orbit(a2, {0, 0}));
}

TEST_CASE("validation diagnostics") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet flat = OrthogonalSet::from_vertices(a1, {{1}, {1}});
  CHECK_FALSE(flat.is_ample());

  OrthogonalSet shifted = OrthogonalSet::from_vertices(a1, {{-1}, {-3}});
  CHECK(shifted.is_ample());
  CHECK_FALSE(shifted.is_special());
  CHECK_FALSE(shifted.validation().violations.empty());

  OrthogonalSet good = OrthogonalSet::from_vertices(a1, {{3}, {-3}});
  CHECK(good.special_ample());
}

TEST_CASE("membership") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  for (const Vec& v : hex.vertices()) CHECK(hex.contains(v));
  CHECK(hex.contains({0, 0}));
  CHECK_FALSE(hex.contains({2, 2}));
  CHECK_THROWS_AS(hex.contains({1, 0}), std::invalid_argument);  // wrong class mod iota(Y)
}

TEST_CASE("lattice points") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  CHECK(p.lambda_points() == std::vector<Vec>{{-1}, {1}});
  CHECK(p.dilate(2).lambda_points() == std::vector<Vec>{{-2}, {0}, {2}});

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  std::vector<Vec> pts = hex.lambda_points();
  CHECK(pts.size() == 7);  // the six roots plus the origin
  CHECK(std::find(pts.begin(), pts.end(), Vec{0, 0}) != pts.end());
  CHECK(hex.dilate(2).lambda_points().size() == 19);

  OrthogonalSet bad = OrthogonalSet::from_vertices(a1, {{-1}, {-3}});
  CHECK_THROWS(bad.lambda_points());
}

TEST_CASE("lattice points agree with the polygon oracle") {
  std::vector<OrthogonalSet> cases;
  RootSystem a2 = RootSystem::build(Family::A, 2);
  RootSystem b2 = RootSystem::build(Family::B, 2);
  RootSystem g2 = RootSystem::build(Family::G, 2);
  cases.push_back(OrthogonalSet::from_orbit(a2, {1, 1}));
  cases.push_back(OrthogonalSet::from_orbit(a2, {2, 1}).minkowski_sum(OrthogonalSet::from_orbit(a2, {1, 3})));
  cases.push_back(OrthogonalSet::from_orbit(a2, {2, 2}).translate({1, 1}));
  cases.push_back(OrthogonalSet::from_orbit(b2, {1, 1}));
  cases.push_back(OrthogonalSet::from_orbit(b2, {2, 3}));
  cases.push_back(OrthogonalSet::from_orbit(g2, {1, 1}));
  cases.push_back(OrthogonalSet::from_orbit(g2, {1, 2}).dilate(2));
  for (const OrthogonalSet& p : cases) {
    REQUIRE(p.special_ample());
    CHECK(p.lambda_points() == oracle::polygon_lambda(p));
    for (const Vec& x : oracle::polygon_lambda(p)) CHECK(p.contains(x));
  }
}

TEST_CASE("sum dilate translate") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  CHECK(p.dilate(1) == p);
  CHECK(p.minkowski_sum(p) == p.dilate(2));
  CHECK_THROWS(p.dilate(0));

  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  OrthogonalSet moved = hex.translate({1, 0});
  CHECK(moved.vertex(a2.identity()) == Vec{2, 1});
  CHECK(moved.is_ample());

  RootSystem b2 = RootSystem::build(Family::B, 2);
  CHECK_THROWS(hex.minkowski_sum(OrthogonalSet::from_orbit(b2, {1, 1})));
}

TEST_CASE("minkowski lambda inclusion") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  OrthogonalSet p = OrthogonalSet::from_orbit(b2, {1, 2});
  OrthogonalSet q = OrthogonalSet::from_orbit(b2, {2, 1});
  OrthogonalSet s = p.minkowski_sum(q);
  std::vector<Vec> sl = s.lambda_points();
  for (const Vec& x : p.lambda_points())
    for (const Vec& y : q.lambda_points())
      CHECK(std::binary_search(sl.begin(), sl.end(), add(x, y)));
}

TEST_CASE("vertex extremality and W-stability") {
  RootSystem g2 = RootSystem::build(Family::G, 2);
  OrthogonalSet p = OrthogonalSet::from_orbit(g2, {2, 1});
  std::vector<Vec> pts = p.lambda_points();
  for (std::size_t w = 0; w < g2.weyl_size(); ++w) {
    int wi = static_cast<int>(w);
    CHECK(p.contains(p.vertex(wi)));
    for (int i = 0; i < g2.rank(); ++i) {
      Vec e(g2.rank(), 0);
      e[i] = 1;
      Vec step = g2.weight_of_root(g2.act_root(wi, e));
      CHECK_FALSE(p.contains(add(p.vertex(wi), step)));
    }
    // The orbit polytope's point set is W-stable.
    std::vector<Vec> imaged;
    for (const Vec& x : pts) imaged.push_back(g2.act(wi, x));
    std::sort(imaged.begin(), imaged.end());
    CHECK(imaged == pts);
  }
}

TEST_CASE("progressive roots") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  OrthogonalSet hex = OrthogonalSet::from_orbit(a2, {1, 1});
  CHECK(hex.progressive_root({0, 0}, a2.identity()) == 0);  // tie-break: smallest index
  CHECK(hex.is_progressive({0, 0}, a2.identity(), 0));
  CHECK(hex.is_progressive({0, 0}, a2.identity(), 1));
  CHECK_THROWS(hex.progressive_root({1, 1}, a2.identity()));  // the vertex itself

  // Non-dominant branch: a coordinate at -1 names its own index.
  CHECK(hex.progressive_root({-1, 2}, a2.identity()) == 0);
  CHECK(hex.progressive_root({2, -1}, a2.identity()) == 1);

  // B2: when only the short root fits, the long one is not progressive.
  RootSystem b2 = RootSystem::build(Family::B, 2);
  OrthogonalSet p = OrthogonalSet::from_orbit(b2, {1, 1});
  int short_idx = b2.roots()[b2.simple_root_index(0)].length == LengthClass::short_root ? 0 : 1;
  Vec mu = p.vertex(b2.identity());
  Vec x = sub(mu, b2.weight_of_root_index(b2.simple_root_index(short_idx)));
  if (b2.is_dominant(x) && p.contains(x)) {
    CHECK(p.progressive_root(x, b2.identity()) == short_idx);
    CHECK_FALSE(p.is_progressive(x, b2.identity(), 1 - short_idx));
  }

  // Minimum length wins when both fit.
  RootSystem g2 = RootSystem::build(Family::G, 2);
  OrthogonalSet q = OrthogonalSet::from_orbit(g2, {2, 2});
  int g_short = g2.roots()[g2.simple_root_index(0)].length == LengthClass::short_root ? 0 : 1;
  CHECK(q.progressive_root({0, 0}, g2.identity()) == g_short);
}

TEST_CASE("cayley generators") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  OrthogonalSet p = OrthogonalSet::from_orbit(a1, {1});
  OrthogonalSet q = OrthogonalSet::from_orbit(a1, {3});
  auto tagged = cayley_lambda({p, q});
  CHECK(tagged.size() == 6);  // 2 + 4 interval points
  auto same = cayley_lambda({p, p});
  CHECK(same.size() == 4);  // tags keep equal polytopes apart
  auto single = cayley_lambda({q});
  for (auto& [y, idx] : single) CHECK(idx == 0);
  CHECK_THROWS(cayley_lambda({}));
}
