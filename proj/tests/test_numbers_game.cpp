#include <doctest.h>

#include "ample/numbers_game.hpp"
#include "oracles.hpp"

using namespace ample;

TEST_CASE("fire") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  RootSystem a1 = RootSystem::build(Family::A, 1);
  CHECK(game::fire(a2, {-1, 0}, 0) == Vec{1, -1});
  CHECK(game::fire(a1, {-1}, 0) == Vec{1});
  CHECK(game::fire(a2, {-1, -1}, 0) == Vec{1, -2});
  CHECK_THROWS(game::fire(a2, {0, -1}, 0));
  CHECK_THROWS(game::fire(a2, {2, -1}, 0));
}

TEST_CASE("winning criterion") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(game::is_winning(a2, {-1, 0}));
  CHECK_FALSE(game::is_winning(a2, {-1, -1}));
  CHECK(game::is_winning(a2, {0, 3}));
  CHECK(game::is_winning(a2, {5, 0}));
}

TEST_CASE("play fixtures") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  game::PlayResult r = game::play(a2, {-1, 0}, game::Mode::cutoff, game::Strategy::min_index);
  CHECK(r.outcome == game::Outcome::won);
  CHECK(r.final == Vec{0, 1});
  CHECK(r.firing_sequence.size() == 2);

  r = game::play(a2, {-1, -1}, game::Mode::cutoff, game::Strategy::min_index);
  CHECK(r.outcome == game::Outcome::lost);
  CHECK(r.final == Vec{1, -2});

  r = game::play(a2, {2, 3}, game::Mode::cutoff, game::Strategy::min_index);
  CHECK(r.outcome == game::Outcome::won);
  CHECK(r.firing_sequence.empty());

  CHECK_THROWS(game::play(a2, {-2, 0}, game::Mode::cutoff, game::Strategy::min_index));
  CHECK_THROWS(game::play(a2, {-1, 0}, game::Mode::cutoff, game::Strategy::min_index, 0, 0));
}

TEST_CASE("cutoff fires only amplitude -1 on integer configurations") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  for (Int a = -1; a <= 2; ++a)
    for (Int b = -1; b <= 2; ++b) {
      game::PlayResult r = game::play(b2, {a, b}, game::Mode::cutoff, game::Strategy::random, 42);
      Vec v{a, b};
      for (int i : r.firing_sequence) {
        CHECK(v[i] == -1);
        v = game::fire(b2, v, i);
      }
      CHECK(v == r.final);
      // Each firing adds iota(alpha_i); the difference stays in iota(Y).
      CHECK(b2.root_coords_of_weight(sub(r.final, Vec{a, b})));
      // The minus-one mode coincides with cutoff here.
      game::PlayResult m = game::play(b2, {a, b}, game::Mode::minus_one, game::Strategy::random, 42);
      CHECK(m.outcome == r.outcome);
      CHECK(m.final == r.final);
    }
}

TEST_CASE("strong convergence") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  game::ConvergenceReport rep = game::verify_strong_convergence(a2, {-1, 0}, 20, 5);
  CHECK(rep.consistent);
  CHECK(rep.terminated_runs == 20);
  CHECK(*rep.final == Vec{0, 1});
  CHECK(*rep.moves == 2);

  rep = game::verify_strong_convergence(a2, {3, 1}, 5, 5);
  CHECK(rep.consistent);
  CHECK(*rep.moves == 0);

  RootSystem a3 = RootSystem::build(Family::A, 3);
  oracle::PlayTree tree = oracle::plain_play_tree(a3, {-1, 0, -1});
  REQUIRE(tree.winning);
  REQUIRE(tree.outcomes.size() == 1);  // the oracle itself sees one outcome
  rep = game::verify_strong_convergence(a3, {-1, 0, -1}, 20, 5);
  CHECK(rep.consistent);
  CHECK(rep.terminated_runs == 20);
  CHECK(*rep.final == tree.outcomes.begin()->first);
  CHECK(*rep.moves == tree.outcomes.begin()->second);
}

TEST_CASE("exhaustive play tree vs oracle") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}}) {
    RootSystem rs = RootSystem::build(fam, rank);
    Vec v(rank, -2);
    for (;;) {
      if (game::allowed(v)) {
        game::ExhaustiveResult ex = game::exhaustive_cutoff(rs, v);
        oracle::PlayTree tree = oracle::play_tree(rs, v);
        CHECK(ex.winning == tree.winning);
        CHECK(ex.winning == game::is_winning(rs, v));
        CHECK(ex.consistent);
        if (tree.winning) {
          CHECK(tree.outcomes.size() == 1);
          CHECK(ex.final == tree.outcomes.begin()->first);
          CHECK(ex.moves == tree.outcomes.begin()->second);
        }
      } else {
        // An amplitude below the cutoff is immediately lost and never
        // satisfies the positive-root criterion.
        CHECK_FALSE(game::is_winning(rs, v));
      }
      int i = rank - 1;
      while (i >= 0 && v[i] == 2) v[i--] = -2;
      if (i < 0) break;
      ++v[i];
    }
  }
}

TEST_CASE("plain mode terminates on winning starts") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  game::PlayResult r = game::play(a2, {-3, 1}, game::Mode::plain, game::Strategy::min_index);
  CHECK(r.outcome == game::Outcome::won);
  CHECK(a2.is_dominant(r.final));
}
