#include "ample/numbers_game.hpp"

#include <random>
#include <unordered_map>

namespace ample::game {

bool allowed(const Configuration& v) {
  for (Int x : v)
    if (x < -1) return false;
  return true;
}

bool terminal(const Configuration& v) { return all_nonneg(v); }

Configuration fire(const RootSystem& rs, const Configuration& v, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("vertex index out of range");
  if (v[i] >= 0) throw std::invalid_argument("only negative-amplitude vertices may be fired");
  Configuration r = v;
  Int vi = v[i];
  for (int j = 0; j < rs.rank(); ++j) r[j] -= rs.cartan()[i][j] * vi;
  return r;
}

bool is_winning(const RootSystem& rs, const Configuration& v) {
  // <x, alpha^vee> >= -1 for every positive root; the configuration is
  // iota(x), so the pairing contracts with the coroot coordinates.
  for (int ri : rs.positive_roots()) {
    const Vec& a = rs.roots()[ri].coroot;
    Int dot = 0;
    for (int i = 0; i < rs.rank(); ++i) dot += a[i] * v[i];
    if (dot < -1) return false;
  }
  return true;
}

PlayResult play(const RootSystem& rs, Configuration v, Mode mode, Strategy strategy, std::uint64_t seed,
                int max_steps) {
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  if (mode == Mode::cutoff && !allowed(v)) throw std::invalid_argument("cutoff game requires an allowed start");

  std::mt19937_64 rng(seed);
  PlayResult res;
  for (int step = 0; step <= max_steps; ++step) {
    if (mode == Mode::cutoff && !allowed(v)) {
      res.outcome = Outcome::lost;
      res.final = std::move(v);
      return res;
    }
    std::vector<int> candidates;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mode == Mode::minus_one ? v[i] == -1 : v[i] < 0) candidates.push_back(i);
    }
    if (terminal(v)) {
      res.outcome = Outcome::won;
      res.final = std::move(v);
      return res;
    }
    if (candidates.empty()) {  // minus_one mode stuck below the cutoff
      res.outcome = Outcome::lost;
      res.final = std::move(v);
      return res;
    }
    if (step == max_steps) break;
    int pick = candidates.front();
    if (strategy == Strategy::random && candidates.size() > 1)
      pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    v = fire(rs, v, pick);
    res.firing_sequence.push_back(pick);
  }
  res.outcome = Outcome::diverged;
  res.final = std::move(v);
  return res;
}

ConvergenceReport verify_strong_convergence(const RootSystem& rs, const Configuration& v, int trials,
                                            std::uint64_t seed, int max_steps) {
  ConvergenceReport rep;
  std::vector<int> first_sequence;
  for (int t = 0; t < trials; ++t) {
    PlayResult r = play(rs, v, Mode::plain, Strategy::random, seed + static_cast<std::uint64_t>(t), max_steps);
    if (r.outcome != Outcome::won) continue;
    ++rep.terminated_runs;
    int moves = static_cast<int>(r.firing_sequence.size());
    if (!rep.final) {
      rep.final = r.final;
      rep.moves = moves;
      first_sequence = r.firing_sequence;
    } else if (*rep.final != r.final || *rep.moves != moves) {
      rep.consistent = false;
      rep.sequence_a = first_sequence;
      rep.sequence_b = r.firing_sequence;
      return rep;
    }
  }
  return rep;
}

namespace {

ExhaustiveResult exhaustive_rec(const RootSystem& rs, const Configuration& v,
                                std::unordered_map<Vec, ExhaustiveResult, VecHash>& memo, bool& consistent) {
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  ExhaustiveResult res;
  if (!allowed(v)) {
    res.winning = false;
  } else if (terminal(v)) {
    res.winning = true;
    res.final = v;
    res.moves = 0;
  } else {
    bool any_win = false, any_loss = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[i] >= 0) continue;
      ExhaustiveResult child = exhaustive_rec(rs, fire(rs, v, i), memo, consistent);
      if (child.winning) {
        if (!any_win) {
          res.final = child.final;
          res.moves = child.moves + 1;
          any_win = true;
        } else if (res.final != child.final || res.moves != child.moves + 1) {
          consistent = false;
        }
      } else {
        any_loss = true;
      }
    }
    if (any_win && any_loss) consistent = false;  // would contradict strong convergence
    res.winning = any_win;
  }
  memo.emplace(v, res);
  return res;
}

}  // namespace

ExhaustiveResult exhaustive_cutoff(const RootSystem& rs, const Configuration& v) {
  std::unordered_map<Vec, ExhaustiveResult, VecHash> memo;
  bool consistent = true;
  ExhaustiveResult res = exhaustive_rec(rs, v, memo, consistent);
  res.consistent = consistent;
  return res;
}

}  // namespace ample::game
