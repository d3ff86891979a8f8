#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ample/root_system.hpp"

namespace ample::game {

/// Amplitudes of a configuration, identified with a Weight via iota.
using Configuration = Vec;

enum class Mode { cutoff, plain, minus_one };
enum class Strategy { min_index, random };
enum class Outcome { won, lost, diverged };

struct PlayResult {
  Outcome outcome = Outcome::won;
  Configuration final;
  std::vector<int> firing_sequence;
};

bool allowed(const Configuration& v);   // all amplitudes >= -1
bool terminal(const Configuration& v);  // all amplitudes >= 0

/// Fires vertex i; rejects nonnegative amplitudes.
Configuration fire(const RootSystem& rs, const Configuration& v, int i);

/// Winning criterion: <x, alpha^vee> >= -1 for every positive root alpha,
/// where v = iota(x).
bool is_winning(const RootSystem& rs, const Configuration& v);

PlayResult play(const RootSystem& rs, Configuration v, Mode mode, Strategy strategy,
                std::uint64_t seed = 0, int max_steps = 10000);

struct ConvergenceReport {
  bool consistent = true;
  int terminated_runs = 0;
  std::optional<Configuration> final;
  std::optional<int> moves;
  // Witness pair of firing sequences when runs disagree.
  std::vector<int> sequence_a, sequence_b;
};

/// Plays `trials` random plain-game strategies from v and compares all
/// terminating runs.
ConvergenceReport verify_strong_convergence(const RootSystem& rs, const Configuration& v, int trials,
                                            std::uint64_t seed, int max_steps = 10000);

struct ExhaustiveResult {
  bool winning = false;
  Configuration final;  // meaningful when winning
  int moves = 0;
  // False if some play tree mixes outcomes or disagrees on final/moves,
  // which would falsify strong convergence under the cutoff.
  bool consistent = true;
};

/// Memoized search over the full cutoff play tree from v.
ExhaustiveResult exhaustive_cutoff(const RootSystem& rs, const Configuration& v);

}  // namespace ample::game
