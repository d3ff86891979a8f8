#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ample/normality.hpp"
#include "ample/numbers_game.hpp"
#include "ample/polytope.hpp"

namespace ample {

using LabeledTuple = std::vector<Vec>;

enum class FiberMode { all_root_moves, adjacent_only, winning_restricted };

struct RootMoveEdge {
  int from = 0, to = 0;   // node indices
  int i = 0, j = 0;       // components
  int root = 0;           // index into Delta; beta and -beta identified
};

/// All tuples in Lambda(P_1) x ... x Lambda(P_m) with a fixed sum, plus the
/// valid root moves between them.
struct FiberGraph {
  std::vector<LabeledTuple> nodes;
  std::vector<RootMoveEdge> edges;
  FiberMode mode = FiberMode::all_root_moves;

  bool connected() const;
  // Two node indices in distinct components, when disconnected.
  std::optional<std::pair<int, int>> disconnection_witness() const;
};

/// Replaces t_i by t_i + beta and t_j by t_j - beta; nullopt when either
/// endpoint leaves its Lambda set.
std::optional<LabeledTuple> root_move(const LabeledTuple& t, int i, int j, int root_index,
                                      const std::vector<OrthogonalSet>& polytopes);

struct SimpleMove {
  int j = 0, k = 0;  // alpha moves from component k to component j
  int simple = 0;
};

/// All (j, k, alpha simple) with <t_j, alpha^vee> <= -1 and
/// <t_k, alpha^vee> >= 1.
std::vector<SimpleMove> simple_moves(const RootSystem& rs, const LabeledTuple& t);

/// Enumerates the fiber over `sum`; node_cap (0 = unlimited) stops the
/// enumeration early and returns nullopt when exceeded.
FiberGraph fiber(const Vec& sum, const std::vector<OrthogonalSet>& polytopes, FiberMode mode);
std::optional<std::vector<LabeledTuple>> fiber_nodes(const Vec& sum,
                                                     const std::vector<OrthogonalSet>& polytopes,
                                                     std::size_t node_cap = 0);

struct FiberStats {
  Vec sum;
  std::size_t nodes = 0, edges = 0;
  bool connected = true;
};

struct ConnectivityReport {
  std::vector<FiberStats> fibers;
  std::size_t disconnected = 0;
  std::optional<Vec> witness_sum;
  std::optional<std::pair<LabeledTuple, LabeledTuple>> witness;
  bool ok() const { return disconnected == 0; }
};

/// Fiber connectivity over every sum in Lambda(P_1 + ... + P_m) (winning
/// sums only in winning_restricted mode).  Fibers larger than node_cap
/// (0 = unlimited) are skipped.
ConnectivityReport check_connected(const std::vector<OrthogonalSet>& polytopes, FiberMode mode,
                                   std::size_t node_cap = 0);

struct QuadraticRelation {
  Vec sum;
  std::pair<Vec, Vec> lhs, rhs;  // unordered pairs {x,y}, {x',y'} with equal sum
};

/// Degree-two relations of S_P: all pairs of unordered factorizations of
/// each sum in Lambda(2P), or only a BFS spanning tree per fiber.
std::vector<QuadraticRelation> quadratic_relations(const OrthogonalSet& p, bool spanning_tree = false);

}  // namespace ample
