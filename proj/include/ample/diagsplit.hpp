#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ample/root_system.hpp"

namespace ample {

/// u = (1/q) sum numerators_i alpha_i in Y tensor Q, simple-root coords.
struct ScaledPoint {
  Vec numerators;
  Int q = 2;
};

/// True iff |<u, w omega_i>| < 1 for all w in W and all i, i.e. u lies in
/// the open region cut out by the Weyl orbit of the fundamental coweights.
bool in_interior(const RootSystem& rs, const ScaledPoint& u);

struct SplitReport {
  bool split = false;
  std::vector<Vec> uncovered_classes;             // numerators mod q
  std::vector<std::optional<Vec>> witnesses;      // by class index, lex-min numerators
  std::size_t class_count = 0;
};

/// Enumerates all candidates with numerators in [-(q-1), q-1]^n (complete:
/// the identity already forces |u_i| < 1) and buckets them by residue class.
SplitReport is_diagonally_split(const RootSystem& rs, Int q);

struct TableRow {
  std::string system;
  Int q = 0;
  bool split = false;
  bool expected = false;
  bool matches() const { return split == expected; }
};

/// The classification grid: A1, A2 split for all q; A3, B2 iff q odd;
/// A4, B3, C3, D4, G2 never.
std::vector<TableRow> reproduce_table(Int q_min = 2, Int q_max = 7,
                                      const std::vector<std::string>& systems = {
                                          "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"});

/// <w z, omega_i> as an exact rational, with w given as a word in simple
/// reflections (1-based, leftmost applied last).
Rational verify_witness(const RootSystem& rs, const ScaledPoint& z, const std::vector<int>& word,
                        int coweight_index);

}  // namespace ample
