#include "ample/diagsplit.hpp"

#include <algorithm>
#include <cmath>

namespace ample {

bool in_interior(const RootSystem& rs, const ScaledPoint& u) {
  if (u.q < 2) throw std::invalid_argument("q must be >= 2");
  // <u, w omega_i> = (w^{-1} u)_i in root coordinates, and w^{-1} ranges
  // over all of W; strict bounds become |numerator| < q.
  for (std::size_t w = 0; w < rs.weyl_size(); ++w) {
    Vec img = rs.act_root(static_cast<int>(w), u.numerators);
    for (Int x : img)
      if (x <= -u.q || x >= u.q) return false;
  }
  return true;
}

SplitReport is_diagonally_split(const RootSystem& rs, Int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  int n = rs.rank();
  double classes = std::pow(static_cast<double>(q), n);
  double candidates = std::pow(static_cast<double>(2 * q - 1), n);
  if (classes > 1e8 || candidates > 1e8)
    throw std::invalid_argument("diagonal-split search too large (q^n guard exceeded)");

  SplitReport rep;
  rep.class_count = 1;
  for (int i = 0; i < n; ++i) rep.class_count *= static_cast<std::size_t>(q);
  rep.witnesses.assign(rep.class_count, std::nullopt);

  auto class_index = [&](const Vec& num) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>(((num[i] % q) + q) % q);
    return idx;
  };

  // Lexicographic odometer from -(q-1); the first interior hit per class is
  // the lexicographically minimal witness.
  Vec num(n, -(q - 1));
  std::size_t covered = 0;
  for (;;) {
    if (in_interior(rs, {num, q})) {
      std::size_t idx = class_index(num);
      if (!rep.witnesses[idx]) {
        rep.witnesses[idx] = num;
        ++covered;
      }
    }
    int i = n - 1;
    while (i >= 0 && num[i] == q - 1) num[i--] = -(q - 1);
    if (i < 0) break;
    ++num[i];
  }

  rep.split = covered == rep.class_count;
  if (!rep.split) {
    Vec cls(n, 0);
    for (std::size_t idx = 0; idx < rep.class_count; ++idx) {
      if (!rep.witnesses[idx]) {
        Vec c(n);
        std::size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
          c[i] = static_cast<Int>(rem % static_cast<std::size_t>(q));
          rem /= static_cast<std::size_t>(q);
        }
        rep.uncovered_classes.push_back(std::move(c));
      }
    }
  }
  return rep;
}

std::vector<TableRow> reproduce_table(Int q_min, Int q_max, const std::vector<std::string>& systems) {
  std::vector<TableRow> rows;
  for (const std::string& sys : systems) {
    Family fam = family_from_char(sys.at(0));
    int rank = std::stoi(sys.substr(1));
    if (fam == Family::E) throw std::invalid_argument("E-type refused for the exhaustive split search");
    RootSystem rs = RootSystem::build(fam, rank);
    for (Int q = q_min; q <= q_max; ++q) {
      TableRow row;
      row.system = sys;
      row.q = q;
      row.split = is_diagonally_split(rs, q).split;
      if (sys == "A1" || sys == "A2")
        row.expected = true;
      else if (sys == "A3" || sys == "B2")
        row.expected = q % 2 == 1;
      else
        row.expected = false;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Rational verify_witness(const RootSystem& rs, const ScaledPoint& z, const std::vector<int>& word,
                        int coweight_index) {
  if (coweight_index < 1 || coweight_index > rs.rank()) throw std::invalid_argument("coweight index out of range");
  Vec num = z.numerators;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("reflection index out of range");
    num = rs.act_root(rs.simple_reflection(i - 1), num);
  }
  return Rational(num[coweight_index - 1], z.q);
}

}  // namespace ample
