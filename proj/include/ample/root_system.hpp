#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ample/common.hpp"

namespace ample {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_char(Family f);

enum class LengthClass { simply_laced, short_root, long_root };

/// One element of Delta: simple-root coordinates, coroot coordinates of
/// beta^vee in the basis of simple coroots, and the length class.
struct Root {
  Vec root;
  Vec coroot;
  LengthClass length = LengthClass::simply_laced;
  bool positive = false;
};

/// Group element as a shortest witness word plus its integer action
/// matrices (row-major, n*n) on weight and root coordinates.
struct WeylElement {
  std::vector<int> word;
  Vec weight_mat;
  Vec root_mat;
  int inverse = -1;
  std::vector<int> right_prod;  // index of w * s_i
};

/// Immutable after construction; safe for shared concurrent reads.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank, std::size_t group_guard = 51840);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // c[i][j] = <alpha_i, alpha_j^vee>, Bourbaki labeling.
  const std::vector<Vec>& cartan() const { return cartan_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<int>& positive_roots() const { return positive_; }
  int simple_root_index(int i) const { return simple_root_index_[i]; }
  int find_root(const Vec& root_coords) const;  // -1 if not a root

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  std::size_t weyl_size() const { return weyl_.size(); }
  int identity() const { return 0; }
  int simple_reflection(int i) const { return simple_refl_[i]; }
  int mul_simple(int w, int i) const { return weyl_[w].right_prod[i]; }
  int inverse(int w) const { return weyl_[w].inverse; }

  // <x, beta^vee> for a Weight x in fundamental-weight coordinates.
  Int pair(const Vec& weight, const Root& beta) const;
  Int pair_simple(const Vec& weight, int i) const { return weight[i]; }

  Vec act(int w, const Vec& weight) const;
  Vec act_root(int w, const Vec& root_coords) const;
  Vec act_simple(int i, const Vec& weight) const;  // s_i on weight coords

  // Reflection descent at the smallest negative coordinate; returns (w, d)
  // with d dominant and x = act(w, d).
  std::pair<int, Vec> dominant_representative(const Vec& weight) const;

  // iota of an element of Y: weight coords of sum b_i alpha_i, i.e. C^T b.
  Vec weight_of_root(const Vec& root_coords) const;
  Vec weight_of_root_index(int root_index) const { return weight_of_root(roots_[root_index].root); }

  // Solve C^T t = weight exactly; nullopt when the weight is not in iota(Y).
  std::optional<Vec> root_coords_of_weight(const Vec& weight) const;

  // adj(C^T) * weight; divide by cartan_det() for the true root coordinates.
  // Signs agree with the exact solution since cartan_det() > 0.
  Vec scaled_root_coords(const Vec& weight) const;
  Int cartan_det() const { return det_; }

  bool is_dominant(const Vec& weight) const { return all_nonneg(weight); }

 private:
  RootSystem() = default;
  void build_roots();
  void build_weyl(std::size_t group_guard);

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<Vec> cartan_;
  std::vector<Root> roots_;
  std::vector<int> positive_;
  std::vector<int> simple_root_index_;
  std::unordered_map<Vec, int, VecHash> root_index_;
  std::vector<WeylElement> weyl_;
  std::vector<int> simple_refl_;
  std::vector<Vec> adj_;  // adjugate of C^T, rows
  Int det_ = 1;
};

}  // namespace ample
