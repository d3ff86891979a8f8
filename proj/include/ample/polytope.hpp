#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ample/root_system.hpp"

namespace ample {

struct ValidationReport {
  bool orthogonal = true;
  bool ample = true;
  bool special = true;
  std::vector<std::string> violations;
};

/// A polytope stored as its vertex map: chamber sigma_w = w.sigma_0 maps to
/// the vertex mu_sigma in weight coordinates.  Never an inequality system;
/// membership goes through the per-chamber cone test.
class OrthogonalSet {
 public:
  /// mu_{sigma_w} = w.lambda for strictly dominant lambda; special ample by
  /// construction.
  static OrthogonalSet from_orbit(const RootSystem& rs, const Vec& lambda);

  /// Explicit vertex map indexed by Weyl element; validated, not rejected,
  /// so diagnostics stay available on invalid input.
  static OrthogonalSet from_vertices(const RootSystem& rs, std::vector<Vec> mu);

  const RootSystem& rs() const { return *rs_; }
  const Vec& vertex(int w) const { return mu_[w]; }
  const std::vector<Vec>& vertices() const { return mu_; }
  bool is_ample() const { return report_.ample; }
  bool is_special() const { return report_.special; }
  const ValidationReport& validation() const { return report_; }
  bool special_ample() const { return report_.ample && report_.special; }

  OrthogonalSet minkowski_sum(const OrthogonalSet& other) const;
  OrthogonalSet dilate(Int m) const;
  OrthogonalSet translate(const Vec& nu) const;

  /// Lattice membership: x must be congruent to the vertices mod iota(Y).
  bool contains(const Vec& x) const;

  /// Lambda(P), sorted lexicographically; requires special ample.
  std::vector<Vec> lambda_points() const;

  /// Index of the simple root (in the chamber's own frame) that is
  /// P-progressive for x; chamber given as a Weyl element index.
  int progressive_root(const Vec& x, int chamber) const;

  /// True when simple root i is P-progressive for x relative to `chamber`.
  bool is_progressive(const Vec& x, int chamber, int i) const;

  friend bool operator==(const OrthogonalSet& a, const OrthogonalSet& b) { return a.mu_ == b.mu_; }

 private:
  OrthogonalSet(const RootSystem& rs, std::vector<Vec> mu);
  void validate();
  void require_special_ample(const char* what) const;
  // Root coordinates (scaled by cartan_det) of w^{-1}(mu_w - x); the sign
  // pattern is all that membership needs.
  Vec chamber_gap(int w, const Vec& x) const;

  const RootSystem* rs_;
  std::vector<Vec> mu_;
  ValidationReport report_;
};

/// Degree-one generators of the Cayley sum semigroup: Lambda(P_i) tagged i.
std::vector<std::pair<Vec, int>> cayley_lambda(const std::vector<OrthogonalSet>& polytopes);

/// Vertexwise Minkowski sum of a nonempty list.
OrthogonalSet minkowski_sum(const std::vector<OrthogonalSet>& polytopes);

}  // namespace ample
