#include "ample/polytope.hpp"

#include <algorithm>
#include <set>

namespace ample {

namespace {

int length_order(const RootSystem& rs, int simple_index) {
  return rs.roots()[rs.simple_root_index(simple_index)].length == LengthClass::long_root ? 1 : 0;
}

void check_same_system(const RootSystem& a, const RootSystem& b) {
  if (a.family() != b.family() || a.rank() != b.rank())
    throw std::invalid_argument("root-system mismatch between polytopes");
}

}  // namespace

OrthogonalSet::OrthogonalSet(const RootSystem& rs, std::vector<Vec> mu) : rs_(&rs), mu_(std::move(mu)) {
  if (mu_.size() != rs.weyl_size()) throw std::invalid_argument("vertex map must be total on W");
  validate();
}

OrthogonalSet OrthogonalSet::from_orbit(const RootSystem& rs, const Vec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw std::invalid_argument("dimension mismatch");
  for (Int c : lambda)
    if (c < 1) throw std::invalid_argument("orbit polytope requires strictly dominant lambda");
  std::vector<Vec> mu(rs.weyl_size());
  for (std::size_t w = 0; w < rs.weyl_size(); ++w) mu[w] = rs.act(static_cast<int>(w), lambda);
  return OrthogonalSet(rs, std::move(mu));
}

OrthogonalSet OrthogonalSet::from_vertices(const RootSystem& rs, std::vector<Vec> mu) {
  return OrthogonalSet(rs, std::move(mu));
}

void OrthogonalSet::validate() {
  const RootSystem& rs = *rs_;
  report_ = ValidationReport{};
  for (std::size_t w = 0; w < rs.weyl_size(); ++w) {
    if (mu_[w].size() != static_cast<std::size_t>(rs.rank()))
      throw std::invalid_argument("vertex dimension mismatch");
    for (int i = 0; i < rs.rank(); ++i) {
      int nb = rs.mul_simple(static_cast<int>(w), i);
      Vec diff = sub(mu_[w], mu_[nb]);
      Vec e(rs.rank(), 0);
      e[i] = 1;
      Vec wall = rs.weight_of_root(rs.act_root(static_cast<int>(w), e));  // iota(w alpha_i)
      // diff must equal r * wall for an integer r.
      int k = 0;
      while (wall[k] == 0) ++k;
      if (diff[k] % wall[k] != 0) {
        report_.orthogonal = report_.ample = report_.special = false;
        report_.violations.push_back("wall (w=" + std::to_string(w) + ", i=" + std::to_string(i + 1) +
                                     "): difference not an integer multiple of the wall root");
        continue;
      }
      Int r = diff[k] / wall[k];
      if (diff != scale(wall, r)) {
        report_.orthogonal = report_.ample = report_.special = false;
        report_.violations.push_back("wall (w=" + std::to_string(w) + ", i=" + std::to_string(i + 1) +
                                     "): difference not parallel to the wall root");
        continue;
      }
      if (r <= 0) {
        report_.ample = false;
        report_.violations.push_back("wall (w=" + std::to_string(w) + ", i=" + std::to_string(i + 1) +
                                     "): coefficient r=" + std::to_string(r) + " not positive");
      }
    }
    if (!rs.is_dominant(rs.act(rs.inverse(static_cast<int>(w)), mu_[w]))) {
      report_.special = false;
      report_.violations.push_back("chamber w=" + std::to_string(w) + ": vertex not chamber-dominant");
    }
  }
}

void OrthogonalSet::require_special_ample(const char* what) const {
  if (!special_ample()) throw std::invalid_argument(std::string(what) + " requires a special ample polytope");
}

OrthogonalSet OrthogonalSet::minkowski_sum(const OrthogonalSet& other) const {
  check_same_system(*rs_, *other.rs_);
  std::vector<Vec> mu(mu_.size());
  for (std::size_t w = 0; w < mu_.size(); ++w) mu[w] = add(mu_[w], other.mu_[w]);
  return OrthogonalSet(*rs_, std::move(mu));
}

OrthogonalSet OrthogonalSet::dilate(Int m) const {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<Vec> mu(mu_.size());
  for (std::size_t w = 0; w < mu_.size(); ++w) mu[w] = scale(mu_[w], m);
  return OrthogonalSet(*rs_, std::move(mu));
}

OrthogonalSet OrthogonalSet::translate(const Vec& nu) const {
  if (nu.size() != mu_[0].size()) throw std::invalid_argument("dimension mismatch");
  std::vector<Vec> mu(mu_.size());
  for (std::size_t w = 0; w < mu_.size(); ++w) mu[w] = add(mu_[w], nu);
  return OrthogonalSet(*rs_, std::move(mu));
}

Vec OrthogonalSet::chamber_gap(int w, const Vec& x) const {
  return rs_->scaled_root_coords(rs_->act(rs_->inverse(w), sub(mu_[w], x)));
}

bool OrthogonalSet::contains(const Vec& x) const {
  if (x.size() != mu_[0].size()) throw std::invalid_argument("dimension mismatch");
  if (!rs_->root_coords_of_weight(sub(mu_[0], x)))
    throw std::invalid_argument("point not congruent to the vertices mod iota(Y)");
  for (std::size_t w = 0; w < mu_.size(); ++w)
    if (!all_nonneg(chamber_gap(static_cast<int>(w), x))) return false;
  return true;
}

std::vector<Vec> OrthogonalSet::lambda_points() const {
  require_special_ample("lambda_points");
  const RootSystem& rs = *rs_;
  int n = rs.rank();
  std::set<Vec> points;
  for (std::size_t w = 0; w < mu_.size(); ++w) {
    int wi = static_cast<int>(w);
    Vec nu = rs.act(rs.inverse(wi), mu_[w]);  // chamber-dominant by (dagger)
    // Bounding box: per-coordinate max of the root-coordinate gaps to all
    // other vertices; every chamber-dominant point of P lies inside.
    Vec bound(n, 0);
    for (std::size_t v = 0; v < mu_.size(); ++v) {
      Vec gap = *rs.root_coords_of_weight(rs.act(rs.inverse(wi), sub(mu_[w], mu_[v])));
      for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], gap[i]);
    }
    Vec c(n, 0);
    for (;;) {
      Vec eta = sub(nu, rs.weight_of_root(c));
      if (rs.is_dominant(eta)) points.insert(rs.act(wi, eta));
      int i = 0;
      while (i < n && c[i] == bound[i]) c[i++] = 0;
      if (i == n) break;
      ++c[i];
    }
  }
  return {points.begin(), points.end()};
}

bool OrthogonalSet::is_progressive(const Vec& x, int chamber, int i) const {
  const RootSystem& rs = *rs_;
  Vec nu = rs.act(rs.inverse(chamber), x);
  Vec top = rs.act(rs.inverse(chamber), mu_[chamber]);
  if (nu == top) return false;
  if (nu[i] <= -1) return true;
  if (!rs.is_dominant(nu)) return false;
  auto h = rs.root_coords_of_weight(sub(top, nu));
  if (!h || !all_nonneg(*h)) throw std::invalid_argument("x not in Lambda(P)");
  if ((*h)[i] < 1) return false;
  int len = length_order(rs, i);
  for (int j = 0; j < rs.rank(); ++j)
    if ((*h)[j] >= 1 && length_order(rs, j) < len) return false;
  return true;
}

int OrthogonalSet::progressive_root(const Vec& x, int chamber) const {
  const RootSystem& rs = *rs_;
  Vec nu = rs.act(rs.inverse(chamber), x);
  Vec top = rs.act(rs.inverse(chamber), mu_[chamber]);
  if (nu == top) throw std::invalid_argument("vertex has no progressive root");
  for (int i = 0; i < rs.rank(); ++i)
    if (nu[i] <= -1) return i;
  auto h = rs.root_coords_of_weight(sub(top, nu));
  if (!h || !all_nonneg(*h)) throw std::invalid_argument("x not in Lambda(P)");
  int best = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    if ((*h)[i] < 1) continue;
    if (best < 0 || length_order(rs, i) < length_order(rs, best)) best = i;
  }
  return best;  // exists: nu != top and h >= 0 forces some h_i >= 1
}

std::vector<std::pair<Vec, int>> cayley_lambda(const std::vector<OrthogonalSet>& polytopes) {
  if (polytopes.empty()) throw std::invalid_argument("cayley_lambda: empty polytope list");
  for (auto& p : polytopes) {
    check_same_system(polytopes.front().rs(), p.rs());
    if (!p.special_ample()) throw std::invalid_argument("cayley_lambda requires special ample polytopes");
  }
  std::vector<std::pair<Vec, int>> out;
  for (std::size_t i = 0; i < polytopes.size(); ++i)
    for (auto& y : polytopes[i].lambda_points()) out.emplace_back(y, static_cast<int>(i));
  return out;
}

OrthogonalSet minkowski_sum(const std::vector<OrthogonalSet>& polytopes) {
  if (polytopes.empty()) throw std::invalid_argument("minkowski_sum: empty polytope list");
  OrthogonalSet sum = polytopes.front();
  for (std::size_t i = 1; i < polytopes.size(); ++i) sum = sum.minkowski_sum(polytopes[i]);
  return sum;
}

}  // namespace ample
