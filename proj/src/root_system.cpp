#include "ample/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ample {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family: ") + c);
  }
}

char family_char(Family f) { return static_cast<char>(f); }

std::string RootSystem::name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

namespace {

void check_rank(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                                std::string(1, family_char(f)));
}

// Standard Cartan matrix under Bourbaki node labeling (0-based here).
std::vector<Vec> make_cartan(Family f, int n) {
  std::vector<Vec> c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j, Int cij = -1, Int cji = -1) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::F:  // alpha_3, alpha_4 short
      edge(0, 1);
      edge(1, 2, -2, -1);
      edge(2, 3);
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      edge(0, 1, -1, -3);
      break;
  }
  return c;
}

// Symmetrizers d_i > 0 with c_ij d_j = c_ji d_i; |alpha_i|^2 is proportional
// to d_i.  Propagated over the (connected) Dynkin graph with rationals, then
// cleared to integers.
Vec symmetrizers(const std::vector<Vec>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rational> d(n, Rational(0));
  d[0] = Rational(1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || !(d[j] == Rational(0))) continue;
      // c_ij d_j = c_ji d_i  =>  d_j = d_i c_ji / c_ij
      d[j] = d[i] * Rational(c[j][i], c[i][j]);
      queue.push_back(j);
    }
  }
  Int lcm = 1;
  for (auto& r : d) lcm = std::lcm(lcm, r.den);
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = d[i].num * (lcm / d[i].den);
  return out;
}

Vec mat_mul(const Vec& a, const Vec& b, int n) {
  Vec r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
    }
  return r;
}

Vec mat_apply(const Vec& m, const Vec& x, int n) {
  Vec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i * n + j] * x[j];
  return r;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank, std::size_t group_guard) {
  check_rank(family, rank);
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = make_cartan(family, rank);

  // Adjugate and determinant of C^T by exact Gauss-Jordan.
  int n = rank;
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Rational(rs.cartan_[j][i]);
    aug[i][n + i] = Rational(1);
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && aug[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      std::swap(aug[piv], aug[col]);
      det = det * Rational(-1);
    }
    det = det * aug[col][col];
    Rational inv_piv(aug[col][col].den, aug[col][col].num);
    for (auto& v : aug[col]) v = v * inv_piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == Rational(0)) continue;
      Rational factor = aug[r][col];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] = aug[r][j] - factor * aug[col][j];
    }
  }
  if (det.den != 1 || det.num <= 0) throw std::logic_error("unexpected Cartan determinant");
  rs.det_ = det.num;
  rs.adj_.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational entry = aug[i][n + j] * det;
      if (entry.den != 1) throw std::logic_error("non-integral adjugate");
      rs.adj_[i][j] = entry.num;
    }

  rs.build_roots();
  rs.build_weyl(group_guard);
  return rs;
}

void RootSystem::build_roots() {
  int n = rank_;
  const auto& c = cartan_;
  Vec d = symmetrizers(c);

  // Close the simple (root, coroot) pairs under all simple reflections.
  // The coroot coordinates reflect with the transposed Cartan matrix.
  std::map<Vec, Vec> seen;  // root coords -> coroot coords
  std::deque<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec b = queue.front();
    queue.pop_front();
    Vec co = seen.at(b);
    for (int j = 0; j < n; ++j) {
      Vec nb = b, nco = co;
      Int pb = 0, pc = 0;
      for (int k = 0; k < n; ++k) {
        pb += b[k] * c[k][j];
        pc += co[k] * c[j][k];
      }
      nb[j] -= pb;
      nco[j] -= pc;
      if (seen.emplace(nb, nco).second) queue.push_back(nb);
    }
  }

  auto sq_length = [&](const Vec& b) {
    Int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += b[i] * b[j] * c[i][j] * d[j];
    return s;
  };
  std::set<Int> lengths;
  for (auto& [b, co] : seen) lengths.insert(sq_length(b));
  if (lengths.size() > 2) throw std::logic_error("more than two root lengths");
  bool laced = lengths.size() == 1;
  Int long_sq = *lengths.rbegin();

  roots_.reserve(seen.size());
  simple_root_index_.assign(n, -1);
  for (auto& [b, co] : seen) {
    Root r;
    r.root = b;
    r.coroot = co;
    r.length = laced                     ? LengthClass::simply_laced
               : sq_length(b) == long_sq ? LengthClass::long_root
                                         : LengthClass::short_root;
    r.positive = all_nonneg(b);
    int idx = static_cast<int>(roots_.size());
    root_index_.emplace(b, idx);
    if (r.positive && sum(b) == 1)
      for (int i = 0; i < n; ++i)
        if (b[i] == 1) simple_root_index_[i] = idx;
    if (r.positive) positive_.push_back(idx);
    roots_.push_back(std::move(r));
  }
}

void RootSystem::build_weyl(std::size_t group_guard) {
  int n = rank_;
  const auto& c = cartan_;

  // Generator matrices: weight action s_i: x_j -> x_j - c_ij x_i,
  // root action s_i: b_i -> b_i - sum_k c_ki b_k.
  std::vector<Vec> gen_w(n), gen_r(n);
  for (int i = 0; i < n; ++i) {
    Vec mw(n * n, 0), mr(n * n, 0);
    for (int j = 0; j < n; ++j) {
      mw[j * n + j] = 1;
      mr[j * n + j] = 1;
    }
    for (int j = 0; j < n; ++j) mw[j * n + i] -= c[i][j];
    for (int k = 0; k < n; ++k) mr[i * n + k] -= c[k][i];
    gen_w[i] = std::move(mw);
    gen_r[i] = std::move(mr);
  }

  Vec ident(n * n, 0);
  for (int j = 0; j < n; ++j) ident[j * n + j] = 1;

  std::unordered_map<Vec, int, VecHash> index;
  weyl_.clear();
  weyl_.push_back({{}, ident, ident, 0, std::vector<int>(n, -1)});
  index.emplace(ident, 0);

  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      Vec m = mat_mul(weyl_[head].weight_mat, gen_w[i], n);
      auto it = index.find(m);
      if (it == index.end()) {
        if (weyl_.size() >= group_guard)
          throw std::runtime_error("Weyl group size guard exceeded (" + std::to_string(group_guard) + ")");
        WeylElement e;
        e.word = weyl_[head].word;
        e.word.push_back(i);
        e.weight_mat = m;
        e.root_mat = mat_mul(weyl_[head].root_mat, gen_r[i], n);
        e.right_prod.assign(n, -1);
        int idx = static_cast<int>(weyl_.size());
        index.emplace(e.weight_mat, idx);
        weyl_.push_back(std::move(e));
        weyl_[head].right_prod[i] = idx;
      } else {
        weyl_[head].right_prod[i] = it->second;
      }
    }
  }

  simple_refl_.assign(n, -1);
  for (int i = 0; i < n; ++i) simple_refl_[i] = weyl_[0].right_prod[i];

  for (auto& e : weyl_) {
    Vec m = ident;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) m = mat_mul(m, gen_w[*it], n);
    e.inverse = index.at(m);
  }
}

int RootSystem::find_root(const Vec& root_coords) const {
  auto it = root_index_.find(root_coords);
  return it == root_index_.end() ? -1 : it->second;
}

Int RootSystem::pair(const Vec& weight, const Root& beta) const {
  if (weight.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("dimension mismatch");
  Int s = 0;
  for (int i = 0; i < rank_; ++i) s += beta.coroot[i] * weight[i];
  return s;
}

Vec RootSystem::act(int w, const Vec& weight) const { return mat_apply(weyl_[w].weight_mat, weight, rank_); }

Vec RootSystem::act_root(int w, const Vec& root_coords) const {
  return mat_apply(weyl_[w].root_mat, root_coords, rank_);
}

Vec RootSystem::act_simple(int i, const Vec& weight) const {
  Vec r = weight;
  Int xi = weight[i];
  for (int j = 0; j < rank_; ++j) r[j] -= cartan_[i][j] * xi;
  return r;
}

std::pair<int, Vec> RootSystem::dominant_representative(const Vec& weight) const {
  Vec d = weight;
  int w = 0;
  std::size_t steps = 0;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank_; ++k)
      if (d[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    d = act_simple(i, d);
    w = mul_simple(w, i);
    if (++steps > weyl_.size()) throw std::logic_error("reflection descent failed to terminate");
  }
  return {w, d};
}

Vec RootSystem::weight_of_root(const Vec& root_coords) const {
  Vec w(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += cartan_[j][i] * root_coords[j];
  return w;
}

Vec RootSystem::scaled_root_coords(const Vec& weight) const {
  Vec t(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) t[i] += adj_[i][j] * weight[j];
  return t;
}

std::optional<Vec> RootSystem::root_coords_of_weight(const Vec& weight) const {
  Vec t = scaled_root_coords(weight);
  for (auto& x : t) {
    if (x % det_ != 0) return std::nullopt;
    x /= det_;
  }
  return t;
}

}  // namespace ample
