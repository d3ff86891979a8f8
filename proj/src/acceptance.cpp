#include "ample/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "ample/diagsplit.hpp"
#include "ample/instances.hpp"
#include "ample/normality.hpp"
#include "ample/numbers_game.hpp"
#include "ample/quadraticity.hpp"

namespace ample {

namespace {

struct FamilySpec {
  Family fam;
  int rank;
  std::uint64_t seed;
};

// The shared instance pool: 25 random instances per system, m alternating
// between 2 and 3 polytopes, each polytope a Minkowski sum of up to three
// orbit polytopes with lambda coordinates at most 3.
const std::vector<FamilySpec> kFamilies = {
    {Family::A, 1, 101}, {Family::A, 2, 102}, {Family::A, 3, 103}, {Family::B, 2, 104}, {Family::G, 2, 105}};

std::vector<std::vector<Instance>> build_pool() {
  std::vector<std::vector<Instance>> pool;
  for (const auto& f : kFamilies) pool.push_back(instance_family(f.fam, f.rank, 25, f.seed));
  return pool;
}

std::string elapsed_since(std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << ms / 1000 << '.' << (ms % 1000) / 100 << "s";
  return os.str();
}

CriterionResult split_table() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"diagonal-split-table", false, ""};
  auto rows = reproduce_table(2, 7);
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& row : rows)
    if (!row.matches()) {
      ++mismatches;
      if (first.empty()) first = row.system + " q=" + std::to_string(row.q);
    }
  r.pass = mismatches == 0;
  std::ostringstream os;
  os << rows.size() << " grid cells, " << mismatches << " mismatches";
  if (!first.empty()) os << " (first: " << first << ")";
  os << ", " << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult witness_fixtures() {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"split-witness-fixtures", false, ""};
  std::size_t checks = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };

  // A3, q = 2, z = (1/2)(a1 + a3): <s2 z, w2> = 1 exactly.
  RootSystem a3 = RootSystem::build(Family::A, 3);
  expect(verify_witness(a3, {{1, 0, 1}, 2}, {2}, 2) == Rational(1));

  // A4, odd q, z = ((p+1)/q)(a1 + a3) + (1/q)a4 with p = (q-1)/2:
  // <s2 z, w2> = (q+1)/q.
  RootSystem a4 = RootSystem::build(Family::A, 4);
  for (Int q : {3, 5, 7}) {
    Int p = (q - 1) / 2;
    expect(verify_witness(a4, {{p + 1, 0, p + 1, 1}, q}, {2}, 2) == Rational(q + 1, q));
  }

  // G2, any q >= 2, z = (p/q)a2 with p = floor(q/2): <s1 z, w1> = 3p/q >= 1.
  RootSystem g2 = RootSystem::build(Family::G, 2);
  for (Int q = 2; q <= 7; ++q) {
    Int p = q / 2;
    Rational v = verify_witness(g2, {{0, p}, q}, {1}, 1);
    expect(v == Rational(3 * p, q) && v.abs() >= Rational(1));
  }

  r.pass = failures == 0;
  std::ostringstream os;
  os << checks << " fixtures, " << failures << " failures, " << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult normality(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"normality", false, ""};
  std::size_t targets = 0, failures = 0;
  std::string first;
  for (std::size_t f = 0; f < pool.size(); ++f)
    for (const auto& inst : pool[f]) {
      NormalityReport rep = check_normality(inst.polytopes);
      targets += rep.targets;
      failures += rep.failures.size() + (rep.targets - rep.decomposed);
      if (!rep.ok() && first.empty())
        first = inst.rs->name() + " z=" + (rep.failures.empty() ? "?" : to_string(rep.failures.front()));
    }
  r.pass = failures == 0;
  std::ostringstream os;
  os << targets << " targets over " << pool.size() << " systems x 25 instances, " << failures << " failures";
  if (!first.empty()) os << " (first: " << first << ")";
  os << ", " << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult oracle_equivalence(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"decompose-oracle-equivalence", false, ""};
  std::size_t compared = 0, skipped = 0, disagreements = 0;
  for (std::size_t f = 0; f < pool.size(); ++f) {
    if (kFamilies[f].fam == Family::A && kFamilies[f].rank != 2) continue;
    if (kFamilies[f].fam == Family::G) continue;
    for (const auto& inst : pool[f]) {
      OrthogonalSet sum = minkowski_sum(inst.polytopes);
      for (const Vec& z : sum.lambda_points()) {
        auto nodes = fiber_nodes(z, inst.polytopes, 200);
        if (!nodes) {
          ++skipped;
          continue;
        }
        ++compared;
        auto brute = brute_force_decompose(z, inst.polytopes);
        Decomposition d = decompose(z, inst.polytopes);
        if (!brute || !brute->validates(inst.polytopes) || !d.validates(inst.polytopes)) ++disagreements;
      }
    }
  }
  r.pass = disagreements == 0 && compared > 0;
  std::ostringstream os;
  os << compared << " targets compared (" << skipped << " over cap), " << disagreements << " disagreements, "
     << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult fiber_connectivity(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"fiber-connectivity", false, ""};
  std::size_t fibers = 0, disconnected = 0;
  std::string first;
  auto run = [&](const std::vector<OrthogonalSet>& polys, FiberMode mode, const RootSystem& rs) {
    ConnectivityReport rep = check_connected(polys, mode, 5000);
    fibers += rep.fibers.size();
    disconnected += rep.disconnected;
    if (!rep.ok() && first.empty())
      first = rs.name() + " sum=" + (rep.witness_sum ? to_string(*rep.witness_sum) : std::string("?"));
  };
  for (std::size_t f = 0; f < pool.size(); ++f)
    for (const auto& inst : pool[f]) {
      run(inst.polytopes, FiberMode::all_root_moves, *inst.rs);
      run(inst.polytopes, FiberMode::winning_restricted, *inst.rs);
    }
  // Adjacent-only generation is only asserted for tuples of equal polytopes.
  for (std::size_t f = 0; f < pool.size(); ++f)
    for (int k = 0; k < 3; ++k) {
      const OrthogonalSet& p = pool[f][k].polytopes.front();
      run({p, p}, FiberMode::adjacent_only, *pool[f][k].rs);
      run({p, p, p}, FiberMode::adjacent_only, *pool[f][k].rs);
    }
  r.pass = disconnected == 0;
  std::ostringstream os;
  os << fibers << " fibers checked, " << disconnected << " disconnected";
  if (!first.empty()) os << " (first: " << first << ")";
  os << ", " << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult closure_lemmas(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"root-subtraction-closure", false, ""};
  std::size_t checks = 0, violations = 0;
  for (const auto& fam : pool)
    for (const auto& inst : fam) {
      const RootSystem& rs = *inst.rs;
      for (const auto& p : inst.polytopes) {
        for (const Vec& y : p.lambda_points()) {
          // y in Lambda(P), <y, beta^vee> >= 1 forces y - beta in Lambda(P).
          for (std::size_t b = 0; b < rs.roots().size(); ++b)
            if (rs.pair(y, rs.roots()[b]) >= 1) {
              ++checks;
              if (!p.contains(sub(y, rs.weight_of_root_index(static_cast<int>(b))))) ++violations;
            }
          // For winning y the simple-root case also preserves winning.
          if (game::is_winning(rs, y))
            for (int i = 0; i < rs.rank(); ++i)
              if (y[i] >= 1) {
                ++checks;
                Vec down = sub(y, rs.weight_of_root_index(rs.simple_root_index(i)));
                if (!p.contains(down) || !game::is_winning(rs, down)) ++violations;
              }
        }
      }
    }
  r.pass = violations == 0 && checks > 0;
  std::ostringstream os;
  os << checks << " hypotheses checked, " << violations << " violations, " << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

CriterionResult numbers_game_criterion(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"numbers-game", false, ""};
  std::size_t configs = 0, trajectories = 0, violations = 0;

  // Exhaustive play trees over [-1,2]^n: strong convergence and agreement
  // with the positive-root criterion.
  for (const auto& [fam, rank] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 3}, {Family::B, 2}}) {
    RootSystem rs = RootSystem::build(fam, rank);
    Vec v(rank, -1);
    for (;;) {
      ++configs;
      game::ExhaustiveResult ex = game::exhaustive_cutoff(rs, v);
      if (!ex.consistent || ex.winning != game::is_winning(rs, v)) ++violations;
      int i = rank - 1;
      while (i >= 0 && v[i] == 2) v[i--] = -1;
      if (i < 0) break;
      ++v[i];
    }
  }

  // Membership in Lambda(P) is invariant along cutoff trajectories.
  std::mt19937_64 rng(0x60D5EEDull);
  for (const auto& fam : pool)
    for (const auto& inst : fam) {
      const RootSystem& rs = *inst.rs;
      const OrthogonalSet& p = inst.polytopes.front();
      std::vector<Vec> lambda = p.lambda_points();
      std::uniform_int_distribution<std::size_t> pick(0, lambda.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_w(0, rs.weyl_size() - 1);
      std::uniform_int_distribution<std::size_t> pick_root(0, rs.roots().size() - 1);
      std::uniform_int_distribution<int> coin(0, 1);
      for (int t = 0; t < 1000; ++t) {
        Vec x = rs.act(static_cast<int>(pick_w(rng)), lambda[pick(rng)]);
        if (coin(rng)) x = add(x, rs.weight_of_root_index(static_cast<int>(pick_root(rng))));
        if (!game::allowed(x)) continue;
        ++trajectories;
        bool member = p.contains(x);
        for (int step = 0; step < 10000 && !game::terminal(x); ++step) {
          std::vector<int> fireable;
          bool forbidden = false;
          for (int i = 0; i < rs.rank(); ++i) {
            if (x[i] == -1) fireable.push_back(i);
            if (x[i] < -1) forbidden = true;
          }
          if (forbidden || fireable.empty()) break;
          x = game::fire(rs, x, fireable[std::uniform_int_distribution<std::size_t>(0, fireable.size() - 1)(rng)]);
          if (p.contains(x) != member) {
            ++violations;
            break;
          }
        }
      }
    }

  r.pass = violations == 0;
  std::ostringstream os;
  os << configs << " exhaustive configs + " << trajectories << " trajectories, " << violations << " violations, "
     << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

// Dominant lattice points of one polytope with the base-chamber order.
struct DominantPoset {
  std::vector<Vec> pts;
  std::vector<Vec> coords;  // root coordinates relative to pts[0]

  explicit DominantPoset(const RootSystem& rs, const OrthogonalSet& p) {
    for (const Vec& x : p.lambda_points())
      if (rs.is_dominant(x)) pts.push_back(x);
    for (const Vec& x : pts) coords.push_back(*rs.root_coords_of_weight(sub(x, pts.front())));
  }

  // x_a < x_b in the base-chamber order.
  bool less(std::size_t a, std::size_t b) const {
    bool strict = false;
    for (std::size_t i = 0; i < coords[a].size(); ++i) {
      Int d = coords[b][i] - coords[a][i];
      if (d < 0) return false;
      if (d > 0) strict = true;
    }
    return strict;
  }
};

CriterionResult covers_and_steps(const std::vector<std::vector<Instance>>& pool) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{"dominant-covers-and-steps", false, ""};
  std::size_t cover_checks = 0, step_checks = 0, violations = 0;

  for (const auto& fam : pool)
    for (const auto& inst : fam) {
      const RootSystem& rs = *inst.rs;
      bool laced = true;
      for (const auto& root : rs.roots())
        if (root.length != LengthClass::simply_laced) laced = false;
      for (const auto& p : inst.polytopes) {
        DominantPoset dp(rs, p);
        std::size_t n = dp.pts.size();
        // Height order makes cover detection incremental: y covers x iff no
        // previously found cover of x lies strictly below y.
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return sum(dp.coords[a]) < sum(dp.coords[b]); });
        for (std::size_t x = 0; x < n; ++x) {
          std::vector<std::size_t> covers;
          for (std::size_t yi : order) {
            if (!dp.less(x, yi)) continue;
            bool is_cover = true;
            for (std::size_t c : covers)
              if (dp.less(c, yi)) {
                is_cover = false;
                break;
              }
            Vec h = sub(dp.coords[yi], dp.coords[x]);
            if (is_cover) {
              covers.push_back(yi);
              ++cover_checks;
              int ri = rs.find_root(h);
              if (ri < 0 || !rs.roots()[ri].positive) ++violations;
            }
            // Minimum-length simple step toward any larger dominant point
            // is winning, and the game result lands between the endpoints.
            std::vector<int> cand;
            for (int i = 0; i < rs.rank(); ++i)
              if (h[i] >= 1) cand.push_back(i);
            bool have_short = false;
            for (int i : cand)
              if (rs.roots()[rs.simple_root_index(i)].length == LengthClass::short_root) have_short = true;
            for (int i : cand) {
              if (!laced && have_short &&
                  rs.roots()[rs.simple_root_index(i)].length != LengthClass::short_root)
                continue;
              ++step_checks;
              Vec xa = add(dp.pts[x], rs.weight_of_root_index(rs.simple_root_index(i)));
              if (!game::is_winning(rs, xa)) {
                ++violations;
                continue;
              }
              game::PlayResult res = game::play(rs, xa, game::Mode::cutoff, game::Strategy::min_index);
              if (res.outcome != game::Outcome::won) {
                ++violations;
                continue;
              }
              auto gap = rs.root_coords_of_weight(sub(dp.pts[yi], res.final));
              if (!gap || !all_nonneg(*gap)) ++violations;
            }
          }
        }
      }
    }

  r.pass = violations == 0 && cover_checks > 0 && step_checks > 0;
  std::ostringstream os;
  os << cover_checks << " covers + " << step_checks << " steps, " << violations << " violations, "
     << elapsed_since(t0);
  r.detail = os.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(void (*on_result)(const CriterionResult&)) {
  std::vector<CriterionResult> out;
  auto push = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  push(split_table());
  push(witness_fixtures());
  auto pool = build_pool();
  push(normality(pool));
  push(oracle_equivalence(pool));
  push(fiber_connectivity(pool));
  push(closure_lemmas(pool));
  push(numbers_game_criterion(pool));
  push(covers_and_steps(pool));
  return out;
}

}  // namespace ample
