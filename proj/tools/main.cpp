#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ample/acceptance.hpp"
#include "ample/diagsplit.hpp"
#include "ample/instances.hpp"
#include "ample/normality.hpp"
#include "ample/numbers_game.hpp"
#include "ample/quadraticity.hpp"
#include "ample/spec_io.hpp"

using namespace ample;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json_out = false;
};

json vec_json(const Vec& v) { return json(v); }

json tuple_json(const std::vector<Vec>& t) {
  json j = json::array();
  for (const Vec& x : t) j.push_back(vec_json(x));
  return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Every OrthogonalSet references the RootSystem of its own spec; the
// keepers must outlive the returned polytopes.
std::vector<OrthogonalSet> load_polytopes(const std::vector<std::string>& paths,
                                          std::vector<std::shared_ptr<RootSystem>>& keepers) {
  std::vector<OrthogonalSet> polys;
  for (const auto& path : paths) {
    PolytopeSpec spec = parse_polytope_spec(path);
    if (!keepers.empty() && (keepers.front()->family() != spec.rs->family() ||
                             keepers.front()->rank() != spec.rs->rank()))
      throw std::invalid_argument("polytope specs use different root systems");
    keepers.push_back(spec.rs);
    polys.push_back(std::move(spec.polytope));
  }
  return polys;
}

int cmd_info(Family fam, int rank, const Options& opt) {
  RootSystem rs = RootSystem::build(fam, rank);
  json j;
  j["system"] = rs.name();
  j["cartan"] = rs.cartan();
  j["roots"] = rs.roots().size();
  j["positive_roots"] = rs.positive_roots().size();
  j["weyl_order"] = rs.weyl_size();
  std::ostringstream os;
  os << rs.name() << "\nCartan matrix:\n";
  for (const Vec& row : rs.cartan()) os << "  " << to_string(row) << "\n";
  os << "roots: " << rs.roots().size() << " (" << rs.positive_roots().size() << " positive)\n";
  os << "|W| = " << rs.weyl_size() << "\n";
  emit(opt, j, os.str());
  return kExitPass;
}

int cmd_lambda(const std::string& path, Int dilate, bool count_only, bool emit_spec, const Options& opt) {
  PolytopeSpec spec = parse_polytope_spec(path);
  OrthogonalSet p = dilate > 1 ? spec.polytope.dilate(dilate) : spec.polytope;
  if (emit_spec) {
    std::cout << emit_polytope_spec(p).dump(2) << "\n";
    return kExitPass;
  }
  std::vector<Vec> pts = p.lambda_points();
  json j;
  j["system"] = spec.rs->name();
  j["count"] = pts.size();
  if (!count_only) j["points"] = tuple_json(pts);
  std::ostringstream os;
  if (!count_only)
    for (const Vec& x : pts) os << to_string(x) << "\n";
  os << pts.size() << " points\n";
  emit(opt, j, os.str());
  return kExitPass;
}

int cmd_decompose(const std::vector<std::string>& paths, const std::string& z_str, const Options& opt) {
  std::vector<std::shared_ptr<RootSystem>> keepers;
  std::vector<OrthogonalSet> polys = load_polytopes(paths, keepers);
  Vec z = parse_int_list(z_str);
  Decomposition d = decompose(z, polys);
  json j;
  j["target"] = vec_json(z);
  j["parts"] = tuple_json(d.parts);
  j["valid"] = d.validates(polys);
  std::ostringstream os;
  os << to_string(z) << " =";
  for (std::size_t i = 0; i < d.parts.size(); ++i) os << (i ? " + " : " ") << to_string(d.parts[i]);
  os << "\n";
  emit(opt, j, os.str());
  return d.validates(polys) ? kExitPass : kExitCheckFailed;
}

int cmd_game(Family fam, int rank, const std::string& config, const std::string& mode_str,
             const std::string& strategy_str, std::uint64_t seed, int max_steps, const Options& opt) {
  RootSystem rs = RootSystem::build(fam, rank);
  Vec v = parse_int_list(config);
  if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("config length must equal rank");
  game::Mode mode = mode_str == "plain"     ? game::Mode::plain
                    : mode_str == "minus-one" ? game::Mode::minus_one
                                              : game::Mode::cutoff;
  game::Strategy strategy = strategy_str == "random" ? game::Strategy::random : game::Strategy::min_index;
  game::PlayResult res = game::play(rs, v, mode, strategy, seed, max_steps);
  const char* outcome = res.outcome == game::Outcome::won    ? "won"
                        : res.outcome == game::Outcome::lost ? "lost"
                                                             : "diverged";
  json j;
  j["outcome"] = outcome;
  j["final"] = vec_json(res.final);
  j["moves"] = res.firing_sequence.size();
  json seq = json::array();
  for (int i : res.firing_sequence) seq.push_back(i + 1);
  j["firing_sequence"] = seq;
  std::ostringstream os;
  os << outcome << " final=" << to_string(res.final) << " moves=" << res.firing_sequence.size() << "\n";
  emit(opt, j, os.str());
  return kExitPass;
}

int cmd_check_normality(const std::vector<std::string>& paths, Int dilate, const Options& opt) {
  std::vector<std::shared_ptr<RootSystem>> keepers;
  std::vector<OrthogonalSet> polys = load_polytopes(paths, keepers);
  if (dilate > 1) {
    std::vector<OrthogonalSet> copies;
    for (Int i = 0; i < dilate; ++i)
      for (const auto& p : polys) copies.push_back(p);
    polys = std::move(copies);
  }
  NormalityReport rep = check_normality(polys);
  json j;
  j["targets"] = rep.targets;
  j["decomposed"] = rep.decomposed;
  j["failures"] = tuple_json(rep.failures);
  j["ok"] = rep.ok();
  std::ostringstream os;
  os << rep.decomposed << "/" << rep.targets << " targets decomposed"
     << (rep.ok() ? "" : " [FAILED]") << "\n";
  emit(opt, j, os.str());
  return rep.ok() ? kExitPass : kExitCheckFailed;
}

int cmd_check_quadratic(const std::vector<std::string>& paths, bool adjacent_only, bool winning,
                        std::size_t node_cap, const Options& opt) {
  std::vector<std::shared_ptr<RootSystem>> keepers;
  std::vector<OrthogonalSet> polys = load_polytopes(paths, keepers);
  FiberMode mode = adjacent_only ? FiberMode::adjacent_only
                   : winning     ? FiberMode::winning_restricted
                                 : FiberMode::all_root_moves;
  ConnectivityReport rep = check_connected(polys, mode, node_cap);
  json j;
  j["fibers"] = rep.fibers.size();
  j["disconnected"] = rep.disconnected;
  j["ok"] = rep.ok();
  json fibers = json::array();
  for (const auto& f : rep.fibers)
    fibers.push_back({{"sum", vec_json(f.sum)}, {"nodes", f.nodes}, {"edges", f.edges}, {"connected", f.connected}});
  j["per_fiber"] = fibers;
  std::ostringstream os;
  os << rep.fibers.size() << " fibers, " << rep.disconnected << " disconnected"
     << (rep.ok() ? "" : " [FAILED]") << "\n";
  emit(opt, j, os.str());
  return rep.ok() ? kExitPass : kExitCheckFailed;
}

int cmd_relations(const std::string& path, bool spanning_tree, const Options& opt) {
  PolytopeSpec spec = parse_polytope_spec(path);
  auto rels = quadratic_relations(spec.polytope, spanning_tree);
  json j;
  j["count"] = rels.size();
  json list = json::array();
  for (const auto& rel : rels)
    list.push_back({{"sum", vec_json(rel.sum)},
                    {"lhs", {vec_json(rel.lhs.first), vec_json(rel.lhs.second)}},
                    {"rhs", {vec_json(rel.rhs.first), vec_json(rel.rhs.second)}}});
  j["relations"] = list;
  std::ostringstream os;
  for (const auto& rel : rels)
    os << to_string(rel.lhs.first) << "*" << to_string(rel.lhs.second) << " = " << to_string(rel.rhs.first)
       << "*" << to_string(rel.rhs.second) << "\n";
  os << rels.size() << " relations\n";
  emit(opt, j, os.str());
  return kExitPass;
}

int cmd_check_split(Family fam, int rank, Int q, bool witnesses, const Options& opt) {
  RootSystem rs = RootSystem::build(fam, rank);
  SplitReport rep = is_diagonally_split(rs, q);
  json j;
  j["system"] = rs.name();
  j["q"] = q;
  j["split"] = rep.split;
  j["uncovered"] = tuple_json(rep.uncovered_classes);
  if (witnesses) {
    json w = json::array();
    for (const auto& opt_w : rep.witnesses)
      w.push_back(opt_w ? vec_json(*opt_w) : json(nullptr));
    j["witnesses"] = w;
  }
  std::ostringstream os;
  os << rs.name() << " q=" << q << ": " << (rep.split ? "diagonally split" : "not diagonally split") << "\n";
  for (const Vec& c : rep.uncovered_classes) os << "  uncovered class " << to_string(c) << "/" << q << "\n";
  emit(opt, j, os.str());
  return rep.split ? kExitPass : kExitCheckFailed;
}

int cmd_split_table(Int q_max, const Options& opt) {
  auto rows = reproduce_table(2, q_max);
  bool all = true;
  json list = json::array();
  std::ostringstream os;
  for (const auto& row : rows) {
    all = all && row.matches();
    list.push_back({{"system", row.system}, {"q", row.q}, {"split", row.split}, {"expected", row.expected}});
    os << row.system << " q=" << row.q << ": " << (row.split ? "split" : "not split")
       << (row.matches() ? "" : " [MISMATCH]") << "\n";
  }
  json j;
  j["rows"] = list;
  j["ok"] = all;
  os << (all ? "all verdicts match the classification\n" : "MISMATCHES FOUND\n");
  emit(opt, j, os.str());
  return all ? kExitPass : kExitCheckFailed;
}

int cmd_verify_all(const Options& opt) {
  auto results = run_acceptance(+[](const CriterionResult& c) {
    std::printf("%s %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
  });
  bool all = true;
  json list = json::array();
  for (const auto& c : results) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  if (opt.json_out) std::cout << json({{"criteria", list}, {"ok", all}}).dump(2) << "\n";
  return all ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for special ample polytopes on Weyl fans"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand
  Options opt;
  app.add_flag("--format-json,--json", opt.json_out, "machine-readable JSON output");
  std::string format;
  app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));

  std::string type_str = "A";
  int rank = 2;
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--type", type_str, "root-system family A..G")->required();
    sub->add_option("--rank", rank, "root-system rank")->required();
  };

  auto* info = app.add_subcommand("info", "print root-system data");
  add_system(info);

  auto* lambda = app.add_subcommand("lambda", "enumerate the lattice points of a polytope");
  std::string poly_path;
  Int dilate = 1;
  bool count_only = false, emit_spec = false;
  lambda->add_option("--polytope", poly_path, "polytope spec JSON file")->required();
  lambda->add_option("--dilate", dilate, "dilation factor")->check(CLI::PositiveNumber);
  lambda->add_flag("--count-only", count_only, "print only the count");
  lambda->add_flag("--emit-spec", emit_spec, "emit the explicit vertex-map spec instead");

  auto* dec = app.add_subcommand("decompose", "decompose a point of a Minkowski sum");
  std::vector<std::string> poly_paths;
  std::string z_str;
  dec->add_option("--polytopes", poly_paths, "polytope spec files")->required()->expected(-1);
  dec->add_option("--z", z_str, "target point, comma-separated weight coordinates")->required();

  auto* gm = app.add_subcommand("game", "play the numbers game with a cutoff");
  std::string config, mode_str = "cutoff", strategy_str = "min-index";
  std::uint64_t seed = 0;
  int max_steps = 10000;
  add_system(gm);
  gm->add_option("--config", config, "initial amplitudes, comma-separated")->required();
  gm->add_option("--mode", mode_str)->check(CLI::IsMember({"cutoff", "plain", "minus-one"}));
  gm->add_option("--strategy", strategy_str)->check(CLI::IsMember({"min-index", "random"}));
  gm->add_option("--seed", seed, "seed for the random strategy");
  gm->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "run a verification");
  check->require_subcommand(1);
  auto* chk_norm = check->add_subcommand("normality", "decompose every point of the sum");
  chk_norm->add_option("--polytopes", poly_paths, "polytope spec files")->required()->expected(-1);
  chk_norm->add_option("--dilate", dilate, "repeat the list this many times")->check(CLI::PositiveNumber);
  auto* chk_quad = check->add_subcommand("quadratic", "fiber-graph connectivity");
  bool adjacent_only = false, winning = false;
  std::size_t node_cap = 0;
  chk_quad->add_option("--polytopes", poly_paths, "polytope spec files")->required()->expected(-1);
  chk_quad->add_flag("--adjacent-only", adjacent_only, "only moves between adjacent components");
  chk_quad->add_flag("--winning", winning, "restrict to tuples of winning elements");
  chk_quad->add_option("--node-cap", node_cap, "skip fibers with more tuples than this");
  auto* chk_split = check->add_subcommand("diagonal-split", "diagonal splitting for one (system, q)");
  Int q = 2;
  bool witnesses = false;
  add_system(chk_split);
  chk_split->add_option("--q", q, "splitting parameter")->required()->check(CLI::Range(Int{2}, Int{1000}));
  chk_split->add_flag("--witnesses", witnesses, "list a witness per covered class");

  auto* rel = app.add_subcommand("relations", "degree-two relations of the section semigroup");
  bool spanning_tree = false;
  rel->add_option("--polytope", poly_path, "polytope spec file")->required();
  rel->add_flag("--spanning-tree", spanning_tree, "emit a spanning tree per fiber only");

  auto* table = app.add_subcommand("diagonal-split-table", "the split/not-split classification grid");
  Int q_max = 7;
  table->add_option("--q-max", q_max)->check(CLI::Range(Int{2}, Int{12}));

  app.add_subcommand("verify-all", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (format == "json") opt.json_out = true;

  try {
    Family fam = family_from_char(type_str.at(0));
    if (info->parsed()) return cmd_info(fam, rank, opt);
    if (lambda->parsed()) return cmd_lambda(poly_path, dilate, count_only, emit_spec, opt);
    if (dec->parsed()) return cmd_decompose(poly_paths, z_str, opt);
    if (gm->parsed()) return cmd_game(fam, rank, config, mode_str, strategy_str, seed, max_steps, opt);
    if (check->parsed()) {
      if (chk_norm->parsed()) return cmd_check_normality(poly_paths, dilate, opt);
      if (chk_quad->parsed()) return cmd_check_quadratic(poly_paths, adjacent_only, winning, node_cap, opt);
      if (chk_split->parsed()) return cmd_check_split(fam, rank, q, witnesses, opt);
    }
    if (rel->parsed()) return cmd_relations(poly_path, spanning_tree, opt);
    if (table->parsed()) return cmd_split_table(q_max, opt);
    return cmd_verify_all(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
