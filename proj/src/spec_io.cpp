#include "ample/spec_io.hpp"

#include <fstream>

namespace ample {

namespace {

Vec to_vec(const nlohmann::json& j) {
  Vec v;
  for (auto& x : j) v.push_back(x.get<Int>());
  return v;
}

int element_of_word(const RootSystem& rs, const std::vector<int>& word) {
  int w = rs.identity();
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("word index out of range");
    w = rs.mul_simple(w, i - 1);
  }
  return w;
}

}  // namespace

PolytopeSpec parse_polytope_spec(const nlohmann::json& j) {
  Family fam = family_from_char(j.at("type").get<std::string>().at(0));
  int rank = j.at("rank").get<int>();
  auto rs = std::make_shared<RootSystem>(RootSystem::build(fam, rank));

  if (j.contains("explicit")) {
    std::vector<Vec> mu(rs->weyl_size());
    std::vector<bool> seen(rs->weyl_size(), false);
    for (auto& entry : j.at("explicit")) {
      std::vector<int> word;
      for (auto& x : entry.at("word")) word.push_back(x.get<int>());
      int w = element_of_word(*rs, word);
      if (seen[w]) throw std::invalid_argument("duplicate vertex for one chamber");
      seen[w] = true;
      mu[w] = to_vec(entry.at("mu"));
    }
    for (bool s : seen)
      if (!s) throw std::invalid_argument("explicit vertex map must cover all chambers");
    return {rs, OrthogonalSet::from_vertices(*rs, std::move(mu))};
  }

  auto& build = j.at("build");
  if (build.empty()) throw std::invalid_argument("empty build list");
  std::vector<OrthogonalSet> parts;
  for (auto& step : build) parts.push_back(OrthogonalSet::from_orbit(*rs, to_vec(step.at("orbit"))));
  OrthogonalSet p = minkowski_sum(parts);
  if (j.contains("translate")) p = p.translate(to_vec(j.at("translate")));
  return {rs, std::move(p)};
}

PolytopeSpec parse_polytope_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polytope spec: " + path);
  nlohmann::json j;
  in >> j;
  return parse_polytope_spec(j);
}

nlohmann::json emit_polytope_spec(const OrthogonalSet& p) {
  const RootSystem& rs = p.rs();
  nlohmann::json j;
  j["type"] = std::string(1, family_char(rs.family()));
  j["rank"] = rs.rank();
  nlohmann::json verts = nlohmann::json::array();
  for (std::size_t w = 0; w < rs.weyl_size(); ++w) {
    nlohmann::json entry;
    std::vector<int> word;
    for (int i : rs.weyl()[w].word) word.push_back(i + 1);
    entry["word"] = word;
    entry["mu"] = p.vertex(static_cast<int>(w));
    verts.push_back(std::move(entry));
  }
  j["explicit"] = std::move(verts);
  return j;
}

Vec parse_int_list(const std::string& comma_separated) {
  Vec out;
  std::string token;
  std::istringstream in(comma_separated);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in integer list");
    out.push_back(std::stoll(token));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace ample
