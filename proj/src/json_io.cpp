#include "crystals/json_io.hpp"

#include <stdexcept>

namespace crystals {

namespace {

std::vector<int> int_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const WeylElement& w) { return nlohmann::json(w.one_line()); }

WeylElement weyl_from_json(const nlohmann::json& j) { return WeylElement(int_vector(j, "permutation")); }

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json j;
  j["shape"] = t.shape().parts();
  j["rows"] = t.rows();
  return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
  if (!j.contains("rows")) throw std::invalid_argument("tableau: missing \"rows\"");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) rows.push_back(int_vector(row, "tableau row"));
  Tableau t(std::move(rows));
  if (j.contains("shape")) {
    const Partition declared(int_vector(j.at("shape"), "tableau shape"));
    if (!(declared == t.shape()))
      throw std::invalid_argument("tableau: declared shape does not match rows");
  }
  return t;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [exp, coeff] : p.terms()) j.push_back({{"exp", exp}, {"coeff", coeff}});
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("polynomial: expected a nonempty JSON array of terms");
  int nvars = -1;
  Polynomial out(static_cast<int>(j.front().at("exp").size()));
  for (const auto& term : j) {
    const std::vector<int> exp = int_vector(term.at("exp"), "polynomial exponent");
    if (nvars == -1) nvars = static_cast<int>(exp.size());
    if (static_cast<int>(exp.size()) != nvars)
      throw std::invalid_argument("polynomial: inconsistent exponent lengths");
    out.add_term(exp, term.at("coeff").get<long long>());
  }
  return out;
}

nlohmann::json expansion_to_json(const std::map<Exponents, long long>& expansion) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [beta, coeff] : expansion) j.push_back({{"composition", beta}, {"coeff", coeff}});
  return j;
}

nlohmann::json crystal_to_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["shape"] = g.shape().parts();
  j["rank"] = g.rank();
  j["vertex_count"] = g.num_vertices();
  j["highest"] = g.highest();
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    verts.push_back({{"id", v}, {"rows", g.vertex(v).rows()}, {"weight", g.structure().weight(v)}});
  }
  j["vertices"] = std::move(verts);
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 1; i <= g.rank() - 1; ++i)
    for (int v = 0; v < g.num_vertices(); ++v) {
      const int u = g.structure().f(i, v);
      if (u != -1) edges.push_back({{"i", i}, {"from", v}, {"to", u}});
    }
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json subset_to_json(const CrystalGraph& g, const CrystalSubset& x) {
  nlohmann::json j = nlohmann::json::array();
  for (int v : x.members) j.push_back(to_json(g.vertex(v)));
  return j;
}

std::vector<Tableau> tableaux_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("subset: expected a JSON array of tableaux");
  std::vector<Tableau> out;
  for (const auto& t : j) out.push_back(tableau_from_json(t));
  return out;
}

}  // namespace crystals
