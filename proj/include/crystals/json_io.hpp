#pragma once

#include <json.hpp>

#include "crystals/crystal.hpp"
#include "crystals/poly.hpp"
#include "crystals/tableau.hpp"
#include "crystals/weyl.hpp"

namespace crystals {

// WeylElement <-> JSON array of integers (one-line notation).
nlohmann::json to_json(const WeylElement& w);
WeylElement weyl_from_json(const nlohmann::json& j);

// Tableau <-> {"shape": [...], "rows": [[bottom row], ...]}, French order.
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

// Polynomial <-> sorted list of {"exp": [...], "coeff": k}.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json expansion_to_json(const std::map<Exponents, long long>& expansion);

// Full crystal graph: shape, rank, vertices with weights, labeled edges.
nlohmann::json crystal_to_json(const CrystalGraph& g);

nlohmann::json subset_to_json(const CrystalGraph& g, const CrystalSubset& x);

// Parses a JSON array of tableaux (the subset file format).
std::vector<Tableau> tableaux_from_json(const nlohmann::json& j);

}  // namespace crystals
