#include "crystals/extremal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace crystals {

ExtremalVerdict is_extremal(const CrystalSubset& x, const std::vector<int>& labels) {
  if (!x.ambient) throw std::invalid_argument("is_extremal: subset has no ambient crystal");
  const CrystalStructure& g = *x.ambient;
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : x.members) in[v] = 1;
  for (int i : labels) {
    for (const auto& s : g.strings(i)) {
      int count = 0;
      for (int v : s) count += in[v];
      if (count == 0 || count == static_cast<int>(s.size())) continue;
      if (count == 1 && in[s.front()]) continue;  // head alone
      return {false, StringViolation{i, s}};
    }
  }
  return {true, std::nullopt};
}

ExtremalVerdict is_extremal(const CrystalSubset& x) {
  if (!x.ambient) throw std::invalid_argument("is_extremal: subset has no ambient crystal");
  std::vector<int> labels;
  for (int i = 1; i <= x.ambient->rank() - 1; ++i) labels.push_back(i);
  return is_extremal(x, labels);
}

std::vector<int> lowest_weight_elements(const CrystalSubset& x) {
  const ExtremalVerdict verdict = is_extremal(x);
  if (!verdict.extremal)
    throw std::invalid_argument("lowest_weight_elements: subset is not extremal (offending index " +
                                std::to_string(verdict.violation->index) + ")");
  const CrystalStructure& g = *x.ambient;
  std::vector<int> out;
  for (int v : x.members) {
    bool lowest = true;
    for (int i = 1; i <= g.rank() - 1 && lowest; ++i) {
      const int u = g.f(i, v);
      if (u != -1 && x.contains(u)) lowest = false;
    }
    if (lowest) out.push_back(v);
  }
  return out;
}

CrystalSubset e_closure(const CrystalStructure& g, const std::vector<int>& seeds) {
  std::vector<char> in(g.num_vertices(), 0);
  std::deque<int> queue;
  for (int v : seeds) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("e_closure: vertex out of range");
    if (!in[v]) {
      in[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= g.rank() - 1; ++i) {
      const int u = g.e(i, v);
      if (u != -1 && !in[u]) {
        in[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in[v]) out.push_back(v);
  return CrystalSubset{&g, std::move(out)};
}

CrystalSubset extremal_closure(const CrystalStructure& g, const std::vector<int>& seeds) {
  std::vector<char> in(g.num_vertices(), 0);
  std::deque<int> queue;
  auto absorb = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      queue.push_back(v);
    }
  };
  for (int v : seeds) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("extremal_closure: vertex out of range");
    absorb(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    // a non-head member forces its whole string; heads may stand alone
    for (int i = 1; i <= g.rank() - 1; ++i)
      if (g.e(i, v) != -1)
        for (int u : g.string_through(i, v)) absorb(u);
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in[v]) out.push_back(v);
  return CrystalSubset{&g, std::move(out)};
}

std::optional<std::vector<WeylElement>> strong_atom_positivity(const DemazureEngine& engine,
                                                               const CrystalSubset& x) {
  if (x.ambient != &engine.graph().structure())
    throw std::invalid_argument("strong_atom_positivity: subset not in the engine's crystal");
  std::vector<WeylElement> out;
  for (const auto& [w, atom] : engine.atom_decomposition()) {
    const int overlap = subset_intersection(x, atom).size();
    if (overlap == 0) continue;
    if (overlap != atom.size()) return std::nullopt;  // partial block
    out.push_back(w);
  }
  return out;
}

AtomExpansion weak_atom_positivity(const Polynomial& f) {
  AtomExpansion out;
  out.coefficients = expand_in_atoms(f);
  out.nonnegative = true;
  for (const auto& [beta, c] : out.coefficients)
    if (c < 0) out.nonnegative = false;
  return out;
}

}  // namespace crystals
