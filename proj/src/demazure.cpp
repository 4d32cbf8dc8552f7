#include "crystals/demazure.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystals {

namespace {

CrystalSubset closure_along(int i, const CrystalSubset& x, bool down) {
  if (!x.ambient) throw std::invalid_argument("set operator: subset has no ambient crystal");
  const CrystalStructure& g = *x.ambient;
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : x.members)
    for (int u = v; u != -1 && !in[u]; u = down ? g.f(i, u) : g.e(i, u)) in[u] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in[v]) out.push_back(v);
  return CrystalSubset{&g, std::move(out)};
}

}  // namespace

CrystalSubset f_set(int i, const CrystalSubset& x) { return closure_along(i, x, true); }

CrystalSubset e_set(int i, const CrystalSubset& x) { return closure_along(i, x, false); }

CrystalSubset atomic_operator(int i, const CrystalSubset& x) {
  return subset_difference(f_set(i, x), x);
}

DemazureEngine::DemazureEngine(const CrystalGraph& graph)
    : g_(&graph),
      lambda_(graph.shape().padded(graph.rank())),
      reps_(min_coset_reps(lambda_)) {}

CrystalSubset DemazureEngine::highest_singleton() const {
  return CrystalSubset{&g_->structure(), {g_->highest()}};
}

CrystalSubset DemazureEngine::demazure_crystal(const WeylElement& w) const {
  if (w.rank() != g_->rank()) throw std::invalid_argument("demazure_crystal: rank mismatch");
  const std::vector<int> key = w.act(lambda_);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = demazure_cache_.find(key);
    if (it != demazure_cache_.end()) return it->second;
  }
  CrystalSubset result = demazure_crystal_word(canonical_word(w));
  {
    std::lock_guard<std::mutex> lock(mu_);
    demazure_cache_.emplace(key, result);
  }
  return result;
}

CrystalSubset DemazureEngine::demazure_crystal_word(const ReducedWord& word) const {
  CrystalSubset x = highest_singleton();
  for (int i : word) x = f_set(i, x);
  return x;
}

CrystalSubset DemazureEngine::atom_via_difference(const WeylElement& w) const {
  if (w.rank() != g_->rank()) throw std::invalid_argument("atom_via_difference: rank mismatch");
  if (!is_min_rep(w, lambda_))
    throw std::invalid_argument("atom_via_difference: " + w.to_string() +
                                " is not a minimal coset representative");
  CrystalSubset x = demazure_crystal(w);
  for (const WeylElement& v : LowerOrderIdeal({w}).members()) {
    if (v == w) continue;
    x = subset_difference(x, demazure_crystal(v));
  }
  return x;
}

CrystalSubset DemazureEngine::atom_via_operators(const WeylElement& w) const {
  if (w.rank() != g_->rank()) throw std::invalid_argument("atom_via_operators: rank mismatch");
  return atom_via_operators_word(canonical_word(w));
}

CrystalSubset DemazureEngine::atom_via_operators_word(const ReducedWord& word) const {
  CrystalSubset x = highest_singleton();
  for (int i : word) x = atomic_operator(i, x);
  return x;
}

const std::map<WeylElement, CrystalSubset>& DemazureEngine::atom_decomposition() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (decomposition_) return *decomposition_;
  }
  std::map<WeylElement, CrystalSubset> atoms;
  std::vector<int> rep_of(g_->num_vertices(), -1);
  for (int r = 0; r < static_cast<int>(reps_.size()); ++r) {
    const CrystalSubset atom = atom_via_difference(reps_[r]);
    for (int v : atom.members) {
      if (rep_of[v] != -1) throw std::logic_error("atom_decomposition: atoms are not disjoint");
      rep_of[v] = r;
    }
    atoms.emplace(reps_[r], atom);
  }
  for (int v = 0; v < g_->num_vertices(); ++v)
    if (rep_of[v] == -1) throw std::logic_error("atom_decomposition: atoms do not cover the crystal");
  std::lock_guard<std::mutex> lock(mu_);
  if (!decomposition_) {
    decomposition_ = std::move(atoms);
    rep_of_vertex_ = std::move(rep_of);
  }
  return *decomposition_;
}

WeylElement DemazureEngine::right_key(int vertex) const {
  if (vertex < 0 || vertex >= g_->num_vertices())
    throw std::invalid_argument("right_key: vertex out of range");
  atom_decomposition();
  std::lock_guard<std::mutex> lock(mu_);
  return reps_[rep_of_vertex_[vertex]];
}

WeylElement DemazureEngine::right_key(const Tableau& t) const { return right_key(g_->index_of(t)); }

CrystalSubset DemazureEngine::schubert_crystal(const LowerOrderIdeal& ideal) const {
  if (ideal.rank() != g_->rank()) throw std::invalid_argument("schubert_crystal: rank mismatch");
  CrystalSubset x{&g_->structure(), {}};
  for (const WeylElement& w : ideal.generators()) {
    if (!is_min_rep(w, lambda_))
      throw std::invalid_argument("schubert_crystal: generator " + w.to_string() +
                                  " is not a minimal coset representative");
    x = subset_union(x, demazure_crystal(w));
  }
  return x;
}

}  // namespace crystals
