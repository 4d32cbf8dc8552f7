#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "crystals/crystal.hpp"
#include "crystals/weyl.hpp"

namespace crystals {

// Downward closure of X along i-strings.
CrystalSubset f_set(int i, const CrystalSubset& x);
// Upward closure of X along i-strings.
CrystalSubset e_set(int i, const CrystalSubset& x);
// Atomic operator: f_set(i, X) minus X.
CrystalSubset atomic_operator(int i, const CrystalSubset& x);

// Demazure machinery bound to one ambient highest weight crystal. Demazure
// crystals are cached per coset (keyed by the extremal weight w . lambda);
// the cache fill is idempotent, so concurrent readers are fine.
class DemazureEngine {
public:
  explicit DemazureEngine(const CrystalGraph& graph);

  const CrystalGraph& graph() const { return *g_; }
  const std::vector<int>& padded_shape() const { return lambda_; }
  // Minimal coset representatives modulo the stabilizer of the shape.
  const std::vector<WeylElement>& coset_reps() const { return reps_; }

  // Closure of {highest} along the canonical reduced word of w. Depends only
  // on the coset of w, so w need not be a minimal representative.
  CrystalSubset demazure_crystal(const WeylElement& w) const;
  // Same fold along an explicit word (first letter applied first); uncached.
  CrystalSubset demazure_crystal_word(const ReducedWord& word) const;

  // Demazure crystal of w minus all strictly Bruhat-smaller Demazure
  // crystals. Requires w to be a minimal coset representative.
  CrystalSubset atom_via_difference(const WeylElement& w) const;
  // Fold of atomic operators along the canonical reduced word of w, starting
  // from {highest}. Empty when w is not a minimal coset representative.
  CrystalSubset atom_via_operators(const WeylElement& w) const;
  CrystalSubset atom_via_operators_word(const ReducedWord& word) const;

  // Atoms for all coset representatives; verified to partition the crystal.
  const std::map<WeylElement, CrystalSubset>& atom_decomposition() const;

  // The unique coset representative whose atom contains the vertex.
  WeylElement right_key(int vertex) const;
  WeylElement right_key(const Tableau& t) const;

  // Union of the Demazure crystals of the ideal's generators, which must be
  // minimal coset representatives.
  CrystalSubset schubert_crystal(const LowerOrderIdeal& ideal) const;

private:
  CrystalSubset highest_singleton() const;
  const CrystalGraph* g_;
  std::vector<int> lambda_;
  std::vector<WeylElement> reps_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, CrystalSubset> demazure_cache_;
  mutable std::optional<std::map<WeylElement, CrystalSubset>> decomposition_;
  mutable std::vector<int> rep_of_vertex_;
};

}  // namespace crystals
