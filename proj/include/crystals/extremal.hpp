#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crystals/demazure.hpp"

namespace crystals {

// A string whose intersection with the tested subset is neither empty, the
// head alone, nor the whole string.
struct StringViolation {
  int index = 0;                  // the i of the offending i-string
  std::vector<int> string_vertices;  // head first
};

struct ExtremalVerdict {
  bool extremal = false;
  std::optional<StringViolation> violation;
};

// String property: X meets every i-string in the empty set, its head alone,
// or the whole string.
ExtremalVerdict is_extremal(const CrystalSubset& x);
// Same check restricted to strings with labels in `labels` (Levi branching).
ExtremalVerdict is_extremal(const CrystalSubset& x, const std::vector<int>& labels);

// Members with no outgoing in-subset edge. Throws std::invalid_argument when
// x is not extremal.
std::vector<int> lowest_weight_elements(const CrystalSubset& x);

// Upward closure of the seed set under all raising operators.
CrystalSubset e_closure(const CrystalStructure& g, const std::vector<int>& seeds);

// Least extremal superset of the seed set: the fixpoint of absorbing, for
// every member that is not the head of its i-string, that entire string.
CrystalSubset extremal_closure(const CrystalStructure& g, const std::vector<int>& seeds);

// When x is a disjoint union of blocks of the atom decomposition, the sorted
// list of indexing coset representatives; otherwise nullopt.
std::optional<std::vector<WeylElement>> strong_atom_positivity(const DemazureEngine& engine,
                                                               const CrystalSubset& x);

struct AtomExpansion {
  bool nonnegative = false;
  std::map<Exponents, long long> coefficients;
};

// Expands f in the atom-polynomial basis and reports whether every
// coefficient is nonnegative.
AtomExpansion weak_atom_positivity(const Polynomial& f);

}  // namespace crystals
