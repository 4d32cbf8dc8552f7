#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crystals/crystal.hpp"
#include "crystals/weyl.hpp"

namespace crystals {

// Lowering rule on a pair of tableaux: the left factor moves when its number
// of unpaired i+1's is at least the right factor's number of unpaired i's.
std::optional<std::pair<Tableau, Tableau>> tensor_lower(int i, const Tableau& x, const Tableau& y);

// Tensor product of two tableau crystals of the same rank. Vertices are all
// ordered pairs, id = left_id * |right| + right_id; lowering edges follow the
// rule above, and raising edges, string lengths and weights are derived from
// the built graph.
class TensorCrystal {
public:
  TensorCrystal(const CrystalGraph& left, const CrystalGraph& right);

  const CrystalStructure& structure() const { return s_; }
  const CrystalGraph& left() const { return *left_; }
  const CrystalGraph& right() const { return *right_; }
  int num_vertices() const { return s_.num_vertices(); }
  int index_of(int left_id, int right_id) const;
  std::pair<int, int> factors(int v) const;

  struct Component {
    std::vector<int> vertices;
    int source = -1;
    Partition highest_weight;
  };
  // Connected components; each must have a unique source with a dominant
  // weight, otherwise the construction throws std::logic_error.
  std::vector<Component> components() const;
  // Multiplicity of each highest weight among the components.
  std::map<Partition, int> decompose() const;

private:
  const CrystalGraph* left_;
  const CrystalGraph* right_;
  CrystalStructure s_;
};

struct TensorDemazureReport {
  bool extremal = false;
  bool direct_sum_of_demazure = false;
  struct Piece {
    Partition nu;           // highest weight of the ambient component
    int size = 0;           // vertices of the subset inside that component
    std::optional<WeylElement> demazure_index;  // matching w', when one exists
  };
  std::vector<Piece> pieces;
};

// Builds the subset (Demazure crystal of v) x (Demazure crystal of w) inside
// left (x) right, tests the string property, and tries to identify every
// connected component of the subset with a Demazure crystal of the component's
// highest weight crystal.
TensorDemazureReport demazure_tensor_test(const CrystalGraph& left, const WeylElement& v,
                                          const CrystalGraph& right, const WeylElement& w);

}  // namespace crystals
