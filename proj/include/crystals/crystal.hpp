#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "crystals/poly.hpp"
#include "crystals/tableau.hpp"

namespace crystals {

// Abstract crystal graph: weighted vertices and i-labeled partial edge maps.
// The set-operator and extremality layers work against this interface, so any
// vertex model (tableaux, tensor pairs) can sit on top.
class CrystalStructure {
public:
  CrystalStructure() = default;
  // f_edges[i-1][v] = target of the lowering edge, or -1. Raising edges are
  // derived as the reverses.
  CrystalStructure(int n, std::vector<std::vector<int>> weights,
                   std::vector<std::vector<int>> f_edges);

  int rank() const { return n_; }
  int num_vertices() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weight(int v) const { return weights_[v]; }

  int f(int i, int v) const;
  int e(int i, int v) const;
  int phi(int i, int v) const;
  int eps(int i, int v) const;
  int f_star(int i, int v) const;
  int e_star(int i, int v) const;  // head of the i-string through v

  // The i-string through v, head first.
  std::vector<int> string_through(int i, int v) const;
  // All i-strings, ordered by head id, each head first.
  std::vector<std::vector<int>> strings(int i) const;
  // Connected components of the subgraph keeping only edges with the given
  // labels; components ordered by least vertex, vertices sorted.
  std::vector<std::vector<int>> components(const std::vector<int>& labels) const;
  // Vertices with no incoming edge of any label.
  std::vector<int> sources() const;

private:
  void check_index(int i) const;
  int n_ = 0;
  std::vector<std::vector<int>> weights_;
  std::vector<std::vector<int>> f_, e_;
};

// Vertex subset of a fixed ambient crystal; members sorted and unique.
struct CrystalSubset {
  const CrystalStructure* ambient = nullptr;
  std::vector<int> members;

  static CrystalSubset of(const CrystalStructure& g, std::vector<int> ids);
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
  bool operator==(const CrystalSubset& o) const;
};

CrystalSubset subset_union(const CrystalSubset& a, const CrystalSubset& b);
CrystalSubset subset_intersection(const CrystalSubset& a, const CrystalSubset& b);
CrystalSubset subset_difference(const CrystalSubset& a, const CrystalSubset& b);

Polynomial character(const CrystalSubset& x);

// The highest weight crystal on semistandard Young tableaux of a given shape
// with entries bounded by n, generated by closing {highest weight tableau}
// under the lowering operators. Vertices are ordered by weight
// (lexicographically descending) then rows, so output is deterministic.
class CrystalGraph {
public:
  CrystalGraph(Partition shape, int n);

  const CrystalStructure& structure() const { return s_; }
  const Partition& shape() const { return shape_; }
  int rank() const { return n_; }
  int num_vertices() const { return s_.num_vertices(); }
  const std::vector<Tableau>& vertices() const { return verts_; }
  const Tableau& vertex(int id) const { return verts_[id]; }
  // -1 when absent.
  int find(const Tableau& t) const;
  // Throws std::invalid_argument when absent.
  int index_of(const Tableau& t) const;
  int highest() const { return highest_; }

  CrystalSubset full_subset() const;
  CrystalSubset subset_of(const std::vector<Tableau>& tabs) const;
  Polynomial character() const;
  std::string to_dot() const;

private:
  Partition shape_;
  int n_;
  CrystalStructure s_;
  std::vector<Tableau> verts_;
  std::unordered_map<Tableau, int, TableauHash> index_;
  int highest_ = -1;
};

// Connected components after forgetting edges with labels outside `labels`,
// as subsets of the ambient graph, ordered by least vertex.
std::vector<CrystalSubset> levi_branch(const CrystalStructure& g, const std::vector<int>& labels);

}  // namespace crystals
