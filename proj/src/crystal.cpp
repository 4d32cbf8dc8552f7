#include "crystals/crystal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace crystals {

CrystalStructure::CrystalStructure(int n, std::vector<std::vector<int>> weights,
                                   std::vector<std::vector<int>> f_edges)
    : n_(n), weights_(std::move(weights)), f_(std::move(f_edges)) {
  if (n_ < 1) throw std::invalid_argument("CrystalStructure: rank must be positive");
  const int v = num_vertices();
  if (static_cast<int>(f_.size()) != n_ - 1)
    throw std::invalid_argument("CrystalStructure: need one edge map per index");
  for (const auto& w : weights_)
    if (static_cast<int>(w.size()) != n_)
      throw std::invalid_argument("CrystalStructure: weight length mismatch");
  e_.assign(n_ - 1, std::vector<int>(v, -1));
  for (int i = 0; i < n_ - 1; ++i) {
    if (static_cast<int>(f_[i].size()) != v)
      throw std::invalid_argument("CrystalStructure: edge map size mismatch");
    for (int u = 0; u < v; ++u) {
      const int t = f_[i][u];
      if (t == -1) continue;
      if (t < 0 || t >= v) throw std::invalid_argument("CrystalStructure: edge target out of range");
      if (e_[i][t] != -1) throw std::invalid_argument("CrystalStructure: lowering map not injective");
      e_[i][t] = u;
    }
  }
}

void CrystalStructure::check_index(int i) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("CrystalStructure: index out of range");
}

int CrystalStructure::f(int i, int v) const {
  check_index(i);
  return f_[i - 1][v];
}

int CrystalStructure::e(int i, int v) const {
  check_index(i);
  return e_[i - 1][v];
}

int CrystalStructure::phi(int i, int v) const {
  check_index(i);
  int k = 0;
  for (int u = f_[i - 1][v]; u != -1; u = f_[i - 1][u]) ++k;
  return k;
}

int CrystalStructure::eps(int i, int v) const {
  check_index(i);
  int k = 0;
  for (int u = e_[i - 1][v]; u != -1; u = e_[i - 1][u]) ++k;
  return k;
}

int CrystalStructure::f_star(int i, int v) const {
  check_index(i);
  int cur = v;
  for (int u = f_[i - 1][cur]; u != -1; u = f_[i - 1][cur]) cur = u;
  return cur;
}

int CrystalStructure::e_star(int i, int v) const {
  check_index(i);
  int cur = v;
  for (int u = e_[i - 1][cur]; u != -1; u = e_[i - 1][cur]) cur = u;
  return cur;
}

std::vector<int> CrystalStructure::string_through(int i, int v) const {
  std::vector<int> out;
  for (int u = e_star(i, v); u != -1; u = f_[i - 1][u]) out.push_back(u);
  return out;
}

std::vector<std::vector<int>> CrystalStructure::strings(int i) const {
  check_index(i);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (e_[i - 1][v] != -1) continue;  // not a head
    out.push_back(string_through(i, v));
  }
  return out;
}

std::vector<std::vector<int>> CrystalStructure::components(const std::vector<int>& labels) const {
  for (int i : labels) check_index(i);
  std::vector<int> comp(num_vertices(), -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (comp[v] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> verts;
    std::deque<int> queue{v};
    comp[v] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      verts.push_back(u);
      for (int i : labels) {
        for (int t : {f_[i - 1][u], e_[i - 1][u]}) {
          if (t != -1 && comp[t] == -1) {
            comp[t] = id;
            queue.push_back(t);
          }
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

std::vector<int> CrystalStructure::sources() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v) {
    bool source = true;
    for (int i = 0; i < n_ - 1 && source; ++i)
      if (e_[i][v] != -1) source = false;
    if (source) out.push_back(v);
  }
  return out;
}

CrystalSubset CrystalSubset::of(const CrystalStructure& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("CrystalSubset: vertex id out of range");
  return CrystalSubset{&g, std::move(ids)};
}

bool CrystalSubset::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool CrystalSubset::operator==(const CrystalSubset& o) const {
  return ambient == o.ambient && members == o.members;
}

namespace {
void check_same_ambient(const CrystalSubset& a, const CrystalSubset& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subset operation: different ambient crystals");
}
}  // namespace

CrystalSubset subset_union(const CrystalSubset& a, const CrystalSubset& b) {
  check_same_ambient(a, b);
  std::vector<int> out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out));
  return CrystalSubset{a.ambient, std::move(out)};
}

CrystalSubset subset_intersection(const CrystalSubset& a, const CrystalSubset& b) {
  check_same_ambient(a, b);
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return CrystalSubset{a.ambient, std::move(out)};
}

CrystalSubset subset_difference(const CrystalSubset& a, const CrystalSubset& b) {
  check_same_ambient(a, b);
  std::vector<int> out;
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                      std::back_inserter(out));
  return CrystalSubset{a.ambient, std::move(out)};
}

Polynomial character(const CrystalSubset& x) {
  if (!x.ambient) throw std::invalid_argument("character: subset has no ambient crystal");
  Polynomial p(x.ambient->rank());
  for (int v : x.members) p.add_term(x.ambient->weight(v), 1);
  return p;
}

CrystalGraph::CrystalGraph(Partition shape, int n) : shape_(std::move(shape)), n_(n) {
  if (n < 1) throw std::invalid_argument("CrystalGraph: rank must be positive");
  if (shape_.num_rows() > n)
    throw std::invalid_argument("CrystalGraph: shape has more rows than the rank allows");

  const Tableau top = Tableau::highest_weight(shape_);
  std::unordered_map<Tableau, int, TableauHash> seen;
  std::deque<Tableau> queue{top};
  seen.emplace(top, 0);
  std::vector<Tableau> found{top};
  while (!queue.empty()) {
    const Tableau t = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n - 1; ++i) {
      auto u = lower(i, t);
      if (!u) continue;
      if (seen.emplace(*u, static_cast<int>(found.size())).second) {
        found.push_back(*u);
        queue.push_back(std::move(*u));
      }
    }
  }

  std::sort(found.begin(), found.end(), [n](const Tableau& a, const Tableau& b) {
    const auto wa = a.weight(n), wb = b.weight(n);
    if (wa != wb) return wa > wb;
    return a.rows() < b.rows();
  });
  verts_ = std::move(found);
  for (int v = 0; v < static_cast<int>(verts_.size()); ++v) index_[verts_[v]] = v;
  highest_ = index_.at(top);

  std::vector<std::vector<int>> weights;
  weights.reserve(verts_.size());
  for (const auto& t : verts_) weights.push_back(t.weight(n));
  std::vector<std::vector<int>> f_edges(n - 1, std::vector<int>(verts_.size(), -1));
  for (int v = 0; v < static_cast<int>(verts_.size()); ++v) {
    for (int i = 1; i <= n - 1; ++i) {
      auto u = lower(i, verts_[v]);
      if (u) f_edges[i - 1][v] = index_.at(*u);
    }
  }
  s_ = CrystalStructure(n, std::move(weights), std::move(f_edges));
}

int CrystalGraph::find(const Tableau& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

int CrystalGraph::index_of(const Tableau& t) const {
  const int v = find(t);
  if (v < 0)
    throw std::invalid_argument("tableau " + t.to_string() + " is not a vertex of the crystal");
  return v;
}

CrystalSubset CrystalGraph::full_subset() const {
  std::vector<int> ids(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) ids[v] = v;
  return CrystalSubset{&s_, std::move(ids)};
}

CrystalSubset CrystalGraph::subset_of(const std::vector<Tableau>& tabs) const {
  std::vector<int> ids;
  ids.reserve(tabs.size());
  for (const auto& t : tabs) ids.push_back(index_of(t));
  return CrystalSubset::of(s_, std::move(ids));
}

Polynomial CrystalGraph::character() const { return crystals::character(full_subset()); }

std::string CrystalGraph::to_dot() const {
  static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60",
                                  "#8e44ad", "#d35400", "#16a085"};
  std::string out = "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int v = 0; v < num_vertices(); ++v) {
    std::string label;
    const auto& rows = verts_[v].rows();
    for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
      for (size_t c = 0; c < rows[r].size(); ++c) {
        if (c) label += " ";
        label += std::to_string(rows[r][c]);
      }
      if (r) label += "\\n";
    }
    if (label.empty()) label = "-";
    out += "  v" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (int i = 1; i <= n_ - 1; ++i)
    for (int v = 0; v < num_vertices(); ++v) {
      const int u = s_.f(i, v);
      if (u == -1) continue;
      out += "  v" + std::to_string(v) + " -> v" + std::to_string(u) + " [label=\"" +
             std::to_string(i) + "\", color=\"" + palette[(i - 1) % 6] + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::vector<CrystalSubset> levi_branch(const CrystalStructure& g, const std::vector<int>& labels) {
  std::vector<CrystalSubset> out;
  for (auto& comp : g.components(labels)) out.push_back(CrystalSubset{&g, std::move(comp)});
  return out;
}

}  // namespace crystals
