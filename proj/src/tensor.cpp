#include "crystals/tensor.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "crystals/demazure.hpp"
#include "crystals/extremal.hpp"

namespace crystals {

std::optional<std::pair<Tableau, Tableau>> tensor_lower(int i, const Tableau& x, const Tableau& y) {
  if (string_stats(i, x).num_raises >= string_stats(i, y).num_lowers) {
    auto fx = lower(i, x);
    if (!fx) return std::nullopt;
    return std::make_pair(std::move(*fx), y);
  }
  auto fy = lower(i, y);
  if (!fy) return std::nullopt;
  return std::make_pair(x, std::move(*fy));
}

TensorCrystal::TensorCrystal(const CrystalGraph& left, const CrystalGraph& right)
    : left_(&left), right_(&right) {
  if (left.rank() != right.rank()) throw std::invalid_argument("TensorCrystal: rank mismatch");
  const int n = left.rank();
  const int vl = left.num_vertices(), vr = right.num_vertices();
  const CrystalStructure& gl = left.structure();
  const CrystalStructure& gr = right.structure();

  std::vector<std::vector<int>> weights(vl * vr);
  for (int a = 0; a < vl; ++a)
    for (int b = 0; b < vr; ++b) {
      std::vector<int> wt = gl.weight(a);
      for (int j = 0; j < n; ++j) wt[j] += gr.weight(b)[j];
      weights[a * vr + b] = std::move(wt);
    }

  std::vector<std::vector<int>> f_edges(n - 1, std::vector<int>(vl * vr, -1));
  for (int i = 1; i <= n - 1; ++i)
    for (int a = 0; a < vl; ++a)
      for (int b = 0; b < vr; ++b) {
        int target = -1;
        if (gl.eps(i, a) >= gr.phi(i, b)) {
          const int fa = gl.f(i, a);
          if (fa != -1) target = fa * vr + b;
        } else {
          const int fb = gr.f(i, b);
          if (fb != -1) target = a * vr + fb;
        }
        f_edges[i - 1][a * vr + b] = target;
      }
  s_ = CrystalStructure(n, std::move(weights), std::move(f_edges));
}

int TensorCrystal::index_of(int left_id, int right_id) const {
  const int vl = left_->num_vertices(), vr = right_->num_vertices();
  if (left_id < 0 || left_id >= vl || right_id < 0 || right_id >= vr)
    throw std::invalid_argument("TensorCrystal: factor id out of range");
  return left_id * vr + right_id;
}

std::pair<int, int> TensorCrystal::factors(int v) const {
  const int vr = right_->num_vertices();
  if (v < 0 || v >= num_vertices()) throw std::invalid_argument("TensorCrystal: id out of range");
  return {v / vr, v % vr};
}

std::vector<TensorCrystal::Component> TensorCrystal::components() const {
  std::vector<int> labels;
  for (int i = 1; i <= s_.rank() - 1; ++i) labels.push_back(i);
  std::vector<Component> out;
  for (auto& verts : s_.components(labels)) {
    Component comp;
    comp.vertices = std::move(verts);
    for (int v : comp.vertices) {
      bool source = true;
      for (int i = 1; i <= s_.rank() - 1 && source; ++i)
        if (s_.e(i, v) != -1) source = false;
      if (!source) continue;
      if (comp.source != -1)
        throw std::logic_error("TensorCrystal: component with two sources");
      comp.source = v;
    }
    if (comp.source == -1) throw std::logic_error("TensorCrystal: component without a source");
    std::vector<int> wt = s_.weight(comp.source);
    if (!is_dominant(wt))
      throw std::logic_error("TensorCrystal: source weight is not dominant");
    while (!wt.empty() && wt.back() == 0) wt.pop_back();
    comp.highest_weight = Partition(std::move(wt));
    out.push_back(std::move(comp));
  }
  return out;
}

std::map<Partition, int> TensorCrystal::decompose() const {
  std::map<Partition, int> out;
  for (const auto& comp : components()) ++out[comp.highest_weight];
  return out;
}

namespace {

// Unique crystal isomorphism from a connected component onto the model graph
// of its highest weight, or nullopt when the edge structures differ.
std::optional<std::vector<int>> component_isomorphism(const CrystalStructure& ambient,
                                                      const std::vector<int>& component, int source,
                                                      const CrystalGraph& target) {
  if (static_cast<int>(component.size()) != target.num_vertices()) return std::nullopt;
  const int n = ambient.rank();
  std::vector<int> image(ambient.num_vertices(), -1);
  if (ambient.weight(source) != target.structure().weight(target.highest())) return std::nullopt;
  image[source] = target.highest();
  std::deque<int> queue{source};
  int mapped = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n - 1; ++i) {
      const int a = ambient.f(i, u);
      const int b = target.structure().f(i, image[u]);
      if ((a == -1) != (b == -1)) return std::nullopt;
      if (a == -1) continue;
      if (image[a] != -1) {
        if (image[a] != b) return std::nullopt;
        continue;
      }
      if (ambient.weight(a) != target.structure().weight(b)) return std::nullopt;
      image[a] = b;
      ++mapped;
      queue.push_back(a);
    }
  }
  if (mapped != static_cast<int>(component.size())) return std::nullopt;
  for (int v : component)
    if (image[v] == -1) return std::nullopt;
  return image;
}

}  // namespace

TensorDemazureReport demazure_tensor_test(const CrystalGraph& left, const WeylElement& v,
                                          const CrystalGraph& right, const WeylElement& w) {
  const DemazureEngine engine_left(left);
  const DemazureEngine engine_right(right);
  const CrystalSubset bv = engine_left.demazure_crystal(v);
  const CrystalSubset bw = engine_right.demazure_crystal(w);

  const TensorCrystal tensor(left, right);
  std::vector<int> ids;
  ids.reserve(bv.members.size() * bw.members.size());
  for (int a : bv.members)
    for (int b : bw.members) ids.push_back(tensor.index_of(a, b));
  const CrystalSubset subset = CrystalSubset::of(tensor.structure(), std::move(ids));

  TensorDemazureReport report;
  report.extremal = is_extremal(subset).extremal;
  report.direct_sum_of_demazure = true;
  for (const auto& comp : tensor.components()) {
    const CrystalSubset comp_subset = CrystalSubset::of(tensor.structure(), comp.vertices);
    const CrystalSubset piece_subset = subset_intersection(subset, comp_subset);
    if (piece_subset.size() == 0) continue;
    TensorDemazureReport::Piece piece;
    piece.nu = comp.highest_weight;
    piece.size = piece_subset.size();

    const CrystalGraph model(comp.highest_weight, left.rank());
    const auto iso = component_isomorphism(tensor.structure(), comp.vertices, comp.source, model);
    if (!iso) throw std::logic_error("demazure_tensor_test: component not a highest weight crystal");
    std::vector<int> image_ids;
    image_ids.reserve(piece_subset.members.size());
    for (int u : piece_subset.members) image_ids.push_back((*iso)[u]);
    const CrystalSubset image = CrystalSubset::of(model.structure(), std::move(image_ids));

    const DemazureEngine model_engine(model);
    for (const WeylElement& cand : model_engine.coset_reps()) {
      const CrystalSubset dem = model_engine.demazure_crystal(cand);
      if (dem.members == image.members) {
        piece.demazure_index = cand;
        break;
      }
    }
    if (!piece.demazure_index) report.direct_sum_of_demazure = false;
    report.pieces.push_back(std::move(piece));
  }
  return report;
}

}  // namespace crystals
