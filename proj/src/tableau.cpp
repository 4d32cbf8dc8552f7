#include "crystals/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace crystals {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) throw std::invalid_argument("Partition: negative part");
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1])
      throw std::invalid_argument("Partition: parts not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::sorted_from(const std::vector<int>& values) {
  std::vector<int> parts = values;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int n) const {
  if (n < num_rows()) throw std::invalid_argument("Partition: padding below number of parts");
  std::vector<int> out = parts_;
  out.resize(n, 0);
  return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(parts_[j]);
  }
  return s + ")";
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("Tableau: empty row below a filled row");
    if (r + 1 < rows_.size() && rows_[r + 1].size() > rows_[r].size())
      throw std::invalid_argument("Tableau: row lengths not weakly decreasing upward");
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] < 1) throw std::invalid_argument("Tableau: entries must be positive");
      if (c > 0 && rows_[r][c] < rows_[r][c - 1])
        throw std::invalid_argument("Tableau: row not weakly increasing");
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
        throw std::invalid_argument("Tableau: column not strictly increasing");
    }
  }
}

Tableau Tableau::highest_weight(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.num_rows(); ++r)
    rows.emplace_back(shape.row_length(r), r + 1);
  return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::num_cells() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

std::vector<int> Tableau::weight(int n) const {
  if (max_entry() > n) throw std::invalid_argument("Tableau: entry exceeds rank");
  std::vector<int> wt(n, 0);
  for (const auto& row : rows_)
    for (int v : row) ++wt[v - 1];
  return wt;
}

std::string Tableau::to_string() const {
  if (rows_.empty()) return "-";
  std::string s;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "/";
    for (int v : rows_[r]) s += std::to_string(v);
  }
  return s;
}

std::size_t TableauHash::operator()(const Tableau& t) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& row : t.rows()) {
    h = (h ^ 0x9e3779b9u) * 1099511628211ull;
    for (int v : row) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  }
  return h;
}

namespace {

struct Pairing {
  // cells (row, col), 0-based, in reading order: columns left to right,
  // top to bottom within a column
  std::vector<std::pair<int, int>> unpaired_low;   // entries equal to i
  std::vector<std::pair<int, int>> unpaired_high;  // entries equal to i+1
};

// Bracket matching on the column reading word: an i+1 opens, an i closes.
Pairing compute_pairing(int i, const Tableau& t) {
  if (i < 1) throw std::out_of_range("crystal operator index out of range");
  Pairing p;
  const auto& rows = t.rows();
  const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < ncols; ++c) {
    for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
      if (c >= static_cast<int>(rows[r].size())) continue;
      const int v = rows[r][c];
      if (v == i + 1) {
        p.unpaired_high.emplace_back(r, c);
      } else if (v == i) {
        if (!p.unpaired_high.empty())
          p.unpaired_high.pop_back();
        else
          p.unpaired_low.emplace_back(r, c);
      }
    }
  }
  return p;
}

Tableau with_entry(const Tableau& t, int r, int c, int value) {
  auto rows = t.rows();
  rows[r][c] = value;
  return Tableau(std::move(rows));
}

}  // namespace

std::optional<Tableau> lower(int i, const Tableau& t) {
  const Pairing p = compute_pairing(i, t);
  if (p.unpaired_low.empty()) return std::nullopt;
  const auto [r, c] = p.unpaired_low.back();  // rightmost unpaired i
  return with_entry(t, r, c, i + 1);
}

std::optional<Tableau> raise(int i, const Tableau& t) {
  const Pairing p = compute_pairing(i, t);
  if (p.unpaired_high.empty()) return std::nullopt;
  const auto [r, c] = p.unpaired_high.front();  // leftmost unpaired i+1
  return with_entry(t, r, c, i);
}

StringStats string_stats(int i, const Tableau& t) {
  const Pairing p = compute_pairing(i, t);
  return {static_cast<int>(p.unpaired_high.size()), static_cast<int>(p.unpaired_low.size())};
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_ssyt: rank must be positive");
  if (shape.num_rows() > n) return {};
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.num_rows(); ++r) rows.emplace_back(shape.row_length(r), 0);
  std::vector<Tableau> out;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == static_cast<int>(rows.size())) {
      out.push_back(Tableau(rows));
      return;
    }
    if (c == static_cast<int>(rows[r].size())) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r][c] = v;
      fill(r, c + 1);
    }
    rows[r][c] = 0;
  };
  fill(0, 0);
  std::sort(out.begin(), out.end(), [n](const Tableau& a, const Tableau& b) {
    const auto wa = a.weight(n), wb = b.weight(n);
    if (wa != wb) return wa > wb;
    return a.rows() < b.rows();
  });
  return out;
}

}  // namespace crystals
