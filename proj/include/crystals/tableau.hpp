#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crystals {

// Integer partition, stored without trailing zeros.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition sorted_from(const std::vector<int>& values);

  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> padded(int n) const;
  int size() const;  // sum of parts
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int r) const { return parts_[r]; }  // 0-based

  bool operator==(const Partition& o) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string to_string() const;

private:
  std::vector<int> parts_;
};

// Semistandard Young tableau in French notation: rows()[0] is the bottom row,
// entries weakly increase along rows and strictly increase up columns.
class Tableau {
public:
  Tableau() = default;  // empty tableau of empty shape
  explicit Tableau(std::vector<std::vector<int>> rows);
  static Tableau highest_weight(const Partition& shape);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int num_cells() const;
  int max_entry() const;
  std::vector<int> weight(int n) const;

  bool operator==(const Tableau& o) const = default;
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }
  std::string to_string() const;  // "112/23", bottom row first

private:
  std::vector<std::vector<int>> rows_;
};

struct TableauHash {
  std::size_t operator()(const Tableau& t) const;
};

struct StringStats {
  int num_raises = 0;  // unpaired entries i+1
  int num_lowers = 0;  // unpaired entries i
};

// Crystal lowering operator: null when every i is paired.
std::optional<Tableau> lower(int i, const Tableau& t);

// Crystal raising operator: null when every i+1 is paired.
std::optional<Tableau> raise(int i, const Tableau& t);

StringStats string_stats(int i, const Tableau& t);

// All SSYT of the given shape with entries <= n, sorted by weight
// (lexicographically descending) and then by rows.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

}  // namespace crystals
