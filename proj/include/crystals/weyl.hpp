#pragma once

#include <string>
#include <vector>

namespace crystals {

// Element of the symmetric group S_n in one-line notation: one_line()[j-1] = w(j).
// Products compose as functions, (v * w)(j) = v(w(j)), so the right factor of a
// product acts first.
class WeylElement {
public:
  explicit WeylElement(std::vector<int> one_line);

  static WeylElement identity(int rank);
  static WeylElement simple_reflection(int i, int rank);
  static WeylElement longest(int rank);

  int rank() const { return static_cast<int>(perm_.size()); }
  int apply(int j) const { return perm_[j - 1]; }
  const std::vector<int>& one_line() const { return perm_; }

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  // Inversion count; equals the length of any reduced word.
  int length() const;
  bool is_identity() const;

  // i with w(i) > w(i+1): the letters that can start a word in application order.
  std::vector<int> right_descents() const;
  // i such that multiplying by s_i on the left shortens w.
  std::vector<int> left_descents() const;

  // Coordinate permutation of a weight vector: result[w(j)-1] = weight[j-1].
  std::vector<int> act(const std::vector<int>& weight) const;

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return perm_ != o.perm_; }
  bool operator<(const WeylElement& o) const;  // by (length, one-line)

  std::string to_string() const;

private:
  std::vector<int> perm_;
};

// Letters i_1,...,i_k in application order: the group element is
// s_{i_k} * ... * s_{i_1}, with letters[0] acting first.
using ReducedWord = std::vector<int>;

WeylElement word_product(const ReducedWord& word, int rank);

// Lexicographically least reduced word of w, in application order.
ReducedWord canonical_word(const WeylElement& w);

// All reduced words of w, sorted lexicographically. Exponential; desk scale.
std::vector<ReducedWord> reduced_words(const WeylElement& w);

// Bruhat order, decided by entrywise comparison of sorted one-line prefixes.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// All of S_n in lexicographic one-line order.
std::vector<WeylElement> symmetric_group(int rank);

bool is_dominant(const std::vector<int>& lambda);

// The unique minimal-length w with w.act(lambda) == beta, for dominant lambda
// and beta a rearrangement of it.
WeylElement min_rep_sending(const std::vector<int>& lambda, const std::vector<int>& beta);

// Minimal-length representative of the coset of w modulo the stabilizer of lambda.
WeylElement min_coset_rep(const WeylElement& w, const std::vector<int>& lambda);
bool is_min_rep(const WeylElement& w, const std::vector<int>& lambda);

// All minimal-length coset representatives modulo the stabilizer of lambda,
// one per rearrangement of lambda, sorted by (length, one-line).
std::vector<WeylElement> min_coset_reps(const std::vector<int>& lambda);

// Bruhat lower order ideal, stored by its set of maximal generators.
class LowerOrderIdeal {
public:
  explicit LowerOrderIdeal(std::vector<WeylElement> generators);
  int rank() const { return rank_; }
  const std::vector<WeylElement>& generators() const { return generators_; }
  bool contains(const WeylElement& w) const;
  std::vector<WeylElement> members() const;

private:
  int rank_ = 0;
  std::vector<WeylElement> generators_;
};

}  // namespace crystals
