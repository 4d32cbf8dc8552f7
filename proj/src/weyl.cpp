#include "crystals/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crystals {

WeylElement::WeylElement(std::vector<int> one_line) : perm_(std::move(one_line)) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0) throw std::invalid_argument("WeylElement: empty one-line notation");
  std::vector<char> seen(n + 1, 0);
  for (int v : perm_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("WeylElement: not a permutation of 1..n");
    seen[v] = 1;
  }
}

WeylElement WeylElement::identity(int rank) {
  if (rank < 1) throw std::invalid_argument("identity: rank must be positive");
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 1);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_reflection(int i, int rank) {
  if (i < 1 || i > rank - 1) throw std::out_of_range("simple_reflection: index out of range");
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 1);
  std::swap(p[i - 1], p[i]);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::longest(int rank) {
  if (rank < 1) throw std::invalid_argument("longest: rank must be positive");
  std::vector<int> p(rank);
  for (int j = 0; j < rank; ++j) p[j] = rank - j;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("product: rank mismatch");
  std::vector<int> p(rank());
  for (int j = 0; j < rank(); ++j) p[j] = perm_[other.perm_[j] - 1];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(rank());
  for (int j = 0; j < rank(); ++j) p[perm_[j] - 1] = j + 1;
  return WeylElement(std::move(p));
}

int WeylElement::length() const {
  int inv = 0;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (perm_[a] > perm_[b]) ++inv;
  return inv;
}

bool WeylElement::is_identity() const {
  for (int j = 0; j < rank(); ++j)
    if (perm_[j] != j + 1) return false;
  return true;
}

std::vector<int> WeylElement::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i <= rank() - 1; ++i)
    if (perm_[i - 1] > perm_[i]) out.push_back(i);
  return out;
}

std::vector<int> WeylElement::left_descents() const { return inverse().right_descents(); }

std::vector<int> WeylElement::act(const std::vector<int>& weight) const {
  if (static_cast<int>(weight.size()) != rank())
    throw std::invalid_argument("act: weight length does not match rank");
  std::vector<int> out(weight.size());
  for (int j = 0; j < rank(); ++j) out[perm_[j] - 1] = weight[j];
  return out;
}

bool WeylElement::operator<(const WeylElement& o) const {
  const int la = length(), lb = o.length();
  if (la != lb) return la < lb;
  return perm_ < o.perm_;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (size_t j = 0; j < perm_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(perm_[j]);
  }
  return s + "]";
}

WeylElement word_product(const ReducedWord& word, int rank) {
  WeylElement w = WeylElement::identity(rank);
  for (int letter : word) w = WeylElement::simple_reflection(letter, rank) * w;
  return w;
}

ReducedWord canonical_word(const WeylElement& w) {
  ReducedWord out;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    const int i = cur.right_descents().front();
    out.push_back(i);
    cur = cur * WeylElement::simple_reflection(i, cur.rank());
  }
  return out;
}

std::vector<ReducedWord> reduced_words(const WeylElement& w) {
  if (w.is_identity()) return {ReducedWord{}};
  std::vector<ReducedWord> out;
  for (int i : w.right_descents()) {
    const WeylElement rest = w * WeylElement::simple_reflection(i, w.rank());
    for (const ReducedWord& r : reduced_words(rest)) {
      ReducedWord word;
      word.reserve(r.size() + 1);
      word.push_back(i);
      word.insert(word.end(), r.begin(), r.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (v.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  const int n = v.rank();
  std::vector<int> pv, pw;
  pv.reserve(n);
  pw.reserve(n);
  for (int k = 1; k <= n - 1; ++k) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v.apply(k)), v.apply(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w.apply(k)), w.apply(k));
    for (int j = 0; j < k; ++j)
      if (pv[j] > pw[j]) return false;
  }
  return true;
}

std::vector<WeylElement> symmetric_group(int rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 1);
  std::vector<WeylElement> out;
  do {
    out.push_back(WeylElement(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_dominant(const std::vector<int>& lambda) {
  for (size_t j = 0; j + 1 < lambda.size(); ++j)
    if (lambda[j] < lambda[j + 1]) return false;
  return true;
}

WeylElement min_rep_sending(const std::vector<int>& lambda, const std::vector<int>& beta) {
  if (!is_dominant(lambda)) throw std::invalid_argument("min_rep_sending: lambda not dominant");
  if (lambda.size() != beta.size()) throw std::invalid_argument("min_rep_sending: length mismatch");
  const int n = static_cast<int>(lambda.size());
  std::map<int, std::vector<int>> positions;  // value -> 1-based positions in beta, ascending
  for (int j = 0; j < n; ++j) positions[beta[j]].push_back(j + 1);
  std::map<int, size_t> next;
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) {
    auto it = positions.find(lambda[j]);
    if (it == positions.end() || next[lambda[j]] >= it->second.size())
      throw std::invalid_argument("min_rep_sending: beta is not a rearrangement of lambda");
    p[j] = it->second[next[lambda[j]]++];
  }
  return WeylElement(std::move(p));
}

WeylElement min_coset_rep(const WeylElement& w, const std::vector<int>& lambda) {
  return min_rep_sending(lambda, w.act(lambda));
}

bool is_min_rep(const WeylElement& w, const std::vector<int>& lambda) {
  return min_coset_rep(w, lambda) == w;
}

std::vector<WeylElement> min_coset_reps(const std::vector<int>& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("min_coset_reps: lambda not dominant");
  std::vector<int> beta = lambda;
  std::sort(beta.begin(), beta.end());
  std::vector<WeylElement> out;
  do {
    out.push_back(min_rep_sending(lambda, beta));
  } while (std::next_permutation(beta.begin(), beta.end()));
  std::sort(out.begin(), out.end());
  return out;
}

LowerOrderIdeal::LowerOrderIdeal(std::vector<WeylElement> generators) {
  if (generators.empty()) throw std::invalid_argument("LowerOrderIdeal: no generators");
  rank_ = generators.front().rank();
  for (const auto& g : generators)
    if (g.rank() != rank_) throw std::invalid_argument("LowerOrderIdeal: rank mismatch");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // keep only Bruhat-maximal elements
  for (size_t a = 0; a < generators.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < generators.size() && !dominated; ++b)
      if (a != b && !(generators[a] == generators[b]) && bruhat_leq(generators[a], generators[b]))
        dominated = true;
    if (!dominated) generators_.push_back(generators[a]);
  }
}

bool LowerOrderIdeal::contains(const WeylElement& w) const {
  for (const auto& g : generators_)
    if (bruhat_leq(w, g)) return true;
  return false;
}

std::vector<WeylElement> LowerOrderIdeal::members() const {
  std::vector<WeylElement> out;
  for (const auto& u : symmetric_group(rank_))
    if (contains(u)) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystals
