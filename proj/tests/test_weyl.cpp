#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "crystals/weyl.hpp"

using namespace crystals;

namespace {

WeylElement s(int i, int n) { return WeylElement::simple_reflection(i, n); }

// Independent oracle: all words of the given length over 1..n-1 whose product
// is w.
std::set<ReducedWord> words_by_search(const WeylElement& w) {
  const int n = w.rank();
  const int len = w.length();
  std::set<ReducedWord> out;
  ReducedWord word(len);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      if (word_product(word, n) == w) out.insert(word);
      return;
    }
    for (int i = 1; i <= n - 1; ++i) {
      word[pos] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Independent oracle for the Bruhat order: some subword of the canonical word
// of w is a reduced word of v.
bool bruhat_by_subwords(const WeylElement& v, const WeylElement& w) {
  const ReducedWord word = canonical_word(w);
  const int k = static_cast<int>(word.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    ReducedWord sub;
    for (int j = 0; j < k; ++j)
      if (mask & (1 << j)) sub.push_back(word[j]);
    if (static_cast<int>(sub.size()) == v.length() && word_product(sub, w.rank()) == v) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("simple reflections") {
    CHECK(s(1, 3).one_line() == std::vector<int>{2, 1, 3});
    CHECK(s(2, 3).one_line() == std::vector<int>{1, 3, 2});
    CHECK(s(3, 4).one_line() == std::vector<int>{1, 2, 4, 3});
    CHECK_THROWS_AS(s(0, 3), std::out_of_range);
    CHECK_THROWS_AS(s(3, 3), std::out_of_range);
    CHECK_THROWS_AS(WeylElement({1, 1, 3}), std::invalid_argument);
  }

  TEST_CASE("length") {
    CHECK(WeylElement::identity(4).length() == 0);
    CHECK(s(1, 3).length() == 1);
    CHECK(WeylElement::longest(4).length() == 6);
    for (const auto& w : symmetric_group(4)) {
      // every reduced word has the inversion-count length
      for (const auto& word : reduced_words(w)) CHECK(static_cast<int>(word.size()) == w.length());
    }
  }

  TEST_CASE("products compose right factor first") {
    // s1 * s2 applied to a weight moves it as s2 first, then s1
    const WeylElement w = s(1, 3) * s(2, 3);
    CHECK(w.one_line() == std::vector<int>{2, 3, 1});
    CHECK(w.act({3, 2, 0}) == std::vector<int>{0, 3, 2});
    CHECK(s(2, 3).act({3, 2, 0}) == std::vector<int>{3, 0, 2});
    CHECK(w.act({5, 5, 5}) == std::vector<int>{5, 5, 5});
    CHECK_THROWS_AS(w.act({1, 2}), std::invalid_argument);
    for (const auto& a : symmetric_group(3))
      for (const auto& b : symmetric_group(3))
        CHECK((a * b).act({4, 1, 0}) == a.act(b.act({4, 1, 0})));
  }

  TEST_CASE("reduced words against exhaustive search") {
    CHECK(reduced_words(WeylElement::identity(3)) == std::vector<ReducedWord>{{}});
    // the longest element of S_3 has exactly the two braid-related words
    const auto w0_words = words_by_search(WeylElement::longest(3));
    CHECK(w0_words == std::set<ReducedWord>{{1, 2, 1}, {2, 1, 2}});
    // s1 * s2 (s2 applied first) has exactly one word
    CHECK(words_by_search(s(1, 3) * s(2, 3)) == std::set<ReducedWord>{{2, 1}});
    for (const auto& w : symmetric_group(4)) {
      const auto found = reduced_words(w);
      CHECK(std::set<ReducedWord>(found.begin(), found.end()) == words_by_search(w));
      CHECK(std::is_sorted(found.begin(), found.end()));
      CHECK(canonical_word(w) == found.front());
      for (const auto& word : found) CHECK(word_product(word, 4) == w);
    }
  }

  TEST_CASE("bruhat order basics") {
    const WeylElement id = WeylElement::identity(3);
    for (const auto& w : symmetric_group(3)) CHECK(bruhat_leq(id, w));
    CHECK_FALSE(bruhat_leq(s(1, 3), s(2, 3)));
    CHECK_FALSE(bruhat_leq(s(2, 3), s(1, 3)));
    const WeylElement a = s(1, 3) * s(2, 3), b = s(2, 3) * s(1, 3);
    CHECK_FALSE(bruhat_leq(a, b));
    CHECK_FALSE(bruhat_leq(b, a));
    CHECK_THROWS_AS(bruhat_leq(WeylElement::identity(3), WeylElement::identity(4)),
                    std::invalid_argument);
  }

  TEST_CASE("bruhat order is a partial order agreeing with the subword oracle") {
    for (int n : {3, 4}) {
      const auto group = symmetric_group(n);
      for (const auto& v : group) {
        CHECK(bruhat_leq(v, v));
        for (const auto& w : group) {
          CHECK(bruhat_leq(v, w) == bruhat_by_subwords(v, w));
          if (bruhat_leq(v, w) && bruhat_leq(w, v)) CHECK(v == w);
          for (const auto& u : group)
            if (bruhat_leq(u, v) && bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
        }
      }
    }
  }

  TEST_CASE("minimal coset representatives") {
    CHECK(min_coset_reps({3, 2, 0}).size() == 6);
    CHECK(min_coset_reps({3, 2, 0, 0}).size() == 12);
    CHECK(min_coset_reps({1, 1, 1}) == std::vector<WeylElement>{WeylElement::identity(3)});

    // oracle: group all of S_n by the image of lambda; each orbit point has a
    // unique shortest preimage, and it is the computed representative
    for (const std::vector<int>& lambda :
         {std::vector<int>{3, 2, 0}, std::vector<int>{2, 2, 0}, std::vector<int>{3, 2, 0, 0}}) {
      const int n = static_cast<int>(lambda.size());
      std::map<std::vector<int>, WeylElement> best;
      for (const auto& w : symmetric_group(n)) {
        auto beta = w.act(lambda);
        auto it = best.find(beta);
        if (it == best.end()) {
          best.emplace(beta, w);
        } else if (w.length() < it->second.length()) {
          it->second = w;
        } else if (w.length() == it->second.length()) {
          CHECK(w == it->second);  // minimum must be unique
        }
      }
      const auto reps = min_coset_reps(lambda);
      CHECK(reps.size() == best.size());
      for (const auto& rep : reps) {
        CHECK(best.at(rep.act(lambda)) == rep);
        CHECK(is_min_rep(rep, lambda));
      }
      for (const auto& w : symmetric_group(n)) {
        CHECK(min_coset_rep(w, lambda).act(lambda) == w.act(lambda));
        CHECK(min_coset_rep(w, lambda).length() <= w.length());
      }
    }
  }

  TEST_CASE("lower order ideals") {
    const WeylElement id = WeylElement::identity(3);
    CHECK(LowerOrderIdeal({id}).members() == std::vector<WeylElement>{id});
    CHECK(LowerOrderIdeal({WeylElement::longest(3)}).members().size() == 6);
    const LowerOrderIdeal two({s(1, 3) * s(2, 3), s(2, 3) * s(1, 3)});
    CHECK(two.members().size() == 5);
    CHECK_FALSE(two.contains(WeylElement::longest(3)));
    // dominated generators are discarded
    const LowerOrderIdeal reduced({id, s(1, 3)});
    CHECK(reduced.generators() == std::vector<WeylElement>{s(1, 3)});
    CHECK_THROWS_AS(LowerOrderIdeal({}), std::invalid_argument);
  }
}
