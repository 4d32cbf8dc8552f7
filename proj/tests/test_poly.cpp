#include <doctest.h>

#include <random>
#include <stdexcept>

#include "crystals/poly.hpp"
#include "crystals/tableau.hpp"

using namespace crystals;

namespace {

Polynomial mono(const Exponents& e) { return Polynomial::monomial(e); }

Polynomial from_terms(std::vector<std::pair<Exponents, long long>> terms) {
  Polynomial p(static_cast<int>(terms.front().first.size()));
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Polynomial random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> nterms(1, 5), expo(0, 4), coeff(-3, 3);
  Polynomial p(nvars);
  for (int t = 0, count = nterms(rng); t < count; ++t) {
    Exponents e(nvars);
    for (int j = 0; j < nvars; ++j) e[j] = expo(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    p.add_term(e, c);
  }
  return p;
}

Polynomial ssyt_character(const Partition& shape, int n) {
  Polynomial p(n);
  for (const auto& t : enumerate_ssyt(shape, n)) p.add_term(t.weight(n), 1);
  return p;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("divided difference on monomials") {
    CHECK(divided_difference(1, mono({2, 2})) == mono({2, 2}));
    CHECK(divided_difference(1, mono({3, 2})) == from_terms({{{3, 2}, 1}, {{2, 3}, 1}}));
    CHECK(divided_difference(2, mono({3, 2, 0})) ==
          from_terms({{{3, 2, 0}, 1}, {{3, 1, 1}, 1}, {{3, 0, 2}, 1}}));
    // the string through the dominant monomial, by SSYT enumeration
    CHECK(divided_difference(1, mono({3, 2})) == ssyt_character(Partition({3, 2}), 2));
    CHECK_THROWS_AS(divided_difference(2, mono({3, 2})), std::out_of_range);
  }

  TEST_CASE("demazure operator") {
    CHECK(demazure_operator(1, mono({2, 2})) == mono({2, 2}));
    CHECK(demazure_operator(1, mono({3, 2})) == divided_difference(1, mono({3, 2})));
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 3;
      const Polynomial f = random_poly(rng, n);
      for (int i = 1; i <= n - 1; ++i) {
        CHECK(demazure_operator(i, f) == divided_difference(i, f));
        CHECK(demazure_operator(i, demazure_operator(i, f)) == demazure_operator(i, f));
      }
    }
  }

  TEST_CASE("atom operator") {
    CHECK(atom_operator(1, mono({2, 2})).is_zero());
    CHECK(atom_operator(1, mono({3, 2})) == mono({2, 3}));
    CHECK(atom_operator(2, mono({3, 2, 0})) == from_terms({{{3, 1, 1}, 1}, {{3, 0, 2}, 1}}));
  }

  TEST_CASE("operator identities on random polynomials") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 80; ++trial) {
      const int n = 2 + trial % 3;
      const Polynomial f = random_poly(rng, n);
      for (int i = 1; i <= n - 1; ++i) {
        const Polynomial pi = divided_difference(i, f);
        CHECK(divided_difference(i, pi) == pi);
        const Polynomial th = atom_operator(i, f);
        CHECK(atom_operator(i, th) == th * -1);
        for (int j = 1; j <= n - 1; ++j) {
          if (i == j + 1 || j == i + 1) {
            CHECK(divided_difference(i, divided_difference(j, divided_difference(i, f))) ==
                  divided_difference(j, divided_difference(i, divided_difference(j, f))));
          } else if (i != j) {
            CHECK(divided_difference(i, divided_difference(j, f)) ==
                  divided_difference(j, divided_difference(i, f)));
          }
        }
      }
    }
  }

  TEST_CASE("key polynomials") {
    CHECK(key_polynomial({3, 2, 0}) == mono({3, 2, 0}));
    CHECK(key_polynomial({0, 3, 2}) ==
          from_terms({{{3, 2, 0}, 1},
                      {{3, 1, 1}, 1},
                      {{3, 0, 2}, 1},
                      {{2, 3, 0}, 1},
                      {{2, 2, 1}, 1},
                      {{1, 3, 1}, 1},
                      {{2, 1, 2}, 1},
                      {{1, 2, 2}, 1},
                      {{0, 3, 2}, 1}}));
    // dominant-reversed one-row shape gives the full Schur polynomial
    const Polynomial h5 = key_polynomial({0, 0, 5});
    CHECK(h5 == ssyt_character(Partition({5}), 3));
    CHECK(h5.terms().size() == 21);
  }

  TEST_CASE("atom polynomials") {
    CHECK(atom_polynomial({3, 2, 0}) == mono({3, 2, 0}));
    CHECK(atom_polynomial({3, 0, 2}) == from_terms({{{3, 1, 1}, 1}, {{3, 0, 2}, 1}}));
    CHECK(atom_polynomial({0, 3, 2}) ==
          from_terms(
              {{{2, 2, 1}, 1}, {{1, 3, 1}, 1}, {{2, 1, 2}, 1}, {{1, 2, 2}, 1}, {{0, 3, 2}, 1}}));
  }

  TEST_CASE("expansion in the atom basis") {
    CHECK(expand_in_atoms(mono({3, 2, 0})) ==
          std::map<Exponents, long long>{{{3, 2, 0}, 1}});
    CHECK(expand_in_atoms(key_polynomial({0, 3, 2})) ==
          std::map<Exponents, long long>{
              {{3, 2, 0}, 1}, {{3, 0, 2}, 1}, {{2, 3, 0}, 1}, {{0, 3, 2}, 1}});
    // character that mixes atoms of two different dominant shapes
    const Polynomial mixed = from_terms(
        {{{3, 2, 0}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 1}, {{1, 3, 1}, 1}, {{3, 0, 2}, 1}});
    CHECK(expand_in_atoms(mixed) ==
          std::map<Exponents, long long>{{{3, 2, 0}, 1}, {{3, 0, 2}, 1}, {{1, 3, 1}, 1}});
    CHECK(expand_in_atoms(Polynomial(3)).empty());
  }

  TEST_CASE("atom basis roundtrip") {
    for (int n = 1; n <= 4; ++n)
      for (int degree = 0; degree <= 5; ++degree)
        for (const auto& beta : compositions(degree, n)) {
          const auto expansion = expand_in_atoms(atom_polynomial(beta));
          CHECK(expansion == std::map<Exponents, long long>{{beta, 1}});
        }
  }

  TEST_CASE("expansion is linear") {
    std::mt19937 rng(13371337);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = random_poly(rng, 3), g = random_poly(rng, 3);
      auto sum = expand_in_atoms(f);
      for (const auto& [beta, c] : expand_in_atoms(g)) {
        sum[beta] += c;
        if (sum[beta] == 0) sum.erase(beta);
      }
      CHECK(expand_in_atoms(f + g) == sum);
      auto tripled = expand_in_atoms(f);
      for (auto& [beta, c] : tripled) c *= 3;
      CHECK(expand_in_atoms(f * 3) == tripled);
    }
  }

  TEST_CASE("pretty printing") {
    CHECK(mono({3, 2, 0}).pretty() == "t1^3 t2^2");
    CHECK(from_terms({{{3, 2}, 1}, {{2, 3}, 1}}).pretty() == "t1^3 t2^2 + t1^2 t2^3");
    CHECK(from_terms({{{0, 0}, -2}, {{1, 0}, 1}}).pretty() == "t1 - 2");
    CHECK(Polynomial(2).pretty() == "0");
  }
}
