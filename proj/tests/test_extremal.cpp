#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crystals/extremal.hpp"
#include "crystals/golden.hpp"

using namespace crystals;

namespace {

WeylElement s(int i, int n) { return WeylElement::simple_reflection(i, n); }

std::set<Tableau> tabs_of(const CrystalGraph& g, const CrystalSubset& x) {
  std::set<Tableau> out;
  for (int v : x.members) out.insert(g.vertex(v));
  return out;
}

// All subsets of a tiny crystal that satisfy the string property.
std::vector<CrystalSubset> all_extremal_subsets(const CrystalGraph& g) {
  const int v = g.num_vertices();
  REQUIRE(v <= 16);
  std::vector<CrystalSubset> out;
  for (int mask = 0; mask < (1 << v); ++mask) {
    std::vector<int> ids;
    for (int k = 0; k < v; ++k)
      if (mask & (1 << k)) ids.push_back(k);
    CrystalSubset x{&g.structure(), ids};
    if (is_extremal(x).extremal) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("string property verdicts") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    for (const auto& w : engine.coset_reps())
      CHECK(is_extremal(engine.demazure_crystal(w)).extremal);
    CHECK(is_extremal(g.subset_of(golden::weak_atom_subset())).extremal);

    // the head together with the bottom of its 2-string, middle missing
    const int top = g.highest();
    const int bottom = g.structure().f_star(2, top);
    const auto broken = CrystalSubset::of(g.structure(), {top, bottom});
    const auto verdict = is_extremal(broken);
    CHECK_FALSE(verdict.extremal);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->index == 2);
    CHECK(verdict.violation->string_vertices == g.structure().string_through(2, top));
  }

  TEST_CASE("lowest weight elements") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    const CrystalSubset top{&g.structure(), {g.highest()}};
    CHECK(lowest_weight_elements(top) == std::vector<int>{g.highest()});

    const auto bw = engine.demazure_crystal(s(1, 3) * s(2, 3));
    const auto lows = lowest_weight_elements(bw);
    std::set<Tableau> low_tabs;
    for (int v : lows) low_tabs.insert(g.vertex(v));
    CHECK(low_tabs == std::set<Tableau>{Tableau({{1, 1, 2}, {2, 2}}), Tableau({{1, 2, 2}, {2, 3}}),
                                        Tableau({{2, 2, 2}, {3, 3}})});
    // one of them does not have an extremal weight
    CHECK(g.structure().weight(g.index_of(Tableau({{1, 2, 2}, {2, 3}}))) ==
          std::vector<int>{1, 3, 1});

    const auto full = g.full_subset();
    CHECK(lowest_weight_elements(full) ==
          std::vector<int>{g.index_of(Tableau({{2, 2, 3}, {3, 3}}))});

    const int bottom = g.structure().f_star(2, g.highest());
    CHECK_THROWS_AS(lowest_weight_elements(CrystalSubset::of(g.structure(), {g.highest(), bottom})),
                    std::invalid_argument);
  }

  TEST_CASE("raising closure") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    CHECK(e_closure(g.structure(), {g.highest()}).members == std::vector<int>{g.highest()});
    // an extremal subset is recovered from its lowest weight elements
    for (const auto& w : engine.coset_reps()) {
      const auto bw = engine.demazure_crystal(w);
      CHECK(e_closure(g.structure(), lowest_weight_elements(bw)) == bw);
    }
    const int lowest = g.index_of(Tableau({{2, 2, 3}, {3, 3}}));
    CHECK(e_closure(g.structure(), {lowest}).size() == 15);
  }

  TEST_CASE("extremal closure") {
    const CrystalGraph g(Partition({3, 2}), 3);
    CHECK(extremal_closure(g.structure(), {g.highest()}).members ==
          std::vector<int>{g.highest()});

    const int seed = g.index_of(Tableau({{1, 2, 2}, {2, 3}}));
    const auto closed = extremal_closure(g.structure(), {seed});
    CHECK(tabs_of(g, closed) ==
          std::set<Tableau>{Tableau({{1, 1, 1}, {2, 2}}), Tableau({{1, 1, 1}, {2, 3}}),
                            Tableau({{1, 1, 1}, {3, 3}}), Tableau({{1, 1, 2}, {2, 3}}),
                            Tableau({{1, 2, 2}, {2, 3}})});
    CHECK(is_extremal(closed).extremal);
    // minimality: every extremal superset of the seed contains the closure
    for (const auto& x : all_extremal_subsets(g))
      if (x.contains(seed)) CHECK(subset_intersection(x, closed) == closed);
  }

  TEST_CASE("strong atom positivity") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    const auto on_demazure =
        strong_atom_positivity(engine, engine.demazure_crystal(s(1, 3) * s(2, 3)));
    REQUIRE(on_demazure.has_value());
    std::vector<WeylElement> expected;
    for (const auto& w : engine.coset_reps())
      if (bruhat_leq(w, s(1, 3) * s(2, 3))) expected.push_back(w);
    std::sort(expected.begin(), expected.end());
    CHECK(*on_demazure == expected);

    CHECK_FALSE(strong_atom_positivity(engine, g.subset_of(golden::weak_atom_subset())).has_value());
    const auto on_empty = strong_atom_positivity(engine, CrystalSubset{&g.structure(), {}});
    REQUIRE(on_empty.has_value());
    CHECK(on_empty->empty());
  }

  TEST_CASE("weak atom positivity") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const auto report = weak_atom_positivity(character(g.subset_of(golden::weak_atom_subset())));
    CHECK(report.nonnegative);
    CHECK(report.coefficients ==
          std::map<Exponents, long long>{{{3, 2, 0}, 1}, {{3, 0, 2}, 1}, {{1, 3, 1}, 1}});
    CHECK(weak_atom_positivity(Polynomial::monomial({3, 2, 0})).nonnegative);
  }

  TEST_CASE("strong positivity implies weak positivity") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    std::vector<CrystalSubset> pool;
    for (const auto& w : engine.coset_reps()) pool.push_back(engine.demazure_crystal(w));
    pool.push_back(subset_union(pool[2], pool[3]));
    pool.push_back(g.full_subset());
    for (const auto& x : pool)
      if (strong_atom_positivity(engine, x).has_value())
        CHECK(weak_atom_positivity(character(x)).nonnegative);
  }

  TEST_CASE("unions and intersections stay extremal") {
    const CrystalGraph g(Partition({3, 2}), 3);
    const DemazureEngine engine(g);
    std::vector<CrystalSubset> pool;
    for (const auto& w : engine.coset_reps()) pool.push_back(engine.demazure_crystal(w));
    pool.push_back(g.subset_of(golden::weak_atom_subset()));
    for (const auto& a : pool)
      for (const auto& b : pool) {
        CHECK(is_extremal(subset_union(a, b)).extremal);
        CHECK(is_extremal(subset_intersection(a, b)).extremal);
      }
  }

  TEST_CASE("extremal subsets contain the top and are connected") {
    const CrystalGraph g(Partition({2, 1}), 3);
    for (const auto& x : all_extremal_subsets(g)) {
      if (x.size() == 0) continue;
      CHECK(x.contains(g.highest()));
      // connectivity via edges inside the subset
      std::vector<char> seen(g.num_vertices(), 0);
      std::vector<int> stack{x.members.front()};
      seen[stack.front()] = 1;
      int reached = 0;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int i = 1; i <= 2; ++i)
          for (int u : {g.structure().f(i, v), g.structure().e(i, v)})
            if (u != -1 && x.contains(u) && !seen[u]) {
              seen[u] = 1;
              stack.push_back(u);
            }
      }
      CHECK(reached == x.size());
      CHECK(e_closure(g.structure(), lowest_weight_elements(x)) == x);
    }
  }

  TEST_CASE("singly generated extremal subsets are rigid") {
    const CrystalGraph g(Partition({2, 1}), 3);
    const auto all = all_extremal_subsets(g);
    for (const auto& x : all) {
      if (x.size() == 0) continue;
      for (int seed : x.members) {
        if (!(e_closure(g.structure(), {seed}) == x)) continue;
        // the generator carries an extremal weight: it is the unique vertex
        // of a weight in the orbit of the shape
        const auto wt = g.structure().weight(seed);
        auto sorted = wt;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        CHECK(sorted == std::vector<int>{2, 1, 0});
        int same_weight = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
          if (g.structure().weight(v) == wt) ++same_weight;
        CHECK(same_weight == 1);
        // no other extremal subset shares its character
        for (const auto& y : all)
          if (character(y) == character(x)) CHECK(y == x);
      }
    }
  }

  TEST_CASE("atom-positive but not extremal") {
    const CrystalGraph g(Partition({3, 2, 1}), 4);
    const DemazureEngine engine(g);
    const std::vector<int> lambda = {3, 2, 1, 0};
    const WeylElement sj = s(2, 4);
    const WeylElement sij = s(1, 4) * s(2, 4);
    const WeylElement skij = s(3, 4) * s(1, 4) * s(2, 4);
    CHECK(s(1, 4) * s(3, 4) == s(3, 4) * s(1, 4));
    for (const auto& w : {sj, sij, skij}) CHECK(is_min_rep(w, lambda));

    CrystalSubset x = engine.atom_via_difference(WeylElement::identity(4));
    for (const auto& w : {sj, sij, skij})
      x = subset_union(x, engine.atom_via_difference(w));
    const auto strong = strong_atom_positivity(engine, x);
    REQUIRE(strong.has_value());
    CHECK(strong->size() == 4);
    CHECK_FALSE(is_extremal(x).extremal);
  }
}
