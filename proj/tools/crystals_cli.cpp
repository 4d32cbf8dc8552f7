#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "crystals/extremal.hpp"
#include "crystals/golden.hpp"
#include "crystals/json_io.hpp"
#include "crystals/tensor.hpp"

using namespace crystals;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw CLI::ValidationError("expected a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

// "3,2,0@4" -> shape (3,2) at rank 4; the rank defaults to the list length.
std::pair<Partition, int> parse_crystal_spec(const std::string& spec) {
  const auto at = spec.find('@');
  const std::string shape_part = at == std::string::npos ? spec : spec.substr(0, at);
  const std::vector<int> parts = parse_ints(shape_part);
  int rank = static_cast<int>(parts.size());
  if (at != std::string::npos) rank = std::stoi(spec.substr(at + 1));
  return {Partition(parts), rank};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json subset_report(const CrystalGraph& g, const CrystalSubset& x) {
  json j;
  j["members"] = subset_to_json(g, x);
  j["size"] = x.size();
  const Polynomial chi = character(x);
  j["character"] = to_json(chi);
  j["character_pretty"] = chi.pretty();
  return j;
}

json weyl_word_json(const WeylElement& w) {
  return json{{"one_line", w.one_line()}, {"word", canonical_word(w)}};
}

// ---- reproduce targets ------------------------------------------------

bool report(bool ok, const std::string& what) {
  std::cout << (ok ? "  ok: " : "  MISMATCH: ") << what << "\n";
  return ok;
}

std::set<Tableau> as_set(const std::vector<Tableau>& tabs) {
  return std::set<Tableau>(tabs.begin(), tabs.end());
}

std::set<Tableau> tabs_of(const CrystalGraph& g, const CrystalSubset& x) {
  std::set<Tableau> out;
  for (int v : x.members) out.insert(g.vertex(v));
  return out;
}

bool reproduce_figure1() {
  std::cout << "figure1: the shape (3,2,0) Demazure crystal of the word (2,1) and its atoms\n";
  const CrystalGraph g(Partition({3, 2}), 3);
  const DemazureEngine engine(g);
  const WeylElement w =
      WeylElement::simple_reflection(1, 3) * WeylElement::simple_reflection(2, 3);
  const CrystalSubset bw = engine.demazure_crystal(w);
  bool ok = report(bw.size() == 9, "9 vertices");
  ok &= report(tabs_of(g, bw) == as_set(golden::figure1_demazure()), "vertex set");
  const struct {
    const char* name;
    ReducedWord word;
    const golden::TableauList& expected;
  } blocks[] = {
      {"atom of the identity", {}, golden::figure1_atom_id()},
      {"atom of s2", {2}, golden::figure1_atom_s2()},
      {"atom of s1", {1}, golden::figure1_atom_s1()},
      {"atom of s1*s2", {2, 1}, golden::figure1_atom_s1s2()},
  };
  std::string sizes;
  for (const auto& block : blocks) {
    const CrystalSubset atom = engine.atom_via_operators_word(block.word);
    ok &= report(tabs_of(g, atom) == as_set(block.expected), block.name);
    ok &= report(atom == engine.atom_via_difference(word_product(block.word, 3)),
                 std::string(block.name) + " agrees with the set-difference route");
    if (!sizes.empty()) sizes += ",";
    sizes += std::to_string(atom.size());
  }
  std::cout << "  atom block sizes: " << sizes << "\n";
  ok &= report(sizes == "1,2,1,5", "block sizes 1,2,1,5");
  return ok;
}

bool reproduce_figure2() {
  std::cout << "figure2: a 17-vertex extremal subset of the shape (3,2,0,0) crystal whose\n"
               "character is not a nonnegative sum of atom polynomials\n";
  const CrystalGraph g(Partition({3, 2}), 4);
  const DemazureEngine engine(g);
  const CrystalSubset x = g.subset_of(golden::figure2_subset());
  const WeylElement w = word_product({2, 3, 1}, 4);
  const CrystalSubset ambient = engine.demazure_crystal(w);
  bool ok = report(x.size() == 17, "17 vertices");
  ok &= report(ambient.size() == 20, "ambient Demazure crystal has 20 vertices");
  ok &= report(subset_intersection(x, ambient) == x, "subset of the Demazure crystal");
  ok &= report(is_extremal(x).extremal, "extremal");
  const AtomExpansion expansion = weak_atom_positivity(character(x));
  std::cout << "  atom expansion:\n";
  for (const auto& [beta, c] : expansion.coefficients) {
    std::cout << "    " << json(beta).dump() << " -> " << c << "\n";
  }
  ok &= report(!expansion.nonnegative, "not weakly atom-positive");
  const Exponents negative_at = {1, 3, 0, 1};
  const auto it = expansion.coefficients.find(negative_at);
  ok &= report(it != expansion.coefficients.end() && it->second == -1,
               "coefficient -1 on the (1,3,0,1) atom");
  return ok;
}

bool reproduce_weak_atom() {
  std::cout << "ex-weak-atom: a 5-vertex subset of the shape (3,2,0) crystal that is weakly\n"
               "but not strongly atom-positive\n";
  const CrystalGraph g(Partition({3, 2}), 3);
  const DemazureEngine engine(g);
  const CrystalSubset x = g.subset_of(golden::weak_atom_subset());
  bool ok = report(x.size() == 5, "5 vertices");
  ok &= report(is_extremal(x).extremal, "extremal");
  const AtomExpansion expansion = weak_atom_positivity(character(x));
  ok &= report(expansion.nonnegative, "weakly atom-positive");
  const std::map<Exponents, long long> expected = {{{3, 2, 0}, 1}, {{3, 0, 2}, 1}, {{1, 3, 1}, 1}};
  ok &= report(expansion.coefficients == expected,
               "expansion is the (3,2,0) + (3,0,2) + (1,3,1) atom sum");
  ok &= report(!strong_atom_positivity(engine, x).has_value(), "not a union of atom blocks");
  return ok;
}

bool reproduce_atom_positive_not_extremal() {
  std::cout << "ex-4.5: a union of four atoms in the shape (3,2,1,0) crystal that fails the\n"
               "string property\n";
  const CrystalGraph g(Partition({3, 2, 1}), 4);
  const DemazureEngine engine(g);
  const std::vector<int> lambda = {3, 2, 1, 0};
  const WeylElement sj = word_product({2}, 4);
  const WeylElement sij = word_product({2, 1}, 4);
  const WeylElement skij = word_product({2, 1, 3}, 4);
  bool ok = report(word_product({1, 3}, 4) == word_product({3, 1}, 4),
                   "the outer reflections commute");
  for (const auto& w : {sj, sij, skij})
    ok &= report(is_min_rep(w, lambda), w.to_string() + " is a minimal coset representative");
  CrystalSubset x = engine.atom_via_difference(WeylElement::identity(4));
  for (const auto& w : {sj, sij, skij}) x = subset_union(x, engine.atom_via_difference(w));
  const auto strong = strong_atom_positivity(engine, x);
  ok &= report(strong.has_value() && strong->size() == 4, "union of exactly four atom blocks");
  const auto verdict = is_extremal(x);
  ok &= report(!verdict.extremal, "not extremal");
  if (verdict.violation)
    std::cout << "  witness: a " << verdict.violation->index << "-string meets the subset in a "
              << "non-head proper subset\n";
  return ok;
}

bool reproduce_obstruction() {
  std::cout << "ex-4.8: a shape (4,4,3,2,0,0) vertex at the top or bottom of each of its\n"
               "strings that cannot be a lowest weight element of any extremal subset\n";
  const CrystalGraph g(Partition({4, 4, 3, 2}), 6);
  const Tableau& x = golden::obstruction_x();
  const int xv = g.index_of(x);
  bool ok = true;
  for (int i : {1, 2})
    ok &= report(g.structure().f(i, xv) == -1, "no lowering edge for index " + std::to_string(i));
  for (int i : {3, 4, 5})
    ok &= report(g.structure().e(i, xv) == -1, "no raising edge for index " + std::to_string(i));
  const int e2 = g.structure().e(2, xv);
  ok &= report(e2 != -1 && g.vertex(e2) == golden::obstruction_e2x(), "raising by 2");
  const int f3e2 = e2 == -1 ? -1 : g.structure().f(3, e2);
  ok &= report(f3e2 != -1 && g.vertex(f3e2) == golden::obstruction_f3e2x(),
               "then lowering by 3");
  const int f2f3e2 = f3e2 == -1 ? -1 : g.structure().f(2, f3e2);
  ok &= report(f2f3e2 != -1 && g.vertex(f2f3e2) == golden::obstruction_f3x(),
               "then lowering by 2 lands on the lowering of the start by 3");
  ok &= report(f2f3e2 == g.structure().f(3, xv), "chain closes");
  const CrystalSubset closure = extremal_closure(g.structure(), {xv});
  ok &= report(closure.contains(g.structure().f(3, xv)),
               "the minimal extremal superset contains that lowering");
  return ok;
}

bool reproduce_character_twins() {
  std::cout << "ex-4.9: two distinct extremal subsets of the shape (3,1,1,0,0,0) crystal with\n"
               "the same character\n";
  const CrystalGraph g(Partition({3, 1, 1}), 6);
  const auto comps = levi_branch(g.structure(), {1, 2, 3, 4});
  CrystalSubset x{&g.structure(), {}};
  for (const auto& comp : comps)
    if (comp.contains(g.highest())) x = comp;
  bool ok = report(x.size() == 126, "branched component of the top has 126 vertices");
  const CrystalSubset y1 = g.subset_of(golden::character_twins_y1());
  const CrystalSubset y2 = g.subset_of(golden::character_twins_y2());
  ok &= report(subset_intersection(x, y1).size() == 0 && subset_intersection(x, y2).size() == 0,
               "both attachments are disjoint from the component");
  const CrystalSubset xy1 = subset_union(x, y1), xy2 = subset_union(x, y2);
  ok &= report(is_extremal(xy1).extremal && is_extremal(xy2).extremal, "both unions are extremal");
  ok &= report(character(xy1) == character(xy2), "equal characters");
  const int differ = subset_difference(xy1, xy2).size() + subset_difference(xy2, xy1).size();
  ok &= report(differ == 4, "the unions differ in exactly 4 vertices");
  return ok;
}

int run_reproduce(const std::string& target) {
  bool ok = false;
  if (target == "figure1") {
    ok = reproduce_figure1();
  } else if (target == "figure2") {
    ok = reproduce_figure2();
  } else if (target == "ex-weak-atom") {
    ok = reproduce_weak_atom();
  } else if (target == "ex-4.5") {
    ok = reproduce_atom_positive_not_extremal();
  } else if (target == "ex-4.8") {
    ok = reproduce_obstruction();
  } else if (target == "ex-4.9") {
    ok = reproduce_character_twins();
  } else {
    std::cerr << "unknown reproduce target: " << target << "\n";
    return 2;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type A crystal combinatorics: tableau crystals, Demazure crystals and atoms, "
               "extremal subsets, Kashiwara tensor products"};
  app.require_subcommand(1);

  std::string shape_str, crystal_spec, word_str, comp_str, words_str, poly_file, subset_file;
  std::string left_str, right_str, demazure_str, reproduce_target;
  int rank = 0;
  bool want_dot = false, want_json = false, want_adg = false;

  auto* crystal_cmd = app.add_subcommand("crystal", "Generate a highest weight crystal");
  crystal_cmd->add_option("--shape", shape_str, "partition, e.g. 3,2,0")->required();
  crystal_cmd->add_option("--rank", rank, "number of variables")->required();
  crystal_cmd->add_flag("--dot", want_dot, "emit DOT");
  crystal_cmd->add_flag("--json", want_json, "emit the full graph as JSON");

  auto* demazure_cmd = app.add_subcommand("demazure", "Demazure crystal of a word");
  demazure_cmd->add_option("--shape", shape_str)->required();
  demazure_cmd->add_option("--rank", rank)->required();
  demazure_cmd->add_option("--word", word_str,
                           "letters in application order (first letter acts first)");

  auto* atom_cmd = app.add_subcommand("atom", "Crystal Demazure atom");
  atom_cmd->add_option("--shape", shape_str);
  atom_cmd->add_option("--rank", rank);
  atom_cmd->add_option("--word", word_str, "letters in application order");
  atom_cmd->add_option("--composition", comp_str, "weak composition, e.g. 0,3,2");

  auto* schubert_cmd = app.add_subcommand("schubert", "Union of Demazure crystals");
  schubert_cmd->add_option("--shape", shape_str)->required();
  schubert_cmd->add_option("--rank", rank)->required();
  schubert_cmd->add_option("--words", words_str, "generator words separated by ':'")->required();

  auto* keypoly_cmd = app.add_subcommand("keypoly", "Key polynomial of a weak composition");
  keypoly_cmd->add_option("--composition", comp_str)->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in atom polynomials");
  expand_cmd->add_option("--poly", poly_file, "JSON file: list of {exp, coeff}")->required();

  auto* check_cmd = app.add_subcommand("extremal-check", "Analyze a subset of a crystal");
  check_cmd->add_option("--crystal", crystal_spec, "shape[@rank], e.g. 3,2,0@3")->required();
  check_cmd->add_option("--subset", subset_file, "JSON file: list of tableaux")->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two crystals");
  tensor_cmd->add_option("--left", left_str, "left shape[@rank]")->required();
  tensor_cmd->add_option("--right", right_str, "right shape[@rank]")->required();
  tensor_cmd->add_option("--demazure", demazure_str,
                         "pair of words V:W selecting Demazure subsets of the factors");
  tensor_cmd->add_flag("--adg", want_adg, "report the extremality / direct-sum verdict");

  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "Recompute an embedded worked example and diff against golden data");
  reproduce_cmd
      ->add_option("target", reproduce_target,
                   "figure1|figure2|ex-weak-atom|ex-4.5|ex-4.8|ex-4.9")
      ->required();

  try {
    app.parse(argc, argv);

    if (crystal_cmd->parsed()) {
      const CrystalGraph g(Partition(parse_ints(shape_str)), rank);
      if (want_dot) {
        std::cout << g.to_dot();
      } else if (want_json) {
        emit(crystal_to_json(g));
      } else {
        json j;
        j["shape"] = g.shape().parts();
        j["rank"] = g.rank();
        j["vertex_count"] = g.num_vertices();
        j["character_pretty"] = g.character().pretty();
        emit(j);
      }
    } else if (demazure_cmd->parsed()) {
      const CrystalGraph g(Partition(parse_ints(shape_str)), rank);
      const DemazureEngine engine(g);
      const ReducedWord word = parse_ints(word_str);
      const CrystalSubset x = engine.demazure_crystal_word(word);
      json j = subset_report(g, x);
      j["shape"] = g.shape().parts();
      j["rank"] = rank;
      j["word"] = word;
      emit(j);
    } else if (atom_cmd->parsed()) {
      json j;
      Partition shape;
      ReducedWord word;
      if (!comp_str.empty()) {
        std::vector<int> beta = parse_ints(comp_str);
        shape = Partition::sorted_from(beta);
        if (rank == 0) rank = static_cast<int>(beta.size());
        if (rank < static_cast<int>(beta.size()))
          throw CLI::ValidationError("rank below the composition length");
        beta.resize(rank, 0);
        word = canonical_word(min_rep_sending(shape.padded(rank), beta));
        j["composition"] = beta;
      } else {
        if (shape_str.empty() || rank == 0)
          throw CLI::ValidationError("atom needs --composition or both --shape and --rank");
        shape = Partition(parse_ints(shape_str));
        word = parse_ints(word_str);
      }
      const CrystalGraph g(shape, rank);
      const DemazureEngine engine(g);
      const CrystalSubset x = engine.atom_via_operators_word(word);
      j.update(subset_report(g, x));
      j["shape"] = shape.parts();
      j["rank"] = rank;
      j["word"] = word;
      emit(j);
    } else if (schubert_cmd->parsed()) {
      const CrystalGraph g(Partition(parse_ints(shape_str)), rank);
      const DemazureEngine engine(g);
      std::vector<WeylElement> generators;
      std::stringstream ss(words_str);
      std::string item;
      while (std::getline(ss, item, ':')) generators.push_back(word_product(parse_ints(item), rank));
      const LowerOrderIdeal ideal(generators);
      const CrystalSubset x = engine.schubert_crystal(ideal);
      json j = subset_report(g, x);
      j["shape"] = g.shape().parts();
      j["rank"] = rank;
      json gens = json::array();
      for (const auto& w : ideal.generators()) gens.push_back(weyl_word_json(w));
      j["generators"] = std::move(gens);
      emit(j);
    } else if (keypoly_cmd->parsed()) {
      const std::vector<int> beta = parse_ints(comp_str);
      const Polynomial p = key_polynomial(beta);
      emit(json{{"composition", beta}, {"polynomial", to_json(p)}, {"pretty", p.pretty()}});
    } else if (expand_cmd->parsed()) {
      std::ifstream in(poly_file);
      if (!in) throw CLI::ValidationError("cannot open " + poly_file);
      const Polynomial p = polynomial_from_json(json::parse(in));
      const AtomExpansion expansion = weak_atom_positivity(p);
      emit(json{{"expansion", expansion_to_json(expansion.coefficients)},
                {"weakly_atom_positive", expansion.nonnegative}});
    } else if (check_cmd->parsed()) {
      const auto [shape, n] = parse_crystal_spec(crystal_spec);
      const CrystalGraph g(shape, n);
      const DemazureEngine engine(g);
      std::ifstream in(subset_file);
      if (!in) throw CLI::ValidationError("cannot open " + subset_file);
      const CrystalSubset x = g.subset_of(tableaux_from_json(json::parse(in)));
      json j;
      j["shape"] = shape.parts();
      j["rank"] = n;
      j["size"] = x.size();
      const ExtremalVerdict verdict = is_extremal(x);
      j["extremal"] = verdict.extremal;
      if (verdict.violation) {
        json witness;
        witness["i"] = verdict.violation->index;
        witness["string"] = json::array();
        for (int v : verdict.violation->string_vertices)
          witness["string"].push_back(to_json(g.vertex(v)));
        j["witness"] = std::move(witness);
      } else {
        json lows = json::array();
        for (int v : lowest_weight_elements(x)) lows.push_back(to_json(g.vertex(v)));
        j["lowest_weight_elements"] = std::move(lows);
      }
      const auto strong = strong_atom_positivity(engine, x);
      if (strong) {
        json ws = json::array();
        for (const auto& w : *strong) ws.push_back(weyl_word_json(w));
        j["strongly_atom_positive"] = std::move(ws);
      } else {
        j["strongly_atom_positive"] = nullptr;
      }
      const AtomExpansion expansion = weak_atom_positivity(character(x));
      j["weakly_atom_positive"] = expansion.nonnegative;
      j["atom_expansion"] = expansion_to_json(expansion.coefficients);
      emit(j);
    } else if (tensor_cmd->parsed()) {
      const auto [lshape, ln] = parse_crystal_spec(left_str);
      const auto [rshape, rn] = parse_crystal_spec(right_str);
      if (ln != rn) throw CLI::ValidationError("tensor factors must have the same rank");
      const CrystalGraph left(lshape, ln), right(rshape, rn);
      if (demazure_str.empty() && !want_adg) {
        const TensorCrystal t(left, right);
        json decomposition = json::array();
        for (const auto& [nu, mult] : t.decompose())
          decomposition.push_back({{"shape", nu.parts()}, {"multiplicity", mult}});
        emit(json{{"left", lshape.parts()},
                  {"right", rshape.parts()},
                  {"rank", ln},
                  {"vertex_count", t.num_vertices()},
                  {"decomposition", std::move(decomposition)}});
      } else {
        ReducedWord vword, wword;
        if (!demazure_str.empty()) {
          const auto colon = demazure_str.find(':');
          if (colon == std::string::npos)
            throw CLI::ValidationError("--demazure expects V:W with comma-separated words");
          vword = parse_ints(demazure_str.substr(0, colon));
          wword = parse_ints(demazure_str.substr(colon + 1));
        }
        const auto result = demazure_tensor_test(left, word_product(vword, ln),
                                                 right, word_product(wword, rn));
        json pieces = json::array();
        for (const auto& piece : result.pieces) {
          json p;
          p["component_shape"] = piece.nu.parts();
          p["size"] = piece.size;
          if (piece.demazure_index)
            p["demazure"] = weyl_word_json(*piece.demazure_index);
          else
            p["demazure"] = nullptr;
          pieces.push_back(std::move(p));
        }
        emit(json{{"left", lshape.parts()},
                  {"right", rshape.parts()},
                  {"left_word", vword},
                  {"right_word", wword},
                  {"extremal", result.extremal},
                  {"direct_sum_of_demazure", result.direct_sum_of_demazure},
                  {"components", std::move(pieces)}});
      }
    } else if (reproduce_cmd->parsed()) {
      return run_reproduce(reproduce_target);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
