// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wcnest/completion.hpp"
#include "wcnest/generator.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"
#include "wcnest/translate.hpp"
#include "wcnest/weight_semantics.hpp"

using namespace wcnest;
using wcnest::test::interp;
using wcnest::test::interps;
using wcnest::test::lit;
using wcnest::test::nprog;
using wcnest::test::wprog;

namespace {

Atom atom(const std::string& name) { return Atom{name, AtomKind::kUser}; }

// Truth-table model count over the document's variables, projected onto the
// named (non-Tseitin) ones.
std::set<std::set<int>> dimacs_models_projected(const CnfDocument& doc) {
  std::set<int> original;
  for (const auto& [v, name] : doc.var_names) {
    if (!name.empty() && name[0] != '_') original.insert(v);
  }
  std::set<std::set<int>> models;
  REQUIRE(doc.num_vars <= 24);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << doc.num_vars);
       ++mask) {
    bool ok = true;
    for (const auto& clause : doc.clauses) {
      bool sat = false;
      for (int l : clause) {
        int v = l > 0 ? l : -l;
        bool val = (mask >> (v - 1)) & 1;
        if ((l > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::set<int> projected;
    for (int v : original) {
      if ((mask >> (v - 1)) & 1) projected.insert(v);
    }
    models.insert(std::move(projected));
  }
  return models;
}

}  // namespace

TEST_CASE("nonnested recognition", "[completion]") {
  REQUIRE(is_nonnested(tr_nn(wprog("0 <= {a, b} <= 1.")).output));
  REQUIRE_FALSE(is_nonnested(nprog("a :- not not a.")));
  REQUIRE_FALSE(is_nonnested(nprog("a ; b.")));
  REQUIRE_FALSE(is_nonnested(nprog("a :- (b; c).")));
  REQUIRE(is_nonnested(NProgram{}));
  REQUIRE(is_nonnested(nprog("a :- b, not c. bot :- a. -d.")));
}

TEST_CASE("completion builds per-atom equivalences", "[completion]") {
  std::vector<PropFormula> comp = completion(nprog("a :- not b."));
  REQUIRE(comp.size() == 2);
  REQUIRE(comp[0] == PropFormula::iff(PropFormula::atom(atom("a")),
                                      PropFormula::neg(PropFormula::atom(atom("b")))));
  REQUIRE(comp[1] == PropFormula::iff(PropFormula::atom(atom("b")),
                                      PropFormula::bot()));
  SECTION("classical models project to the answer sets") {
    auto models = classical_models(comp, {atom("a"), atom("b")});
    REQUIRE(models.size() == 1);
    REQUIRE(models.front() == std::set<Atom>{atom("a")});
  }
  SECTION("bot-headed rules become negated bodies") {
    std::vector<PropFormula> c2 = completion(nprog("bot :- a, not b."));
    REQUIRE(c2.back() ==
            PropFormula::neg(PropFormula::conj(
                {PropFormula::atom(atom("a")),
                 PropFormula::neg(PropFormula::atom(atom("b")))})));
  }
  SECTION("preconditions are enforced") {
    REQUIRE_THROWS_AS(completion(nprog("a :- not not b.")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(completion(nprog("-a :- b.")), std::invalid_argument);
  }
  SECTION("empty program has an empty completion") {
    REQUIRE(completion(NProgram{}).empty());
  }
}

TEST_CASE("tightness is positive-graph acyclicity", "[completion]") {
  REQUIRE(is_tight(tr_nn(wprog("0 <= {a, b} <= 1.")).output));
  REQUIRE_FALSE(is_tight(nprog("a :- b. b :- a.")));
  REQUIRE(is_tight(nprog("a :- not a.")));
  REQUIRE(is_tight(NProgram{}));
  SECTION("positive recursion through weight atoms is detected") {
    // p <- 1<={p=1} puts p on a positive cycle through its weight atom
    REQUIRE_FALSE(is_tight(tr_nn(wprog("p :- p.")).output));
    REQUIRE_FALSE(is_tight(tr_nn(wprog("p :- 1 <= {p=1}.")).output));
  }
}

TEST_CASE("Tseitin export", "[completion][dimacs]") {
  SECTION("a single fact") {
    CnfDocument doc = to_dimacs({PropFormula::atom(atom("a"))});
    REQUIRE(doc.num_vars == 1);
    REQUIRE(doc.clauses == std::vector<std::vector<int>>{{1}});
  }
  SECTION("an equivalence has two projected models") {
    CnfDocument doc = to_dimacs({PropFormula::iff(
        PropFormula::atom(atom("a")),
        PropFormula::neg(PropFormula::atom(atom("b"))))});
    REQUIRE(dimacs_models_projected(doc).size() == 2);
  }
  SECTION("bot is unsatisfiable") {
    CnfDocument doc = to_dimacs({PropFormula::bot()});
    REQUIRE(dimacs_models_projected(doc).empty());
  }
  SECTION("projection preserves the model count on random formulas") {
    Rng rng(89);
    GenParams params;
    params.max_atoms = 4;
    params.cn_percent = 0;
    for (int i = 0; i < 100; ++i) {
      NProgram p = rand_nonnested_program(rng, params);
      bool cn = false;
      for (const auto& l : occurring_literals(p)) cn = cn || l.neg;
      if (cn) continue;
      std::vector<PropFormula> comp = completion(p);
      std::vector<Atom> sig = signature(p);
      auto direct = classical_models(comp, sig);
      CnfDocument doc = to_dimacs(comp);
      if (doc.num_vars > 24) continue;
      REQUIRE(dimacs_models_projected(doc).size() == direct.size());
    }
  }
  SECTION("rendering is stable") {
    CnfDocument doc = to_dimacs({PropFormula::iff(
        PropFormula::atom(atom("a")),
        PropFormula::neg(PropFormula::atom(atom("b"))))});
    REQUIRE(dimacs_string(doc) ==
            "c map 1 a\n"
            "c map 2 b\n"
            "c map 3 _t3\n"
            "p cnf 3 5\n"
            "-3 -1 -2 0\n"
            "-3 1 2 0\n"
            "3 1 -2 0\n"
            "3 -1 2 0\n"
            "3 0\n");
  }
}

TEST_CASE("supported-model enumeration matches truth tables", "[completion]") {
  Rng rng(97);
  GenParams params;
  params.max_atoms = 4;
  params.cn_percent = 0;
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    NProgram p = rand_nonnested_program(rng, params);
    bool cn = false;
    for (const auto& l : occurring_literals(p)) cn = cn || l.neg;
    if (cn) continue;
    ++compared;
    std::vector<Atom> sig = signature(p);
    auto by_table = classical_models(completion(p), sig);
    std::vector<Interpretation> expected;
    for (const auto& m : by_table) {
      std::vector<Literal> lits;
      for (const auto& a : m) lits.push_back(Literal{a, false});
      expected.push_back(Interpretation(std::move(lits)));
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(completion_models(p) == expected);
  }
  REQUIRE(compared > 100);
}

TEST_CASE("nonnested answer sets agree with brute force", "[completion]") {
  Rng rng(101);
  GenParams params;
  params.max_atoms = 4;
  params.cn_percent = 20;
  for (int i = 0; i < 300; ++i) {
    NProgram p = rand_nonnested_program(rng, params);
    INFO(print_nested_program(p));
    REQUIRE(answer_sets_nonnested(p) == answer_sets(p));
  }
  SECTION("stable models are supported models") {
    Rng rng2(103);
    GenParams q = params;
    q.cn_percent = 0;
    for (int i = 0; i < 200; ++i) {
      NProgram p = rand_nonnested_program(rng2, q);
      auto stable = answer_sets_nonnested(p);
      auto supported = completion_models(p);
      for (const auto& z : stable) {
        REQUIRE(std::find(supported.begin(), supported.end(), z) !=
                supported.end());
      }
    }
  }
  SECTION("handles signatures far beyond the brute-force cap") {
    // chain of implications over 40 atoms
    NProgram p;
    Formula prev = Formula::lit(lit("x0"));
    p.rules.push_back(NRule{prev, Formula::top()});
    for (int i = 1; i < 40; ++i) {
      Formula cur = Formula::lit(lit("x" + std::to_string(i)));
      p.rules.push_back(NRule{cur, prev});
      prev = cur;
    }
    REQUIRE(answer_sets_nonnested(p).size() == 1);
    REQUIRE(answer_sets_nonnested(p).front().size() == 40);
  }
}

TEST_CASE("tight programs: completion models are the answer sets",
          "[completion]") {
  Rng rng(113);
  GenParams params;
  params.max_atoms = 4;
  params.cn_percent = 0;
  int tight_seen = 0;
  for (int i = 0; i < 300; ++i) {
    NProgram p = rand_nonnested_program(rng, params);
    bool cn = false;
    for (const auto& l : occurring_literals(p)) cn = cn || l.neg;
    if (cn || !is_tight(p)) continue;
    ++tight_seen;
    std::vector<Interpretation> stable = answer_sets(p);
    REQUIRE(completion_models(p) == stable);
  }
  REQUIRE(tight_seen > 50);
}

TEST_CASE("the completion pipeline verifier", "[completion][verify]") {
  SECTION("worked examples pass") {
    CompletionReport r3 = verify_completion(wprog("0 <= {a, b} <= 1."));
    REQUIRE(r3.tight);
    REQUIRE(r3.ok);
    REQUIRE(r3.projected_models == interps({{}, {"a"}, {"b"}}));

    CompletionReport r6 = verify_completion(
        wprog("1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4."));
    REQUIRE(r6.tight);
    REQUIRE(r6.ok);
    REQUIRE(r6.projected_models == interps({{}, {"a"}}));
  }
  SECTION("positive recursion is refused as non-tight") {
    CompletionReport r = verify_completion(wprog("p :- p."));
    REQUIRE_FALSE(r.tight);
    REQUIRE_FALSE(r.ok);
    REQUIRE_FALSE(r.detail.empty());
  }
  SECTION("classical negation is renamed through the pipeline") {
    CompletionReport r = verify_completion(wprog("-a. b :- -a."));
    REQUIRE(r.tight);
    REQUIRE(r.ok);
    REQUIRE(r.projected_models == interps({{"-a", "b"}}));
  }
}
