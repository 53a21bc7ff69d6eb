// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wcnest/generator.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"

using namespace wcnest;
using wcnest::test::interp;
using wcnest::test::interps;
using wcnest::test::lit;
using wcnest::test::nprog;

namespace {

Formula formula(const std::string& text) {
  return nprog(text + ".").rules.front().head;
}

bool naf_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kNot:
      return false;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      for (const auto& p : f.parts()) {
        if (!naf_free(p)) return false;
      }
      return true;
    default:
      return true;
  }
}

}  // namespace

TEST_CASE("formula satisfaction", "[nsem]") {
  REQUIRE(satisfies(interp({"a"}), formula("a ; not a")));
  REQUIRE(satisfies(interp({}), formula("not (a, b)")));
  REQUIRE_FALSE(satisfies(interp({"a", "b"}),
                          formula("(a; not a), (b; not b), not (a, b)")));
  REQUIRE(satisfies(interp({}), Formula::top()));
  REQUIRE_FALSE(satisfies(interp({}), Formula::bot()));
  REQUIRE_FALSE(satisfies(interp({"a"}), formula("-a")));
}

TEST_CASE("connective satisfaction is pointwise, including empty lists",
          "[nsem]") {
  Rng rng(29);
  GenParams params;
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> fs;
    int n = rand_int(rng, 0, 4);
    for (int j = 0; j < n; ++j) fs.push_back(rand_formula(rng, params, 2));
    Interpretation z = rand_interpretation(rng, params);
    bool all = true, any = false;
    for (const auto& f : fs) {
      all = all && satisfies(z, f);
      any = any || satisfies(z, f);
    }
    REQUIRE(satisfies(z, big_and(fs)) == all);
    REQUIRE(satisfies(z, big_or(fs)) == any);
  }
}

TEST_CASE("formula reducts evaluate negation against Z", "[nsem]") {
  Formula nna = formula("not not a");
  REQUIRE(reduct(nna, interp({"a"})) == Formula::top());
  REQUIRE(reduct(nna, interp({})) == Formula::bot());
  REQUIRE(reduct(formula("a"), interp({})) == formula("a"));
  SECTION("rule reducts of the doubly negated rule") {
    NProgram p = nprog("a :- not not a.");
    NProgram r1 = reduct(p, interp({"a"}));
    REQUIRE(r1.rules.front().body == Formula::top());
    NProgram r2 = reduct(p, interp({}));
    REQUIRE(r2.rules.front().body == Formula::bot());
  }
  SECTION("reducts of NAF-free programs are the program itself") {
    NProgram p = nprog("a :- b. -c :- a, b.");
    REQUIRE(reduct(p, interp({"a"})).rules == p.rules);
  }
  SECTION("reducts are NAF-free and reducing twice changes nothing") {
    Rng rng(31);
    GenParams params;
    for (int i = 0; i < 300; ++i) {
      Formula f = rand_formula(rng, params, 3);
      Interpretation z = rand_interpretation(rng, params);
      Formula r = reduct(f, z);
      REQUIRE(naf_free(r));
      REQUIRE(reduct(r, z) == r);
      REQUIRE(reduct(r, interp({})) == r);
    }
  }
  SECTION("Z satisfies F exactly when Z satisfies the reduct of F") {
    Rng rng(37);
    GenParams params;
    for (int i = 0; i < 500; ++i) {
      Formula f = rand_formula(rng, params, 3);
      Interpretation z = rand_interpretation(rng, params);
      REQUIRE(satisfies(z, f) == satisfies(z, reduct(f, z)));
    }
  }
  SECTION("NAF-free satisfaction is monotone") {
    Rng rng(41);
    GenParams params;
    for (int i = 0; i < 500; ++i) {
      Formula f = rand_naf_free_formula(rng, params, 3);
      Interpretation big = rand_interpretation(rng, params);
      std::vector<Literal> subset;
      for (std::size_t k = 0; k < big.size(); k += 2) {
        subset.push_back(big.literals()[k]);
      }
      Interpretation small(subset);
      if (satisfies(small, f)) REQUIRE(satisfies(big, f));
    }
  }
}

TEST_CASE("answer sets of nested programs", "[nsem][answersets]") {
  REQUIRE(answer_sets(nprog("a ; not a.")) == interps({{}, {"a"}}));
  REQUIRE(answer_sets(nprog("a :- not not a.")) == interps({{}, {"a"}}));
  REQUIRE(answer_sets(nprog("-a :- not a.")) == interps({{"-a"}}));
  REQUIRE(answer_sets(NProgram{}) == interps({{}}));
  SECTION("bot and top") {
    REQUIRE(answer_sets(nprog("bot :- a.")) == interps({{}}));
    REQUIRE(answer_sets(nprog("a. bot :- a.")).empty());
    REQUIRE(answer_sets(nprog("top.")) == interps({{}}));
  }
  SECTION("cap refusal") {
    NProgram p = nprog("a1; a2; a3; a4.");
    REQUIRE_THROWS_AS(answer_sets(p, 3), CapExceeded);
  }
  SECTION("bot-headed rules only filter answer sets") {
    Rng rng(43);
    GenParams params;
    params.max_atoms = 4;
    for (int i = 0; i < 150; ++i) {
      NProgram generating = rand_nprogram(rng, params);
      NProgram constraints;
      int n = rand_int(rng, 1, 2);
      for (int j = 0; j < n; ++j) {
        constraints.rules.push_back(
            NRule{Formula::bot(), rand_formula(rng, params, 2)});
      }
      NProgram joint = generating;
      joint.rules.insert(joint.rules.end(), constraints.rules.begin(),
                         constraints.rules.end());
      std::vector<Interpretation> expected;
      for (const auto& z : answer_sets(generating)) {
        if (satisfies(z, constraints)) expected.push_back(z);
      }
      REQUIRE(answer_sets(joint) == expected);
    }
  }
}

TEST_CASE("antichain checks", "[nsem]") {
  REQUIRE_FALSE(is_antichain(interps({{}, {"a"}})));
  REQUIRE(is_antichain(interps({{"a"}, {"b"}})));
  REQUIRE(is_antichain({}));
  REQUIRE(is_antichain(interps({{"a", "b"}, {"a", "c"}, {"b", "c"}})));
  SECTION("nonnested programs always produce antichains") {
    Rng rng(47);
    GenParams params;
    params.max_atoms = 4;
    for (int i = 0; i < 200; ++i) {
      NProgram p = rand_nonnested_program(rng, params);
      REQUIRE(is_antichain(answer_sets(p)));
    }
  }
}
