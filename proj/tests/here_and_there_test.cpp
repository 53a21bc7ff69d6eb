// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wcnest/generator.hpp"
#include "wcnest/here_and_there.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"
#include "wcnest/translate.hpp"

using namespace wcnest;
using wcnest::test::interp;
using wcnest::test::interps;
using wcnest::test::lit;
using wcnest::test::nprog;
using wcnest::test::wprog;

namespace {

Atom atom(const std::string& name) { return Atom{name, AtomKind::kUser}; }

std::vector<HTInterpretation> all_interps(const std::vector<Atom>& sig) {
  return ht_models({}, sig);
}

PropFormula prop(const std::string& text) {
  return formula_to_prop(nprog(text + ".").rules.front().head);
}

}  // namespace

TEST_CASE("rules become implications", "[ht]") {
  PropFormula f = rule_to_implication(nprog("a :- not not a.").rules.front());
  PropFormula expected = PropFormula::implies(
      PropFormula::neg(PropFormula::neg(PropFormula::atom(atom("a")))),
      PropFormula::atom(atom("a")));
  REQUIRE(f == expected);
  PropFormula g = rule_to_implication(nprog("a ; not a.").rules.front());
  REQUIRE(g == PropFormula::implies(
                   PropFormula::top(),
                   PropFormula::disj({PropFormula::atom(atom("a")),
                                      PropFormula::neg(PropFormula::atom(atom("a")))})));
  PropFormula h = rule_to_implication(nprog("bot :- q.").rules.front());
  REQUIRE(h == PropFormula::implies(PropFormula::atom(atom("q")),
                                    PropFormula::bot()));
}

TEST_CASE("two-world satisfaction", "[ht]") {
  SECTION("excluded middle fails between the worlds") {
    HTInterpretation gap({}, {atom("a")});
    REQUIRE_FALSE(ht_satisfies(gap, prop("a ; not a")));
  }
  SECTION("the weak law of the excluded middle is valid") {
    for (const auto& i : all_interps({atom("a")})) {
      REQUIRE(ht_satisfies(i, prop("not a ; not not a")));
    }
  }
  SECTION("the characteristic axiom F | (F -> G) | -G is valid") {
    PropFormula f = PropFormula::atom(atom("a"));
    PropFormula g = PropFormula::atom(atom("b"));
    PropFormula axiom = PropFormula::disj(
        {f, PropFormula::implies(f, g), PropFormula::neg(g)});
    for (const auto& i : all_interps({atom("a"), atom("b")})) {
      REQUIRE(ht_satisfies(i, axiom));
    }
  }
  SECTION("De Morgan in both directions") {
    PropFormula a = PropFormula::atom(atom("a"));
    PropFormula b = PropFormula::atom(atom("b"));
    PropFormula lhs = PropFormula::neg(PropFormula::conj({a, b}));
    PropFormula rhs = PropFormula::disj(
        {PropFormula::neg(a), PropFormula::neg(b)});
    PropFormula law = PropFormula::iff(lhs, rhs);
    PropFormula dual = PropFormula::iff(
        PropFormula::neg(PropFormula::disj({a, b})),
        PropFormula::conj({PropFormula::neg(a), PropFormula::neg(b)}));
    for (const auto& i : all_interps({atom("a"), atom("b")})) {
      REQUIRE(ht_satisfies(i, law));
      REQUIRE(ht_satisfies(i, dual));
    }
  }
  SECTION("classical negation is rejected with advice") {
    REQUIRE_THROWS_WITH(
        ht_satisfies(HTInterpretation({}, {}), prop("-a")),
        Catch::Matchers::ContainsSubstring("eliminate_classical_negation"));
  }
  SECTION("persistence and the total-world collapse") {
    Rng rng(53);
    GenParams params;
    params.max_atoms = 3;
    params.cn_percent = 0;
    std::vector<Atom> sig{atom("a"), atom("b"), atom("c")};
    for (int i = 0; i < 200; ++i) {
      PropFormula f = formula_to_prop(rand_formula(rng, params, 3));
      for (const auto& m : all_interps(sig)) {
        if (ht_satisfies(m, f)) {
          REQUIRE(ht_satisfies(HTInterpretation(m.there, m.there), f));
        }
        std::set<Atom> t = m.there;
        bool classical = classically_satisfies(t, f);
        REQUIRE(ht_satisfies(HTInterpretation(t, t), f) == classical);
      }
    }
  }
}

namespace {

// Independent route: satisfaction at (H, T) equals classical satisfaction of
// a translation over doubled atoms a_h, a_t, where implication checks the
// "here" component and, separately, the whole formula shifted to "there".
PropFormula shift(const PropFormula& f, const std::string& suffix);

PropFormula double_world(const PropFormula& f) {
  using K = PropFormula::Kind;
  switch (f.kind()) {
    case K::kBot:
    case K::kTop:
      return f;
    case K::kLit:
      return PropFormula::atom(Atom{f.literal().atom.name + "_h"});
    case K::kNeg:
      return double_world(
          PropFormula::implies(f.parts().front(), PropFormula::bot()));
    case K::kAnd:
    case K::kOr: {
      std::vector<PropFormula> parts;
      for (const auto& p : f.parts()) parts.push_back(double_world(p));
      return f.kind() == K::kAnd ? PropFormula::conj(std::move(parts))
                                 : PropFormula::disj(std::move(parts));
    }
    case K::kImplies:
      return PropFormula::conj(
          {PropFormula::implies(double_world(f.parts()[0]),
                                double_world(f.parts()[1])),
           shift(f, "_t")});
    case K::kIff:
      return double_world(PropFormula::conj(
          {PropFormula::implies(f.parts()[0], f.parts()[1]),
           PropFormula::implies(f.parts()[1], f.parts()[0])}));
  }
  return f;
}

PropFormula shift(const PropFormula& f, const std::string& suffix) {
  using K = PropFormula::Kind;
  switch (f.kind()) {
    case K::kBot:
    case K::kTop:
      return f;
    case K::kLit:
      return PropFormula::atom(Atom{f.literal().atom.name + suffix});
    default: {
      std::vector<PropFormula> parts;
      for (const auto& p : f.parts()) parts.push_back(shift(p, suffix));
      switch (f.kind()) {
        case K::kNeg:
          return PropFormula::neg(parts.front());
        case K::kAnd:
          return PropFormula::conj(std::move(parts));
        case K::kOr:
          return PropFormula::disj(std::move(parts));
        case K::kImplies:
          return PropFormula::implies(parts[0], parts[1]);
        default:
          return PropFormula::iff(parts[0], parts[1]);
      }
    }
  }
}

}  // namespace

TEST_CASE("two-world satisfaction matches the doubled-atom encoding",
          "[ht][oracle]") {
  Rng rng(127);
  GenParams params;
  params.max_atoms = 3;
  params.cn_percent = 0;
  std::vector<Atom> sig{atom("a"), atom("b"), atom("c")};
  for (int i = 0; i < 400; ++i) {
    NProgram p = rand_nprogram(rng, params);
    PropFormula f = rule_to_implication(p.rules.front());
    PropFormula doubled = double_world(f);
    for (const auto& m : all_interps(sig)) {
      std::set<Atom> model;
      for (const auto& a : m.here) model.insert(Atom{a.name + "_h"});
      for (const auto& a : m.there) model.insert(Atom{a.name + "_t"});
      REQUIRE(ht_satisfies(m, f) == classically_satisfies(model, doubled));
    }
  }
}

TEST_CASE("classical-negation elimination", "[ht]") {
  SECTION("renames and constrains") {
    CnElimination e = eliminate_classical_negation(nprog("-a :- not a."));
    REQUIRE(e.renamed.size() == 1);
    Atom prime = e.renamed.at(atom("a"));
    REQUIRE(prime.name == "q_neg_a");
    REQUIRE(e.program.rules.front().head == Formula::lit(Literal{prime, false}));
    REQUIRE(e.constraints.size() == 1);
  }
  SECTION("programs without classical negation pass through") {
    CnElimination e = eliminate_classical_negation(nprog("a :- not b."));
    REQUIRE(e.renamed.empty());
    REQUIRE(e.constraints.empty());
    REQUIRE(e.program.rules == nprog("a :- not b.").rules);
  }
  SECTION("answer sets correspond one to one") {
    Rng rng(59);
    GenParams params;
    params.max_atoms = 3;
    params.cn_percent = 40;
    for (int i = 0; i < 150; ++i) {
      NProgram p = rand_nprogram(rng, params);
      CnElimination e = eliminate_classical_negation(p);
      std::vector<Interpretation> original = answer_sets(p);
      std::vector<Interpretation> renamed;
      for (const auto& z : answer_sets(e.program)) {
        bool has_pair = false;
        for (const auto& [orig, prime] : e.renamed) {
          if (z.contains(Literal{orig, false}) &&
              z.contains(Literal{prime, false})) {
            has_pair = true;
          }
        }
        if (has_pair) continue;
        std::vector<Literal> lits;
        for (const auto& l : z.literals()) {
          bool was_prime = false;
          for (const auto& [orig, prime] : e.renamed) {
            if (l.atom == prime) {
              lits.push_back(Literal{orig, true});
              was_prime = true;
            }
          }
          if (!was_prime) lits.push_back(l);
        }
        renamed.push_back(Interpretation(std::move(lits)));
      }
      std::sort(renamed.begin(), renamed.end());
      REQUIRE(renamed == original);
    }
  }
}

TEST_CASE("HT-model enumeration", "[ht]") {
  SECTION("a fact pins both worlds") {
    auto m = ht_models({prop("a")}, {atom("a")});
    REQUIRE(m.size() == 1);
    REQUIRE(m.front() == HTInterpretation({atom("a")}, {atom("a")}));
  }
  SECTION("no formulas: all three interpretations over one atom") {
    REQUIRE(all_interps({atom("a")}).size() == 3);
  }
  SECTION("the choice rule and its doubly negated form have equal models") {
    auto m1 = ht_models({rule_to_implication(nprog("a ; not a.").rules.front())},
                        {atom("a")});
    auto m2 = ht_models(
        {rule_to_implication(nprog("a :- not not a.").rules.front())},
        {atom("a")});
    REQUIRE(m1 == m2);
  }
  SECTION("cap refusal") {
    std::vector<Atom> sig;
    for (int i = 0; i < 15; ++i) sig.push_back(atom("a" + std::to_string(i)));
    REQUIRE_THROWS_AS(ht_models({}, sig), CapExceeded);
  }
}

TEST_CASE("strong equivalence of nested programs", "[ht][strongeq]") {
  SECTION("the two choice encodings") {
    REQUIRE(strong_eq_nested(nprog("a ; not a."), nprog("a :- not not a."))
                .equivalent);
  }
  SECTION("absorption") {
    REQUIRE(strong_eq_nested(nprog("a ; (a, b)."), nprog("a.")).equivalent);
    REQUIRE(strong_eq_nested(nprog("a, (a ; b)."), nprog("a.")).equivalent);
  }
  SECTION("different facts are not strongly equivalent") {
    StrongEqResult r = strong_eq_nested(nprog("p."), nprog("q."));
    REQUIRE_FALSE(r.equivalent);
    REQUIRE(r.witness.has_value());
  }
  SECTION("strong equivalence with classical negation") {
    // both force -a when a is absent
    REQUIRE(strong_eq_nested(nprog("-a :- not a."),
                             nprog("-a :- not a. -a :- not a, not b."))
                .equivalent);
  }
  SECTION("strong equivalence implies weak equivalence under extensions") {
    Rng rng(61);
    GenParams params;
    params.max_atoms = 3;
    params.max_rules = 2;
    params.cn_percent = 0;
    int positives = 0;
    for (int i = 0; i < 80 && positives < 8; ++i) {
      NProgram p1 = rand_nprogram(rng, params);
      NProgram p2 = rand_percent(rng, 40) ? p1 : rand_nprogram(rng, params);
      if (!strong_eq_nested(p1, p2).equivalent) continue;
      ++positives;
      for (int j = 0; j < 40; ++j) {
        NProgram ext = rand_nprogram(rng, params);
        NProgram u1 = p1, u2 = p2;
        u1.rules.insert(u1.rules.end(), ext.rules.begin(), ext.rules.end());
        u2.rules.insert(u2.rules.end(), ext.rules.begin(), ext.rules.end());
        REQUIRE(answer_sets(u1) == answer_sets(u2));
      }
    }
    REQUIRE(positives > 0);
  }
}

TEST_CASE("strong equivalence of weight programs", "[ht][strongeq]") {
  WProgram ex26 = wprog("1 <= {p, q} <= 1.\np.\n");
  WProgram ex27 = wprog(":- q.\np.\n");
  REQUIRE(strong_eq_weight(ex26, ex27).equivalent);
  REQUIRE(strong_eq_weight(ex26, ex26).equivalent);
  SECTION("the choice program differs from plain facts") {
    StrongEqResult r = strong_eq_weight(wprog("0 <= {a, b} <= 1."),
                                        wprog("a. b."));
    REQUIRE_FALSE(r.equivalent);
    REQUIRE(r.witness.has_value());
  }
}

TEST_CASE("choice formulas entail a choice on any combination",
          "[ht][facts]") {
  // if F | not F holds for every head element, it holds for the whole
  // constraint translation
  Rng rng(67);
  GenParams params;
  params.max_atoms = 3;
  params.cn_percent = 0;
  params.max_constraint_len = 3;
  std::vector<Atom> sig{atom("a"), atom("b"), atom("c")};
  for (int i = 0; i < 100; ++i) {
    WeightConstraint c = rand_constraint(rng, params);
    std::vector<PropFormula> premises;
    for (const auto& we : c.elements()) {
      PropFormula e = formula_to_prop(element_formula(we.element));
      premises.push_back(PropFormula::disj({e, PropFormula::neg(e)}));
    }
    PropFormula c0 = formula_to_prop(tr_constraint(c));
    PropFormula conclusion = PropFormula::disj({c0, PropFormula::neg(c0)});
    for (const auto& m : all_interps(sig)) {
      bool premises_hold = true;
      for (const auto& f : premises) {
        if (!ht_satisfies(m, f)) {
          premises_hold = false;
          break;
        }
      }
      if (premises_hold) REQUIRE(ht_satisfies(m, conclusion));
    }
  }
}
