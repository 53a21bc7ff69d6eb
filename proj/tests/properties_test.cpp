// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Program-level properties of nested-expression semantics: definitions can
// be strengthened to equivalences without changing answer sets, and
// explicit definitions of fresh atoms are conservative.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "wcnest/generator.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"

using namespace wcnest;
using wcnest::test::interp;
using wcnest::test::lit;

namespace {

Atom atom(const std::string& name) { return Atom{name, AtomKind::kUser}; }

// Base program whose heads avoid the q atoms entirely (so the q's have no
// regular occurrences there), with bodies over base and q atoms.
NProgram random_base(Rng& rng, const GenParams& base_params,
                     const GenParams& full_params) {
  NProgram p;
  int n = rand_int(rng, 1, 3);
  for (int i = 0; i < n; ++i) {
    Formula head = rand_percent(rng, 15)
                       ? Formula::bot()
                       : rand_naf_free_formula(rng, base_params, 2);
    p.rules.push_back(NRule{head, rand_formula(rng, full_params, 2)});
  }
  return p;
}

}  // namespace

TEST_CASE("definitions may be strengthened to equivalences",
          "[properties][completion-lemma]") {
  Rng rng(107);
  GenParams base;  // atoms a..c
  base.max_atoms = 3;
  base.cn_percent = 0;
  GenParams full;  // atoms a..e, so d and e act as the defined atoms
  full.max_atoms = 5;
  full.cn_percent = 0;
  for (int i = 0; i < 200; ++i) {
    NProgram with_defs = random_base(rng, base, full);
    NProgram with_equivs = with_defs;
    for (const std::string& q : {"d", "e"}) {
      Formula def = rand_formula(rng, full, 2);
      Formula qa = Formula::lit(Literal{atom(q), false});
      with_defs.rules.push_back(NRule{qa, def});
      with_equivs.rules.push_back(NRule{qa, def});
      with_equivs.rules.push_back(NRule{def, qa});
    }
    INFO(print_nested_program(with_defs));
    REQUIRE(answer_sets(with_defs) == answer_sets(with_equivs));
  }
}

TEST_CASE("explicit definitions of fresh atoms are conservative",
          "[properties][explicit-definitions]") {
  Rng rng(109);
  GenParams base;
  base.max_atoms = 3;
  base.cn_percent = 20;
  for (int i = 0; i < 200; ++i) {
    GenParams full = base;
    NProgram core;
    int n = rand_int(rng, 1, 3);
    for (int j = 0; j < n; ++j) {
      core.rules.push_back(NRule{rand_formula(rng, base, 2),
                                 rand_formula(rng, base, 2)});
    }
    // defs of fresh atoms d, e over the base atoms only
    std::set<Atom> fresh{atom("d"), atom("e")};
    NProgram extended = core;
    for (const auto& q : fresh) {
      extended.rules.push_back(NRule{Formula::lit(Literal{q, false}),
                                     rand_formula(rng, base, 2)});
    }
    std::vector<Interpretation> projected;
    for (const auto& z : answer_sets(extended)) {
      std::vector<Literal> keep;
      for (const auto& l : z.literals()) {
        if (!fresh.count(l.atom)) keep.push_back(l);
      }
      projected.push_back(Interpretation(std::move(keep)));
    }
    // the projection is a bijection onto the answer sets of the core
    std::vector<Interpretation> sorted = projected;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    REQUIRE(sorted == answer_sets(core));
    (void)full;
  }
}
