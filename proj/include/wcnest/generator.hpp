// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Seeded random generation of small programs, constraints and formulas for
// the cross-checking harness. Parameters are fixed and versioned so that
// verification runs are reproducible: same seed, same programs.

#ifndef WCNEST_GENERATOR_HPP
#define WCNEST_GENERATOR_HPP

#include <random>

#include "wcnest/core.hpp"

namespace wcnest {

using Rng = std::mt19937_64;

struct GenParams {
  int max_atoms = 5;
  int max_rules = 4;
  int max_constraint_len = 4;
  int max_body_constraints = 2;
  int max_weight = 4;         // integer weights 0..max
  bool rational_weights = false;  // halves and thirds mixed in
  int cn_percent = 15;        // chance a literal is classically negated
  int naf_percent = 35;       // chance an element carries not
  int omit_bound_percent = 30;  // chance a bound is left infinite
};

// rng() % n, adequate for test-case generation
int rand_int(Rng& rng, int lo, int hi);
bool rand_percent(Rng& rng, int percent);

Atom rand_atom(Rng& rng, const GenParams& p);
Literal rand_literal(Rng& rng, const GenParams& p);
RuleElement rand_element(Rng& rng, const GenParams& p);
Rational rand_weight(Rng& rng, const GenParams& p);

/// Bounds drawn from [-2, W+2] (or infinite by omission), per the harness
/// conventions.
WeightConstraint rand_constraint(Rng& rng, const GenParams& p);
WRule rand_wrule(Rng& rng, const GenParams& p);
WProgram rand_wprogram(Rng& rng, const GenParams& p);

/// Random nested formula of bounded depth.
Formula rand_formula(Rng& rng, const GenParams& p, int depth = 3);
Formula rand_naf_free_formula(Rng& rng, const GenParams& p, int depth = 3);
NProgram rand_nprogram(Rng& rng, const GenParams& p);

/// Random nonnested program (heads literals or bot, bodies flat unit
/// conjunctions).
NProgram rand_nonnested_program(Rng& rng, const GenParams& p);

/// Random consistent interpretation over the first max_atoms atoms.
Interpretation rand_interpretation(Rng& rng, const GenParams& p);

}  // namespace wcnest

#endif  // WCNEST_GENERATOR_HPP
