// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// The three translations from weight constraints to nested expressions:
// the basic one-rule-per-rule form, the nondisjunctive form, and the
// nonnested form that introduces negation and weight atoms; plus the
// threshold-formula combinator they are built from, size metrics, and the
// optional simplification pass.

#ifndef WCNEST_TRANSLATE_HPP
#define WCNEST_TRANSLATE_HPP

#include <set>
#include <utility>
#include <vector>

#include "wcnest/core.hpp"

namespace wcnest {

/// Translations of a single constraint blow up exponentially in its length;
/// beyond this many elements tr_basic/tr_nd refuse.
inline constexpr std::size_t kThresholdLengthGuard = 20;

enum class ThresholdMode { kAtLeast, kGreaterThan };

/// The disjunction over all index subsets I meeting the threshold
/// (sum of the selected weights >= bound, or > bound) of the conjunctions
/// of the selected formulas. Subsets are enumerated in lexicographic index
/// order; the empty conjunction is top and the empty disjunction bot.
Formula threshold_formula(const std::vector<std::pair<Formula, Rational>>& fs,
                          const Bound& bound, ThresholdMode mode);

/// Same disjunction restricted to the subset-minimal qualifying index sets;
/// strongly equivalent to the unrestricted formula (weights nonnegative, so
/// qualifying sets are upward closed).
Formula minimize_antichain(const std::vector<std::pair<Formula, Rational>>& fs,
                           const Bound& bound, ThresholdMode mode);

/// A rule element read as a formula: the literal, or not literal.
Formula element_formula(const RuleElement& e);

/// [L <= S]: the at-least threshold over the constraint's elements.
Formula tr_lower(const WeightConstraint& c);
/// [S <= U]: not (greater-than threshold).
Formula tr_upper(const WeightConstraint& c);
/// [L <= S <= U] = [L <= S], [S <= U]; conjuncts for infinite bounds are
/// dropped (both infinite yields top).
Formula tr_constraint(const WeightConstraint& c);

/// For integer weights, [S <= U] rewritten as not [floor(U)+1 <= S].
/// Throws std::invalid_argument when some weight is not an integer.
Formula simplify_integer_upper(const WeightConstraint& c);

/// Top/bot absorption and double-constant collapse; every step is valid in
/// the logic of here-and-there (negation-as-failure nesting is left alone).
Formula simplify_formula(const Formula& f);

struct ConstraintMetrics {
  WeightConstraint constraint;
  std::size_t length;  // L(C)
  Rational weight;     // W(C)
};

struct TranslationReport {
  NProgram output;
  std::set<Atom> q_omega;     // aux atoms occurring in the output
  int weight_atom_count = 0;  // distinct weight atoms occurring
  int rule_count = 0;
  std::vector<ConstraintMetrics> table;  // every constraint of the input
};

struct TranslateOptions {
  /// Build thresholds antichain-minimized, rewrite integer upper bounds as
  /// not [floor(U)+1 <= S], and absorb constants. Every simplified rule is
  /// checked HT-equivalent to its raw form (at desk-scale signatures).
  bool simplify = false;
};

/// Basic translation: each rule C0 <- C1,...,Cn becomes
/// (l1; not l1),...,(lp; not lp),[C0] <- [C1],...,[Cn] with l1..lp its
/// positive head elements.
TranslationReport tr_basic(const WProgram& p, TranslateOptions opts = {});

/// Nondisjunctive translation: p+1 rules per rule,
/// lj <- not not lj, [C1],...,[Cn] and bot <- not [C0], [C1],...,[Cn].
TranslationReport tr_nd(const WProgram& p, TranslateOptions opts = {});

/// Nonnested translation: choice rules q_not_l <- not l and
/// l <- not q_not_l, [C1]^nn,...,[Cn]^nn, the two constraint rules with
/// q_{L0<=S0} and q_{U0<S0}, and the smallest closed set of weight-atom
/// definitions (facts, recursive pairs peeling the last element, or nothing
/// when the bound is unreachable).
TranslationReport tr_nn(const WProgram& p, TranslateOptions opts = {});

struct SizeMetrics {
  std::vector<ConstraintMetrics> table;
  Rational sum_length_times_weight;  // sum of L(C) * W(C)
  int weight_atom_count = 0;         // in tr_nn
};

SizeMetrics size_metrics(const WProgram& p);

}  // namespace wcnest

#endif  // WCNEST_TRANSLATE_HPP
