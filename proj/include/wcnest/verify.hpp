// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Randomized cross-checks: each check generates seeded random inputs and
// compares two independent routes to the same answer. Used by the verify
// subcommand and the acceptance suite.

#ifndef WCNEST_VERIFY_HPP
#define WCNEST_VERIFY_HPP

#include <string>
#include <vector>

#include "wcnest/generator.hpp"

namespace wcnest {

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // rendering of the first failing input

  bool pass() const { return failures == 0; }
};

/// Answer sets are preserved by the basic translation.
CheckResult check_theorem1(std::uint64_t seed, int cases);
/// Dropping the aux atoms is a bijection between the answer sets of the
/// nonnested translation and of the original program.
CheckResult check_theorem2(std::uint64_t seed, int cases);

/// Threshold formulas capture membership of the satisfied-index set.
CheckResult check_prop1(std::uint64_t seed, int cases);
/// The nondisjunctive translation is strongly equivalent to the basic one
/// and has the same answer sets.
CheckResult check_prop2(std::uint64_t seed, int cases);
/// Weight-atom count of the nonnested translation stays within the linear
/// bound for integer weights. Also reports a least-squares slope of count
/// against sum of L(C)*W(C).
CheckResult check_prop3(std::uint64_t seed, int cases);
/// The translation-based strong-equivalence test agrees with the direct
/// two-set criterion.
CheckResult check_prop4(std::uint64_t seed, int cases);

/// Z |= [C] iff Z |= C.
CheckResult check_lemma1(std::uint64_t seed, int cases);
/// Reducts of lower-bound translations match weight-constraint reducts.
CheckResult check_lemma2(std::uint64_t seed, int cases);
/// Reducts of upper-bound translations are top or bot, top exactly when the
/// bound holds.
CheckResult check_lemma3(std::uint64_t seed, int cases);
/// [w <= S] is HT-equivalent to its last-element unfolding, and dually for
/// [w < S].
CheckResult check_lemma8(std::uint64_t seed, int cases);

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int cases);

}  // namespace wcnest

#endif  // WCNEST_VERIFY_HPP
