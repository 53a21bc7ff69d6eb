// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Semantics of programs with nested expressions: satisfaction, reduct,
// minimality and brute-force answer sets.

#ifndef WCNEST_NESTED_SEMANTICS_HPP
#define WCNEST_NESTED_SEMANTICS_HPP

#include <vector>

#include "wcnest/core.hpp"
#include "wcnest/weight_semantics.hpp"  // CapExceeded, kDefaultEnumerationCap

namespace wcnest {

bool satisfies(const Interpretation& z, const Formula& f);
bool satisfies(const Interpretation& z, const NRule& r);
bool satisfies(const Interpretation& z, const NProgram& p);

/// Reduct: elementary formulas are fixed, connectives recurse, and each
/// "not F" collapses to bot when Z |= F and to top otherwise. The result
/// contains no negation-as-failure nodes.
Formula reduct(const Formula& f, const Interpretation& z);
NProgram reduct(const NProgram& p, const Interpretation& z);

/// Answer sets: consistent Z satisfying the reduct p^Z such that no proper
/// subset of Z satisfies p^Z. Ordered by size then lexicographically.
/// Throws CapExceeded when the signature is larger than `cap`.
std::vector<Interpretation> answer_sets(const NProgram& p,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Decides whether Z is an answer set of p (used by enumerators that supply
/// their own candidates).
bool is_answer_set(const NProgram& p, const Interpretation& z);

/// No member is a proper subset of another.
bool is_antichain(const std::vector<Interpretation>& sets);

}  // namespace wcnest

#endif  // WCNEST_NESTED_SEMANTICS_HPP
