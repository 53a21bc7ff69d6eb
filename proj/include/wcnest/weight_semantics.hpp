// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Semantics of programs with weight constraints: satisfaction, reducts,
// deductive closure of Horn rules, brute-force answer-set enumeration, and
// the direct two-set criterion for strong equivalence.

#ifndef WCNEST_WEIGHT_SEMANTICS_HPP
#define WCNEST_WEIGHT_SEMANTICS_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wcnest/core.hpp"

namespace wcnest {

/// Thrown when an enumeration would exceed the configured signature cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t atoms, std::size_t cap)
      : std::runtime_error("signature has " + std::to_string(atoms) +
                           " atoms, which exceeds the enumeration cap of " +
                           std::to_string(cap)) {}
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Z satisfies an element c: membership of the literal for positive
/// elements, non-membership for negative ones.
bool satisfies(const Interpretation& z, const RuleElement& e);

/// L <= sum of the weights of the satisfied elements <= U. Duplicate pairs
/// contribute separately.
bool satisfies(const Interpretation& z, const WeightConstraint& c);

/// Every rule whose body constraints all hold has a satisfied head.
bool satisfies(const Interpretation& z, const WRule& r);
bool satisfies(const Interpretation& z, const WProgram& p);

/// Head a literal, body constraints all of shape L <= S with no negative
/// elements: the shape rule reducts produce.
struct HornRule {
  Literal head;
  std::vector<WeightConstraint> body;

  bool operator==(const HornRule& o) const {
    return head == o.head && body == o.body;
  }
};

bool is_horn_constraint(const WeightConstraint& c);

/// Reduct of L <= S with respect to Z: drop the negative pairs and lower
/// the bound by the weight of the satisfied negative pairs. Requires an
/// infinite upper bound.
WeightConstraint reduct_lower(const WeightConstraint& c, const Interpretation& z);

/// Reduct of a whole program: for each rule whose upper bounds Z respects,
/// one Horn rule per positive head element satisfied by Z.
std::vector<HornRule> reduct(const WProgram& p, const Interpretation& z);

/// Least literal set satisfying a set of Horn rules. The result may be
/// inconsistent as a literal set; callers judge consistency.
std::set<Literal> deductive_closure(const std::vector<HornRule>& rules);

/// All answer sets: consistent Z with Z |= p and cl(reduct(p,Z)) == Z,
/// ordered by size then lexicographically. Throws CapExceeded when the
/// signature is larger than `cap`.
std::vector<Interpretation> answer_sets(const WProgram& p,
                                        std::size_t cap = kDefaultEnumerationCap);

struct TurnerResult {
  bool equivalent = false;
  /// On failure, a witnessing pair (Z, Z') distinguishing the programs.
  std::optional<std::pair<Interpretation, Interpretation>> witness;
};

/// Direct strong-equivalence test: for every consistent Z over the combined
/// signature and every Z' subset of Z, (Z |= p1 and Z' |= p1^Z) must
/// coincide with (Z |= p2 and Z' |= p2^Z).
TurnerResult turner_strong_eq(const WProgram& p1, const WProgram& p2,
                              std::size_t cap = kDefaultEnumerationCap);

/// Z' satisfies every Horn rule (body constraints hold -> head in Z').
bool satisfies(const Interpretation& z, const std::vector<HornRule>& rules);

}  // namespace wcnest

#endif  // WCNEST_WEIGHT_SEMANTICS_HPP
