// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// The logic of here-and-there, spelled out as two-world Kripke semantics:
// an interpretation is a pair (H, T) of atom sets with H included in T.
// Rules become implications Body -> Head with "," as conjunction, ";" as
// disjunction and negation as failure as negation. Equality of HT-model
// sets over a shared signature decides strong equivalence; programs with
// classical negation are first rewritten with fresh atoms plus the
// constraints -(a & a').

#ifndef WCNEST_HERE_AND_THERE_HPP
#define WCNEST_HERE_AND_THERE_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "wcnest/core.hpp"

namespace wcnest {

/// Propositional formula over literals, with classical connectives.
class PropFormula {
 public:
  enum class Kind { kBot, kTop, kLit, kNeg, kAnd, kOr, kImplies, kIff };

  static PropFormula bot();
  static PropFormula top();
  static PropFormula lit(Literal l);
  static PropFormula atom(Atom a) { return lit(Literal{std::move(a), false}); }
  static PropFormula neg(PropFormula f);
  static PropFormula conj(std::vector<PropFormula> fs);  // empty -> top
  static PropFormula disj(std::vector<PropFormula> fs);  // empty -> bot
  static PropFormula implies(PropFormula lhs, PropFormula rhs);
  static PropFormula iff(PropFormula lhs, PropFormula rhs);

  Kind kind() const { return node_->kind; }
  const Literal& literal() const;
  const std::vector<PropFormula>& parts() const { return node_->parts; }

  bool operator==(const PropFormula& o) const;

 private:
  struct Node {
    Kind kind;
    Literal literal;
    std::vector<PropFormula> parts;
  };
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PropFormula make(Node n);
  std::shared_ptr<const Node> node_;
};

std::string print_prop_formula(const PropFormula& f);
void collect_atoms(const PropFormula& f, std::vector<Atom>& out);
bool contains_classical_negation(const PropFormula& f);

/// A pair of atom sets with here included in there.
struct HTInterpretation {
  std::set<Atom> here;
  std::set<Atom> there;

  HTInterpretation(std::set<Atom> h, std::set<Atom> t);

  bool operator==(const HTInterpretation& o) const {
    return here == o.here && there == o.there;
  }
  bool operator<(const HTInterpretation& o) const {
    if (there != o.there) return there < o.there;
    return here < o.here;
  }
  std::string str() const;
};

/// Body -> Head with "," as /\, ";" as \/ and not as negation.
PropFormula rule_to_implication(const NRule& r);
PropFormula formula_to_prop(const Formula& f);

/// Classical satisfaction by an atom set.
bool classically_satisfies(const std::set<Atom>& model, const PropFormula& f);

/// Kripke clauses: an atom holds if it is in "here"; conjunction and
/// disjunction are pointwise; F -> G holds if the implication holds here
/// and classically there; -F is F -> bot. Throws std::invalid_argument on
/// formulas containing classical negation (eliminate it first).
bool ht_satisfies(const HTInterpretation& i, const PropFormula& f);

inline constexpr std::size_t kDefaultHtCap = 14;

/// All HT-interpretations over the signature satisfying every formula, in a
/// deterministic order. Throws CapExceeded beyond `cap` atoms.
std::vector<HTInterpretation> ht_models(const std::vector<PropFormula>& formulas,
                                        const std::vector<Atom>& sig,
                                        std::size_t cap = kDefaultHtCap);

struct CnElimination {
  NProgram program;                    // free of classical negation
  std::vector<PropFormula> constraints;  // -(a & a') per renamed atom
  std::map<Atom, Atom> renamed;          // original atom -> primed atom
};

/// Replaces every occurrence of -a with a fresh atom a'. Answer sets of the
/// result that avoid every pair {a, a'} correspond 1-1 to answer sets of
/// the input.
CnElimination eliminate_classical_negation(const NProgram& p);

struct StrongEqResult {
  bool equivalent = false;
  std::optional<HTInterpretation> witness;  // a model of one side only
};

/// Equality of HT-model sets over the combined signature, after a shared
/// classical-negation elimination and together with its constraints.
StrongEqResult strong_eq_nested(const NProgram& p1, const NProgram& p2,
                                std::size_t cap = kDefaultHtCap);

/// Strong equivalence of weight programs, decided on their basic
/// translations.
StrongEqResult strong_eq_weight(const WProgram& p1, const WProgram& p2,
                                std::size_t cap = kDefaultHtCap);

/// HT-equivalence of two bare formulas (classical negation is renamed away
/// consistently on both sides). Used by golden tests and the simplifier's
/// self-check.
bool ht_equivalent(const Formula& f, const Formula& g,
                   std::size_t cap = kDefaultHtCap);

}  // namespace wcnest

#endif  // WCNEST_HERE_AND_THERE_HPP
