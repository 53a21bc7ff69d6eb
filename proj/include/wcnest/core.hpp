// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Shared abstract syntax for the two program languages: atoms, literals,
// rule elements, weight constraints and weight rules on one side; formulas
// built from literals with not/","/";" and rules over them on the other.
// All values are immutable after construction and compared structurally.

#ifndef WCNEST_CORE_HPP
#define WCNEST_CORE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcnest/rational.hpp"

namespace wcnest {

enum class AtomKind {
  kUser,        // came from source text
  kAuxNegation, // q_not_<l> introduced by the nonnested translation
  kAuxWeight,   // q_<w>_le/lt_<prefix> introduced by the nonnested translation
};

/// Names are unique keys; two atoms are equal iff their names are equal.
/// Aux atoms are only ever created by translations, never by the parser
/// (user atoms may not start with the reserved prefix "q_").
struct Atom {
  std::string name;
  AtomKind kind = AtomKind::kUser;

  bool operator==(const Atom& o) const { return name == o.name; }
  bool operator<(const Atom& o) const { return name < o.name; }
};

inline constexpr const char* kReservedAtomPrefix = "q_";

/// An atom, possibly under classical negation.
struct Literal {
  Atom atom;
  bool neg = false;

  bool operator==(const Literal& o) const {
    return neg == o.neg && atom == o.atom;
  }
  bool operator<(const Literal& o) const {
    if (atom.name != o.atom.name) return atom.name < o.atom.name;
    return neg < o.neg;
  }
  std::string str() const { return (neg ? "-" : "") + atom.name; }
};

inline Literal complement(const Literal& l) { return Literal{l.atom, !l.neg}; }

/// A literal, possibly prefixed with negation as failure. naf == false
/// exactly when the element is positive.
struct RuleElement {
  Literal lit;
  bool naf = false;

  bool operator==(const RuleElement& o) const {
    return naf == o.naf && lit == o.lit;
  }
  bool operator<(const RuleElement& o) const {
    if (!(lit == o.lit)) return lit < o.lit;
    return naf < o.naf;
  }
  std::string str() const { return (naf ? "not " : "") + lit.str(); }
};

/// One weighted element of a constraint.
struct WeightedElement {
  RuleElement element;
  Rational weight;

  bool operator==(const WeightedElement& o) const {
    return element == o.element && weight == o.weight;
  }
};

/// L <= {c1=w1, ..., cm=wm} <= U. The element list keeps source order and
/// may contain duplicates; each pair contributes to sums separately.
/// Weights must be nonnegative (construction throws otherwise).
class WeightConstraint {
 public:
  WeightConstraint(Bound lower, std::vector<WeightedElement> elements,
                   Bound upper);

  const Bound& lower() const { return lower_; }
  const Bound& upper() const { return upper_; }
  const std::vector<WeightedElement>& elements() const { return elements_; }

  std::size_t length() const { return elements_.size(); }  // L(C)
  Rational total_weight() const;                           // W(C)

  bool operator==(const WeightConstraint& o) const {
    return lower_ == o.lower_ && upper_ == o.upper_ && elements_ == o.elements_;
  }

 private:
  Bound lower_;
  std::vector<WeightedElement> elements_;
  Bound upper_;
};

/// Shorthand 1 <= {c=1}: a rule element used as a constraint.
WeightConstraint element_constraint(const RuleElement& e);
/// The headless-rule head 1 <= {}.
WeightConstraint empty_head_constraint();

struct WRule {
  WeightConstraint head;
  std::vector<WeightConstraint> body;

  bool operator==(const WRule& o) const {
    return head == o.head && body == o.body;
  }
};

struct WProgram {
  std::vector<WRule> rules;

  bool operator==(const WProgram& o) const { return rules == o.rules; }
};

/// Nested expression: Bot | Top | Lit | not F | (F, ..., F) | (F; ...; F).
/// Conjunction/disjunction nodes are n-ary; the only implicit normalization
/// is in big_and/big_or (empty list -> constant, singleton -> unwrapped).
class Formula {
 public:
  enum class Kind { kBot, kTop, kLit, kNot, kAnd, kOr };

  static Formula bot();
  static Formula top();
  static Formula lit(Literal l);
  static Formula naf(Formula f);  // not F

  Kind kind() const { return node_->kind; }
  const Literal& literal() const;             // kind() == kLit
  const Formula& child() const;               // kind() == kNot
  const std::vector<Formula>& parts() const;  // kAnd / kOr

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::size_t node_count() const;

 private:
  struct Node {
    Kind kind;
    Literal literal;             // kLit
    std::vector<Formula> parts;  // kNot (one), kAnd, kOr
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> node_;

  friend Formula big_and(std::vector<Formula> fs);
  friend Formula big_or(std::vector<Formula> fs);
};

/// Multiple conjunction/disjunction. The empty conjunction is top, the empty
/// disjunction is bot; a singleton is returned unchanged.
Formula big_and(std::vector<Formula> fs);
Formula big_or(std::vector<Formula> fs);

struct NRule {
  Formula head;
  Formula body;  // a bare formula F is stored as F <- top

  bool operator==(const NRule& o) const {
    return head == o.head && body == o.body;
  }
};

struct NProgram {
  std::vector<NRule> rules;
  /// Q_Omega bookkeeping: the aux atoms a translation introduced. Empty for
  /// parsed programs; ignored by satisfaction and answer-set semantics.
  std::set<Atom> aux_atoms;
};

/// A consistent finite set of literals. Construction sorts, deduplicates and
/// rejects inconsistent input (a together with -a).
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::vector<Literal> lits);

  static bool consistent(const std::vector<Literal>& lits);

  const std::vector<Literal>& literals() const { return lits_; }
  bool contains(const Literal& l) const;
  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }

  bool subset_of(const Interpretation& o) const;
  bool proper_subset_of(const Interpretation& o) const {
    return size() < o.size() && subset_of(o);
  }

  bool operator==(const Interpretation& o) const { return lits_ == o.lits_; }
  /// Order used everywhere answer sets are listed: by size, then
  /// lexicographically on the sorted literal sequence.
  bool operator<(const Interpretation& o) const;

  std::string str() const;  // "{a, -b}"

 private:
  std::vector<Literal> lits_;  // sorted, unique
};

// --- aux-atom naming -------------------------------------------------------
//
// Deterministic injective naming for the atoms the nonnested translation
// introduces. Underscores inside user atom names are doubled so that the
// flat "_"-joined rendering stays decodable; names without underscores come
// out in the plain form, e.g. q_not_a and q_0_le_a_1_b_1.

enum class WeightRelation { kAtLeast /* w <= S */, kLessThan /* w < S */ };

/// q_not_<l>: the negation atom abbreviating "not l".
Atom naf_aux_atom(const Literal& l);

/// q_<w>_le/lt_<prefix>: the weight atom abbreviating [w <= S] or [w < S]
/// for an initial segment of some constraint's element list.
Atom weight_aux_atom(WeightRelation rel, const Bound& bound,
                     const std::vector<WeightedElement>& prefix);

// --- signatures ------------------------------------------------------------

/// All atoms occurring anywhere in the program, in first-occurrence order.
std::vector<Atom> signature(const WProgram& p);
std::vector<Atom> signature(const NProgram& p);
void collect_atoms(const Formula& f, std::vector<Atom>& out);

/// All literals occurring in the program (inside weight constraints, or as
/// Lit nodes of formulas), in first-occurrence order.
std::vector<Literal> occurring_literals(const WProgram& p);
std::vector<Literal> occurring_literals(const NProgram& p);

bool contains_classical_negation(const Formula& f);
bool contains_classical_negation(const NProgram& p);

}  // namespace wcnest

#endif  // WCNEST_CORE_HPP
