// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Clark completion of nonnested programs, the tightness check, CNF export
// via the Tseitin transformation, and the model-based verifier that ties
// completion models back to the weight-constraint answer sets.

#ifndef WCNEST_COMPLETION_HPP
#define WCNEST_COMPLETION_HPP

#include <string>
#include <vector>

#include "wcnest/core.hpp"
#include "wcnest/here_and_there.hpp"
#include "wcnest/translate.hpp"
#include "wcnest/weight_semantics.hpp"

namespace wcnest {

/// Every head a literal or bot; every body a possibly empty conjunction of
/// literals, each possibly prefixed with not.
bool is_nonnested(const NProgram& p);

/// Per-atom equivalences a <-> (disjunction of the bodies of the rules with
/// head a; empty disjunction bot) plus the negated body of every bot-headed
/// rule. Requires a nonnested program free of classical negation.
std::vector<PropFormula> completion(const NProgram& p);

/// Positive dependency graph acyclicity: edges run from each rule's head
/// literal to the positive (non-NAF) literals of its body.
bool is_tight(const NProgram& p);

/// Classical models of the completion, as sets of true atoms over the
/// program's signature. Exact for any size: atoms on positive/negative
/// dependency cycles are enumerated, the rest follow from their
/// equivalences. Requires a nonnested program free of classical negation.
std::vector<Interpretation> completion_models(const NProgram& p);

/// Answer sets of a nonnested program of any size (classical negation
/// allowed): supported-model candidates filtered by the exact stability
/// check (least fixpoint of the reduct's literal-headed rules equals the
/// candidate and the bot-headed rules hold). Agrees with the brute-force
/// enumeration wherever both run.
std::vector<Interpretation> answer_sets_nonnested(const NProgram& p);

/// DIMACS-ready clause set over positive integer variables.
struct CnfDocument {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  /// variable -> atom name or fresh Tseitin label (labels start with '_').
  std::vector<std::pair<int, std::string>> var_names;
};

/// Tseitin transformation; equisatisfiable, and projection onto the
/// original variables preserves the model count (aux variables are
/// functionally determined).
CnfDocument to_dimacs(const std::vector<PropFormula>& formulas);

/// "c map" comment lines, the "p cnf" header, then the clauses.
std::string dimacs_string(const CnfDocument& doc);

/// Truth-table model enumeration for small formula sets (test oracle).
std::vector<std::set<Atom>> classical_models(
    const std::vector<PropFormula>& formulas, const std::vector<Atom>& sig,
    std::size_t cap = 20);

struct CompletionReport {
  bool tight = false;
  bool ok = false;
  std::string detail;
  std::vector<Interpretation> projected_models;  // of the completion
  std::vector<Interpretation> answer_sets;       // of the weight program
};

/// Checks that the classical models of completion(tr_nn(p)), projected by
/// dropping the translation's aux atoms, coincide with the answer sets of
/// p. Classical negation is renamed away first. Refuses (ok=false,
/// tight=false) when the translation is not tight, since the completion is
/// then not guaranteed to match.
CompletionReport verify_completion(const WProgram& p,
                                   std::size_t cap = kDefaultEnumerationCap);

}  // namespace wcnest

#endif  // WCNEST_COMPLETION_HPP
