// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Text grammars, validating parsers and canonical printers for both
// program languages.
//
// Weight programs (ASCII):
//   literal    := ATOM | "-" ATOM
//   element    := ["not"] literal
//   pair       := element ["=" NUMBER]          (omitted weight means 1)
//   constraint := [NUMBER "<="] "{" pair ("," pair)* "}" ["<=" NUMBER]
//               | element                       (sugar for 1 <= {element=1})
//   rule       := [constraint] [":-" constraint ("," constraint)*] "."
//   NUMBER     := ["-"] digits ["." digits | "/" digits]
// A missing head stands for 1 <= {}. Infinite bounds are written by
// omission only. "%" starts a comment running to end of line.
//
// Nested programs:
//   formula := "bot" | "top" | literal | "not" formula
//            | formula "," formula | formula ";" formula | "(" formula ")"
//   rule    := formula [":-" formula] "."
// Precedence: not > "," > ";". Chains of the same connective parse into one
// n-ary node. A bare formula F is the rule F :- top.
//
// Atom names match [a-z][A-Za-z0-9_]*; "not", "bot" and "top" are reserved
// words. Weight programs additionally may not use atoms starting with the
// reserved prefix "q_" (those belong to translations).

#ifndef WCNEST_PARSER_HPP
#define WCNEST_PARSER_HPP

#include <string>
#include <variant>

#include "wcnest/core.hpp"

namespace wcnest {

struct ParseError {
  enum class Kind { kSyntax, kValidation };
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  Kind kind = Kind::kSyntax;

  std::string str() const;
};

std::variant<WProgram, ParseError> parse_weight_program(const std::string& text);
std::variant<NProgram, ParseError> parse_nested_program(const std::string& text);

/// Canonical text. parse(print(p)) is structurally equal to p; rule order is
/// preserved; weights equal to 1 print in the cardinality shorthand;
/// parentheses are minimal.
std::string print_weight_program(const WProgram& p);
std::string print_nested_program(const NProgram& p);

std::string print_constraint(const WeightConstraint& c);
std::string print_formula(const Formula& f);
std::string print_wrule(const WRule& r);
std::string print_nrule(const NRule& r);

}  // namespace wcnest

#endif  // WCNEST_PARSER_HPP
