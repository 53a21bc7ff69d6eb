// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#ifndef WCNEST_TESTS_HELPERS_HPP
#define WCNEST_TESTS_HELPERS_HPP

#include <string>
#include <variant>
#include <vector>

#include "wcnest/core.hpp"
#include "wcnest/parser.hpp"

namespace wcnest::test {

inline WProgram wprog(const std::string& text) {
  auto parsed = parse_weight_program(text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    throw std::runtime_error("unparseable weight program: " + err->str() +
                             "\n" + text);
  }
  return std::get<WProgram>(parsed);
}

inline NProgram nprog(const std::string& text) {
  auto parsed = parse_nested_program(text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    throw std::runtime_error("unparseable nested program: " + err->str() +
                             "\n" + text);
  }
  return std::get<NProgram>(parsed);
}

inline Literal lit(const std::string& s) {
  if (!s.empty() && s[0] == '-') {
    return Literal{Atom{s.substr(1), AtomKind::kUser}, true};
  }
  return Literal{Atom{s, AtomKind::kUser}, false};
}

inline Interpretation interp(const std::vector<std::string>& lits) {
  std::vector<Literal> ls;
  ls.reserve(lits.size());
  for (const auto& s : lits) ls.push_back(lit(s));
  return Interpretation(std::move(ls));
}

inline std::vector<Interpretation> interps(
    const std::vector<std::vector<std::string>>& sets) {
  std::vector<Interpretation> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(interp(s));
  return out;
}

}  // namespace wcnest::test

#endif  // WCNEST_TESTS_HELPERS_HPP
