// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/nested_semantics.hpp"

#include <algorithm>

namespace wcnest {

bool satisfies(const Interpretation& z, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
      return false;
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kLit:
      return z.contains(f.literal());
    case Formula::Kind::kNot:
      return !satisfies(z, f.child());
    case Formula::Kind::kAnd:
      for (const auto& p : f.parts()) {
        if (!satisfies(z, p)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& p : f.parts()) {
        if (satisfies(z, p)) return true;
      }
      return false;
  }
  return false;  // unreachable
}

bool satisfies(const Interpretation& z, const NRule& r) {
  return !satisfies(z, r.body) || satisfies(z, r.head);
}

bool satisfies(const Interpretation& z, const NProgram& p) {
  for (const auto& r : p.rules) {
    if (!satisfies(z, r)) return false;
  }
  return true;
}

Formula reduct(const Formula& f, const Interpretation& z) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
    case Formula::Kind::kLit:
      return f;
    case Formula::Kind::kNot:
      return satisfies(z, f.child()) ? Formula::bot() : Formula::top();
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const auto& p : f.parts()) parts.push_back(reduct(p, z));
      return f.kind() == Formula::Kind::kAnd ? big_and(std::move(parts))
                                             : big_or(std::move(parts));
    }
  }
  return f;  // unreachable
}

NProgram reduct(const NProgram& p, const Interpretation& z) {
  NProgram out;
  out.aux_atoms = p.aux_atoms;
  out.rules.reserve(p.rules.size());
  for (const auto& r : p.rules) {
    out.rules.push_back(NRule{reduct(r.head, z), reduct(r.body, z)});
  }
  return out;
}

namespace {

// Literals with occurrences in rule heads outside negation as failure. Any
// literal of an answer set must occur there: dropping one that does not
// leaves the reduct satisfied (heads lose nothing, bodies of NAF-free
// formulas only shrink), contradicting minimality.
void collect_head_literals(const Formula& f, std::vector<Literal>& out) {
  switch (f.kind()) {
    case Formula::Kind::kLit:
      if (std::find(out.begin(), out.end(), f.literal()) == out.end()) {
        out.push_back(f.literal());
      }
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      for (const auto& p : f.parts()) collect_head_literals(p, out);
      return;
    default:
      return;  // constants; literals under "not" vanish in the reduct
  }
}

template <typename Fn>
void for_each_consistent_subset(const std::vector<Literal>& pool, Fn&& fn) {
  std::vector<std::vector<std::optional<Literal>>> options;
  for (const auto& l : pool) {
    bool seen = false;
    for (auto& opts : options) {
      if (opts[1] && opts[1]->atom == l.atom) {
        opts.push_back(l);
        seen = true;
        break;
      }
    }
    if (!seen) options.push_back({std::nullopt, l});
  }
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i][choice[i]]) lits.push_back(*options[i][choice[i]]);
    }
    fn(Interpretation(std::move(lits)));
    std::size_t i = 0;
    while (i < options.size() && choice[i] + 1 == options[i].size()) {
      choice[i++] = 0;
    }
    if (i == options.size()) return;
    ++choice[i];
  }
}

bool minimal_for(const NProgram& reduced, const Interpretation& z) {
  const auto& zl = z.literals();
  std::size_t n = zl.size();
  if (n >= 63) throw CapExceeded(n, 62);
  // all proper subsets of Z (subsets of a consistent set stay consistent)
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << n); ++mask) {
    std::vector<Literal> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t(1) << i)) sub.push_back(zl[i]);
    }
    if (satisfies(Interpretation(std::move(sub)), reduced)) return false;
  }
  return true;
}

}  // namespace

bool is_answer_set(const NProgram& p, const Interpretation& z) {
  NProgram reduced = reduct(p, z);
  return satisfies(z, reduced) && minimal_for(reduced, z);
}

std::vector<Interpretation> answer_sets(const NProgram& p, std::size_t cap) {
  std::size_t atoms = signature(p).size();
  if (atoms > cap) throw CapExceeded(atoms, cap);
  std::vector<Literal> pool;
  for (const auto& r : p.rules) collect_head_literals(r.head, pool);
  std::sort(pool.begin(), pool.end());
  std::vector<Interpretation> out;
  for_each_consistent_subset(pool, [&](Interpretation z) {
    if (is_answer_set(p, z)) out.push_back(std::move(z));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antichain(const std::vector<Interpretation>& sets) {
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (a.proper_subset_of(b)) return false;
    }
  }
  return true;
}

}  // namespace wcnest
