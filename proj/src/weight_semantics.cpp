// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/weight_semantics.hpp"

#include <algorithm>
#include <cassert>

namespace wcnest {

bool satisfies(const Interpretation& z, const RuleElement& e) {
  return e.naf ? !z.contains(e.lit) : z.contains(e.lit);
}

bool satisfies(const Interpretation& z, const WeightConstraint& c) {
  Rational sum;
  for (const auto& we : c.elements()) {
    if (satisfies(z, we.element)) sum += we.weight;
  }
  return c.lower() <= sum && sum <= c.upper();
}

bool satisfies(const Interpretation& z, const WRule& r) {
  for (const auto& c : r.body) {
    if (!satisfies(z, c)) return true;
  }
  return satisfies(z, r.head);
}

bool satisfies(const Interpretation& z, const WProgram& p) {
  for (const auto& r : p.rules) {
    if (!satisfies(z, r)) return false;
  }
  return true;
}

bool is_horn_constraint(const WeightConstraint& c) {
  if (!c.upper().is_pos_inf()) return false;
  for (const auto& we : c.elements()) {
    if (we.element.naf) return false;
  }
  return true;
}

WeightConstraint reduct_lower(const WeightConstraint& c,
                              const Interpretation& z) {
  assert(c.upper().is_pos_inf());
  Bound lower = c.lower();
  std::vector<WeightedElement> kept;
  for (const auto& we : c.elements()) {
    if (!we.element.naf) {
      kept.push_back(we);
    } else if (satisfies(z, we.element)) {
      lower = lower - we.weight;
    }
  }
  return WeightConstraint(lower, std::move(kept), Bound::pos_inf());
}

std::vector<HornRule> reduct(const WProgram& p, const Interpretation& z) {
  std::vector<HornRule> out;
  for (const auto& r : p.rules) {
    bool uppers_hold = true;
    for (const auto& c : r.body) {
      Rational sum;
      for (const auto& we : c.elements()) {
        if (satisfies(z, we.element)) sum += we.weight;
      }
      if (!(sum <= c.upper())) {
        uppers_hold = false;
        break;
      }
    }
    if (!uppers_hold) continue;
    std::vector<WeightConstraint> body;
    body.reserve(r.body.size());
    for (const auto& c : r.body) {
      WeightConstraint lower_part(c.lower(), c.elements(), Bound::pos_inf());
      body.push_back(reduct_lower(lower_part, z));
    }
    for (const auto& we : r.head.elements()) {
      if (!we.element.naf && z.contains(we.element.lit)) {
        HornRule hr{we.element.lit, body};
        if (std::find(out.begin(), out.end(), hr) == out.end()) {
          out.push_back(std::move(hr));
        }
      }
    }
  }
  return out;
}

namespace {

bool horn_body_holds(const std::set<Literal>& derived,
                     const std::vector<WeightConstraint>& body) {
  for (const auto& c : body) {
    Rational sum;
    for (const auto& we : c.elements()) {
      if (derived.count(we.element.lit)) sum += we.weight;
    }
    if (!(c.lower() <= sum)) return false;
  }
  return true;
}

}  // namespace

std::set<Literal> deductive_closure(const std::vector<HornRule>& rules) {
  std::set<Literal> derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (derived.count(r.head)) continue;
      if (horn_body_holds(derived, r.body)) {
        derived.insert(r.head);
        changed = true;
      }
    }
  }
  return derived;
}

bool satisfies(const Interpretation& z, const std::vector<HornRule>& rules) {
  for (const auto& r : rules) {
    bool body_holds = true;
    for (const auto& c : r.body) {
      if (!satisfies(z, c)) {
        body_holds = false;
        break;
      }
    }
    if (body_holds && !z.contains(r.head)) return false;
  }
  return true;
}

namespace {

// Distinct literals of positive head elements. Any answer set equals the
// closure of a reduct, whose heads all come from this pool, so restricting
// candidate sets to its consistent subsets is exact.
std::vector<Literal> head_literal_pool(const WProgram& p) {
  std::vector<Literal> pool;
  for (const auto& r : p.rules) {
    for (const auto& we : r.head.elements()) {
      if (we.element.naf) continue;
      if (std::find(pool.begin(), pool.end(), we.element.lit) == pool.end()) {
        pool.push_back(we.element.lit);
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Enumerates every consistent subset of the pool exactly once, as an
// odometer over per-atom choices (absent / positive / negative, with the
// polarities limited to what the pool offers).
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

}  // namespace

std::vector<Interpretation> answer_sets(const WProgram& p, std::size_t cap) {
  std::size_t atoms = signature(p).size();
  if (atoms > cap) throw CapExceeded(atoms, cap);
  std::vector<Interpretation> out;
  for_each_consistent_subset(head_literal_pool(p), [&](Interpretation z) {
    if (!satisfies(z, p)) return;
    std::set<Literal> cl = deductive_closure(reduct(p, z));
    std::set<Literal> zs(z.literals().begin(), z.literals().end());
    if (cl == zs) out.push_back(std::move(z));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Consistent literal sets over {a, -a : a in atoms}: three choices per atom.
template <typename Fn>
void for_each_consistent_set(const std::vector<Atom>& atoms, Fn&& fn) {
  std::vector<int> choice(atoms.size(), 0);  // 0 = out, 1 = a, 2 = -a
  while (true) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (choice[i] == 1) lits.push_back(Literal{atoms[i], false});
      if (choice[i] == 2) lits.push_back(Literal{atoms[i], true});
    }
    fn(Interpretation(std::move(lits)));
    std::size_t i = 0;
    while (i < atoms.size() && choice[i] == 2) choice[i++] = 0;
    if (i == atoms.size()) return;
    ++choice[i];
  }
}

}  // namespace

TurnerResult turner_strong_eq(const WProgram& p1, const WProgram& p2,
                              std::size_t cap) {
  std::vector<Atom> atoms = signature(p1);
  for (const auto& a : signature(p2)) {
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) {
      atoms.push_back(a);
    }
  }
  if (atoms.size() > cap) throw CapExceeded(atoms.size(), cap);

  TurnerResult result;
  result.equivalent = true;
  for_each_consistent_set(atoms, [&](const Interpretation& z) {
    if (!result.equivalent) return;
    bool sat1 = satisfies(z, p1);
    bool sat2 = satisfies(z, p2);
    std::vector<HornRule> red1 = reduct(p1, z);
    std::vector<HornRule> red2 = reduct(p2, z);
    const auto& zl = z.literals();
    std::size_t n = zl.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      std::vector<Literal> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t(1) << i)) sub.push_back(zl[i]);
      }
      Interpretation zp(std::move(sub));
      bool lhs = sat1 && satisfies(zp, red1);
      bool rhs = sat2 && satisfies(zp, red2);
      if (lhs != rhs) {
        result.equivalent = false;
        result.witness = {z, zp};
        return;
      }
    }
  });
  return result;
}

}  // namespace wcnest
