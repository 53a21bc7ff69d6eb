// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/generator.hpp"

namespace wcnest {

int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool rand_percent(Rng& rng, int percent) {
  return rand_int(rng, 0, 99) < percent;
}

Atom rand_atom(Rng& rng, const GenParams& p) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  int n = p.max_atoms > 8 ? 8 : p.max_atoms;
  return Atom{names[rand_int(rng, 0, n - 1)], AtomKind::kUser};
}

Literal rand_literal(Rng& rng, const GenParams& p) {
  return Literal{rand_atom(rng, p), rand_percent(rng, p.cn_percent)};
}

RuleElement rand_element(Rng& rng, const GenParams& p) {
  return RuleElement{rand_literal(rng, p), rand_percent(rng, p.naf_percent)};
}

Rational rand_weight(Rng& rng, const GenParams& p) {
  if (p.rational_weights && rand_percent(rng, 30)) {
    return Rational(rand_int(rng, 0, 2 * p.max_weight),
                    rand_int(rng, 2, 3));
  }
  return Rational(rand_int(rng, 0, p.max_weight));
}

WeightConstraint rand_constraint(Rng& rng, const GenParams& p) {
  int len = rand_int(rng, 0, p.max_constraint_len);
  std::vector<WeightedElement> elements;
  Rational total;
  for (int i = 0; i < len; ++i) {
    WeightedElement we{rand_element(rng, p), rand_weight(rng, p)};
    total += we.weight;
    elements.push_back(std::move(we));
  }
  // bounds in [-2, W+2], or infinite by omission
  auto rand_bound = [&]() {
    return Bound(Rational(rand_int(rng, -2, static_cast<int>(total.floor()) + 2)));
  };
  Bound lower =
      rand_percent(rng, p.omit_bound_percent) ? Bound::neg_inf() : rand_bound();
  Bound upper =
      rand_percent(rng, p.omit_bound_percent) ? Bound::pos_inf() : rand_bound();
  return WeightConstraint(lower, std::move(elements), upper);
}

WRule rand_wrule(Rng& rng, const GenParams& p) {
  WRule r{rand_constraint(rng, p), {}};
  int n = rand_int(rng, 0, p.max_body_constraints);
  for (int i = 0; i < n; ++i) r.body.push_back(rand_constraint(rng, p));
  return r;
}

WProgram rand_wprogram(Rng& rng, const GenParams& p) {
  WProgram w;
  int n = rand_int(rng, 1, p.max_rules);
  for (int i = 0; i < n; ++i) w.rules.push_back(rand_wrule(rng, p));
  return w;
}

Formula rand_formula(Rng& rng, const GenParams& p, int depth) {
  if (depth == 0 || rand_percent(rng, 35)) {
    int k = rand_int(rng, 0, 9);
    if (k == 0) return Formula::top();
    if (k == 1) return Formula::bot();
    return Formula::lit(rand_literal(rng, p));
  }
  switch (rand_int(rng, 0, 2)) {
    case 0:
      return Formula::naf(rand_formula(rng, p, depth - 1));
    case 1: {
      std::vector<Formula> parts;
      int n = rand_int(rng, 2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(rand_formula(rng, p, depth - 1));
      return big_and(std::move(parts));
    }
    default: {
      std::vector<Formula> parts;
      int n = rand_int(rng, 2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(rand_formula(rng, p, depth - 1));
      return big_or(std::move(parts));
    }
  }
}

Formula rand_naf_free_formula(Rng& rng, const GenParams& p, int depth) {
  Formula f = rand_formula(rng, p, depth);
  // rebuild without naf nodes
  struct Strip {
    static Formula run(const Formula& g) {
      switch (g.kind()) {
        case Formula::Kind::kNot:
          return run(g.child());
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr: {
          std::vector<Formula> parts;
          for (const auto& q : g.parts()) parts.push_back(run(q));
          return g.kind() == Formula::Kind::kAnd ? big_and(std::move(parts))
                                                 : big_or(std::move(parts));
        }
        default:
          return g;
      }
    }
  };
  return Strip::run(f);
}

NProgram rand_nprogram(Rng& rng, const GenParams& p) {
  NProgram out;
  int n = rand_int(rng, 1, p.max_rules);
  for (int i = 0; i < n; ++i) {
    out.rules.push_back(
        NRule{rand_formula(rng, p, 2), rand_formula(rng, p, 2)});
  }
  return out;
}

NProgram rand_nonnested_program(Rng& rng, const GenParams& p) {
  NProgram out;
  int n = rand_int(rng, 1, p.max_rules + 2);
  for (int i = 0; i < n; ++i) {
    Formula head = rand_percent(rng, 15)
                       ? Formula::bot()
                       : Formula::lit(rand_literal(rng, p));
    std::vector<Formula> units;
    int m = rand_int(rng, 0, 3);
    for (int j = 0; j < m; ++j) {
      Formula l = Formula::lit(rand_literal(rng, p));
      units.push_back(rand_percent(rng, p.naf_percent)
                          ? Formula::naf(std::move(l))
                          : std::move(l));
    }
    out.rules.push_back(NRule{std::move(head), big_and(std::move(units))});
  }
  return out;
}

Interpretation rand_interpretation(Rng& rng, const GenParams& p) {
  std::vector<Literal> lits;
  int n = p.max_atoms > 8 ? 8 : p.max_atoms;
  for (int i = 0; i < n; ++i) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    switch (rand_int(rng, 0, 2)) {
      case 1:
        lits.push_back(Literal{Atom{names[i], AtomKind::kUser}, false});
        break;
      case 2:
        lits.push_back(Literal{Atom{names[i], AtomKind::kUser}, true});
        break;
      default:
        break;
    }
  }
  return Interpretation(std::move(lits));
}

}  // namespace wcnest
