// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/translate.hpp"

#include <algorithm>
#include <deque>

#include "wcnest/here_and_there.hpp"
#include "wcnest/parser.hpp"

namespace wcnest {

namespace {

Rational subset_weight(const std::vector<std::pair<Formula, Rational>>& fs,
                       std::uint32_t mask) {
  Rational sum;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (mask & (std::uint32_t(1) << i)) sum += fs[i].second;
  }
  return sum;
}

bool qualifies(const Rational& sum, const Bound& bound, ThresholdMode mode) {
  return mode == ThresholdMode::kAtLeast ? bound <= sum : bound < sum;
}

std::vector<std::uint32_t> qualifying_masks(
    const std::vector<std::pair<Formula, Rational>>& fs, const Bound& bound,
    ThresholdMode mode) {
  if (fs.size() > kThresholdLengthGuard) {
    throw std::invalid_argument(
        "constraint of length " + std::to_string(fs.size()) +
        " exceeds the expansion guard of " +
        std::to_string(kThresholdLengthGuard) + " elements");
  }
  for (const auto& [f, w] : fs) {
    if (w.is_negative()) {
      throw std::invalid_argument("threshold formulas require nonnegative weights");
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << fs.size()); ++mask) {
    if (qualifies(subset_weight(fs, mask), bound, mode)) out.push_back(mask);
  }
  return out;
}

Formula masks_to_formula(const std::vector<std::pair<Formula, Rational>>& fs,
                         const std::vector<std::uint32_t>& masks) {
  std::vector<Formula> disjuncts;
  disjuncts.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    std::vector<Formula> conjuncts;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (mask & (std::uint32_t(1) << i)) conjuncts.push_back(fs[i].first);
    }
    disjuncts.push_back(big_and(std::move(conjuncts)));
  }
  return big_or(std::move(disjuncts));
}

}  // namespace

Formula threshold_formula(const std::vector<std::pair<Formula, Rational>>& fs,
                          const Bound& bound, ThresholdMode mode) {
  return masks_to_formula(fs, qualifying_masks(fs, bound, mode));
}

Formula minimize_antichain(const std::vector<std::pair<Formula, Rational>>& fs,
                           const Bound& bound, ThresholdMode mode) {
  std::vector<std::uint32_t> masks = qualifying_masks(fs, bound, mode);
  // With nonnegative weights the qualifying sets are upward closed, so a
  // set is minimal iff removing any single index disqualifies it.
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask : masks) {
    bool is_minimal = true;
    for (std::size_t i = 0; i < fs.size() && is_minimal; ++i) {
      std::uint32_t bit = std::uint32_t(1) << i;
      if ((mask & bit) &&
          qualifies(subset_weight(fs, mask & ~bit), bound, mode)) {
        is_minimal = false;
      }
    }
    if (is_minimal) minimal.push_back(mask);
  }
  return masks_to_formula(fs, minimal);
}

Formula element_formula(const RuleElement& e) {
  Formula l = Formula::lit(e.lit);
  return e.naf ? Formula::naf(std::move(l)) : l;
}

namespace {

std::vector<std::pair<Formula, Rational>> elements_as_formulas(
    const WeightConstraint& c) {
  std::vector<std::pair<Formula, Rational>> fs;
  fs.reserve(c.elements().size());
  for (const auto& we : c.elements()) {
    fs.emplace_back(element_formula(we.element), we.weight);
  }
  return fs;
}

Formula lower_formula(const WeightConstraint& c, bool minimized) {
  auto fs = elements_as_formulas(c);
  return minimized ? minimize_antichain(fs, c.lower(), ThresholdMode::kAtLeast)
                   : threshold_formula(fs, c.lower(), ThresholdMode::kAtLeast);
}

Formula upper_formula(const WeightConstraint& c, bool minimized,
                      bool integer_rewrite) {
  auto fs = elements_as_formulas(c);
  Bound threshold = c.upper();
  ThresholdMode mode = ThresholdMode::kGreaterThan;
  if (integer_rewrite && c.upper().is_finite()) {
    threshold = Bound(Rational(c.upper().value().floor() + 1));
    mode = ThresholdMode::kAtLeast;
  }
  Formula inner = minimized ? minimize_antichain(fs, threshold, mode)
                            : threshold_formula(fs, threshold, mode);
  return Formula::naf(std::move(inner));
}

bool all_weights_integer(const WeightConstraint& c) {
  for (const auto& we : c.elements()) {
    if (!we.weight.is_integer()) return false;
  }
  return true;
}

// [L <= S <= U] as a flat conjunct list; infinite bounds contribute nothing.
std::vector<Formula> constraint_conjuncts(const WeightConstraint& c,
                                          const TranslateOptions& opts) {
  std::vector<Formula> out;
  if (!c.lower().is_neg_inf()) out.push_back(lower_formula(c, opts.simplify));
  if (!c.upper().is_pos_inf()) {
    bool rewrite = opts.simplify && all_weights_integer(c);
    out.push_back(upper_formula(c, opts.simplify, rewrite));
  }
  return out;
}

std::vector<ConstraintMetrics> metrics_table(const WProgram& p) {
  std::vector<ConstraintMetrics> table;
  for (const auto& r : p.rules) {
    table.push_back({r.head, r.head.length(), r.head.total_weight()});
    for (const auto& c : r.body) {
      table.push_back({c, c.length(), c.total_weight()});
    }
  }
  return table;
}

// The self-check behind the --simplify flag: each simplified formula must
// keep the HT-models of its raw counterpart. Skipped above the HT cap.
void check_simplification(const Formula& raw, const Formula& simplified) {
  std::vector<Atom> atoms;
  collect_atoms(raw, atoms);
  collect_atoms(simplified, atoms);
  if (atoms.size() > 12) return;
  if (!ht_equivalent(raw, simplified)) {
    throw std::logic_error("simplification changed the HT-models of: " +
                           print_formula(raw));
  }
}

Formula maybe_simplify(const Formula& raw, const TranslateOptions& opts) {
  if (!opts.simplify) return raw;
  Formula s = simplify_formula(raw);
  check_simplification(raw, s);
  return s;
}

void finish_report(TranslationReport& report, const WProgram& input) {
  report.rule_count = static_cast<int>(report.output.rules.size());
  report.table = metrics_table(input);
  int weight_atoms = 0;
  for (const auto& a : report.q_omega) {
    if (a.kind == AtomKind::kAuxWeight) ++weight_atoms;
  }
  report.weight_atom_count = weight_atoms;
  report.output.aux_atoms = report.q_omega;
}

}  // namespace

Formula tr_lower(const WeightConstraint& c) {
  return lower_formula(c, false);
}

Formula tr_upper(const WeightConstraint& c) {
  return upper_formula(c, false, false);
}

Formula tr_constraint(const WeightConstraint& c) {
  return big_and(constraint_conjuncts(c, {}));
}

Formula simplify_integer_upper(const WeightConstraint& c) {
  if (!all_weights_integer(c)) {
    throw std::invalid_argument(
        "integer upper-bound rewrite requires integer weights");
  }
  if (c.upper().is_pos_inf()) return Formula::top();
  return upper_formula(c, false, true);
}

Formula simplify_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
    case Formula::Kind::kLit:
      return f;
    case Formula::Kind::kNot: {
      Formula c = simplify_formula(f.child());
      if (c == Formula::top()) return Formula::bot();
      if (c == Formula::bot()) return Formula::top();
      return Formula::naf(std::move(c));
    }
    case Formula::Kind::kAnd: {
      std::vector<Formula> parts;
      for (const auto& p : f.parts()) {
        Formula s = simplify_formula(p);
        if (s == Formula::bot()) return Formula::bot();
        if (s == Formula::top()) continue;
        parts.push_back(std::move(s));
      }
      return big_and(std::move(parts));
    }
    case Formula::Kind::kOr: {
      std::vector<Formula> parts;
      for (const auto& p : f.parts()) {
        Formula s = simplify_formula(p);
        if (s == Formula::top()) return Formula::top();
        if (s == Formula::bot()) continue;
        parts.push_back(std::move(s));
      }
      return big_or(std::move(parts));
    }
  }
  return f;  // unreachable
}

TranslationReport tr_basic(const WProgram& p, TranslateOptions opts) {
  TranslationReport report;
  for (const auto& r : p.rules) {
    std::vector<Formula> head;
    for (const auto& we : r.head.elements()) {
      if (we.element.naf) continue;
      Formula l = Formula::lit(we.element.lit);
      head.push_back(big_or({l, Formula::naf(l)}));
    }
    for (auto& c : constraint_conjuncts(r.head, opts)) head.push_back(std::move(c));
    std::vector<Formula> body;
    for (const auto& c : r.body) {
      for (auto& part : constraint_conjuncts(c, opts)) body.push_back(std::move(part));
    }
    NRule rule{maybe_simplify(big_and(std::move(head)), opts),
               maybe_simplify(big_and(std::move(body)), opts)};
    report.output.rules.push_back(std::move(rule));
  }
  finish_report(report, p);
  return report;
}

TranslationReport tr_nd(const WProgram& p, TranslateOptions opts) {
  TranslationReport report;
  for (const auto& r : p.rules) {
    std::vector<Formula> shared_body;
    for (const auto& c : r.body) {
      for (auto& part : constraint_conjuncts(c, opts)) {
        shared_body.push_back(std::move(part));
      }
    }
    for (const auto& we : r.head.elements()) {
      if (we.element.naf) continue;
      Formula l = Formula::lit(we.element.lit);
      std::vector<Formula> body{Formula::naf(Formula::naf(l))};
      body.insert(body.end(), shared_body.begin(), shared_body.end());
      report.output.rules.push_back(
          NRule{l, maybe_simplify(big_and(std::move(body)), opts)});
    }
    std::vector<Formula> body{
        Formula::naf(big_and(constraint_conjuncts(r.head, opts)))};
    body.insert(body.end(), shared_body.begin(), shared_body.end());
    report.output.rules.push_back(
        NRule{Formula::bot(), maybe_simplify(big_and(std::move(body)), opts)});
  }
  finish_report(report, p);
  return report;
}

// --- nonnested translation ----------------------------------------------------

namespace {

struct WeightAtomKey {
  WeightRelation rel;
  Bound bound;
  std::vector<WeightedElement> prefix;
};

class NnBuilder {
 public:
  explicit NnBuilder(TranslationReport& report) : report_(report) {}

  Atom reference(WeightRelation rel, const Bound& bound,
                 const std::vector<WeightedElement>& prefix) {
    Atom a = weight_aux_atom(rel, bound, prefix);
    if (report_.q_omega.insert(a).second) {
      queue_.push_back({rel, bound, prefix});
    }
    return a;
  }

  Atom reference_naf(const Literal& l) {
    Atom a = naf_aux_atom(l);
    report_.q_omega.insert(a);
    return a;
  }

  void emit(NRule rule) {
    for (const auto& r : report_.output.rules) {
      if (r == rule) return;  // closed programs are sets of rules
    }
    report_.output.rules.push_back(std::move(rule));
  }

  /// [C]^nn as a flat conjunct list: q_{L<=S}, not q_{U<S}.
  std::vector<Formula> constraint_nn(const WeightConstraint& c) {
    Atom lower = reference(WeightRelation::kAtLeast, c.lower(), c.elements());
    Atom upper = reference(WeightRelation::kLessThan, c.upper(), c.elements());
    return {Formula::lit(Literal{lower, false}),
            Formula::naf(Formula::lit(Literal{upper, false}))};
  }

  /// Saturate the definitions of every referenced weight atom, in
  /// first-reference order.
  void close() {
    while (!queue_.empty()) {
      WeightAtomKey key = std::move(queue_.front());
      queue_.pop_front();
      define(key);
    }
  }

 private:
  void define(const WeightAtomKey& key) {
    Atom self = weight_aux_atom(key.rel, key.bound, key.prefix);
    Rational total;
    for (const auto& we : key.prefix) total += we.weight;

    bool is_fact, is_recursive;
    if (key.rel == WeightRelation::kAtLeast) {
      is_fact = key.bound <= Rational(0);
      is_recursive = !is_fact && key.bound <= total;
    } else {
      is_fact = key.bound < Rational(0);
      is_recursive = !is_fact && key.bound < total;
    }
    if (is_fact) {
      emit(NRule{Formula::lit(Literal{self, false}), Formula::top()});
      return;
    }
    if (!is_recursive) return;  // bound unreachable: the atom has no rules

    std::vector<WeightedElement> shorter(key.prefix.begin(),
                                         key.prefix.end() - 1);
    const WeightedElement& last = key.prefix.back();
    Atom same_bound = reference(key.rel, key.bound, shorter);
    Atom reduced_bound =
        reference(key.rel, key.bound - last.weight, shorter);
    emit(NRule{Formula::lit(Literal{self, false}),
               Formula::lit(Literal{same_bound, false})});
    emit(NRule{Formula::lit(Literal{self, false}),
               big_and({element_formula(last.element),
                        Formula::lit(Literal{reduced_bound, false})})});
  }

  TranslationReport& report_;
  std::deque<WeightAtomKey> queue_;
};

}  // namespace

TranslationReport tr_nn(const WProgram& p, TranslateOptions) {
  for (const auto& a : signature(p)) {
    if (a.kind == AtomKind::kUser &&
        a.name.rfind(kReservedAtomPrefix, 0) == 0) {
      throw std::invalid_argument("atom '" + a.name +
                                  "' collides with the reserved prefix 'q_'");
    }
  }
  TranslationReport report;
  NnBuilder builder(report);
  for (const auto& r : p.rules) {
    std::vector<Formula> body_nn;
    for (const auto& c : r.body) {
      for (auto& part : builder.constraint_nn(c)) {
        body_nn.push_back(std::move(part));
      }
    }
    for (const auto& we : r.head.elements()) {
      if (we.element.naf) continue;
      const Literal& l = we.element.lit;
      Atom qnot = builder.reference_naf(l);
      builder.emit(NRule{Formula::lit(Literal{qnot, false}),
                         Formula::naf(Formula::lit(l))});
      std::vector<Formula> body{
          Formula::naf(Formula::lit(Literal{qnot, false}))};
      body.insert(body.end(), body_nn.begin(), body_nn.end());
      builder.emit(NRule{Formula::lit(l), big_and(std::move(body))});
    }
    Atom head_lower = builder.reference(WeightRelation::kAtLeast,
                                        r.head.lower(), r.head.elements());
    Atom head_upper = builder.reference(WeightRelation::kLessThan,
                                        r.head.upper(), r.head.elements());
    std::vector<Formula> b1{
        Formula::naf(Formula::lit(Literal{head_lower, false}))};
    b1.insert(b1.end(), body_nn.begin(), body_nn.end());
    builder.emit(NRule{Formula::bot(), big_and(std::move(b1))});
    std::vector<Formula> b2{Formula::lit(Literal{head_upper, false})};
    b2.insert(b2.end(), body_nn.begin(), body_nn.end());
    builder.emit(NRule{Formula::bot(), big_and(std::move(b2))});
  }
  builder.close();
  finish_report(report, p);
  return report;
}

SizeMetrics size_metrics(const WProgram& p) {
  SizeMetrics m;
  m.table = metrics_table(p);
  for (const auto& row : m.table) {
    m.sum_length_times_weight +=
        Rational(static_cast<std::int64_t>(row.length)) * row.weight;
  }
  m.weight_atom_count = tr_nn(p).weight_atom_count;
  return m;
}

}  // namespace wcnest
