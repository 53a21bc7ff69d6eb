// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/verify.hpp"

#include <algorithm>

#include "wcnest/completion.hpp"
#include "wcnest/here_and_there.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"
#include "wcnest/translate.hpp"
#include "wcnest/weight_semantics.hpp"

namespace wcnest {

namespace {

void record_failure(CheckResult& r, const std::string& what) {
  ++r.failures;
  if (r.first_failure.empty()) r.first_failure = what;
}

template <typename Fn>
CheckResult run_check(const std::string& name, std::uint64_t seed, int cases,
                      Fn&& one_case) {
  CheckResult r;
  r.name = name;
  r.cases = cases;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) one_case(rng, r);
  return r;
}

}  // namespace

CheckResult check_theorem1(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("theorem 1", seed, cases, [&](Rng& rng, CheckResult& r) {
    WProgram w = rand_wprogram(rng, p);
    auto direct = answer_sets(w);
    auto translated = answer_sets(tr_basic(w).output);
    if (direct != translated) record_failure(r, print_weight_program(w));
  });
}

CheckResult check_theorem2(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("theorem 2", seed, cases, [&](Rng& rng, CheckResult& r) {
    WProgram w = rand_wprogram(rng, p);
    TranslationReport nn = tr_nn(w);
    std::vector<Interpretation> expected = answer_sets(w);
    std::vector<Interpretation> lifted = answer_sets_nonnested(nn.output);
    // project Z -> Z \ Q_Omega and demand a bijection
    std::vector<Interpretation> projected;
    for (const auto& z : lifted) {
      std::vector<Literal> keep;
      for (const auto& l : z.literals()) {
        if (!nn.q_omega.count(l.atom)) keep.push_back(l);
      }
      projected.push_back(Interpretation(std::move(keep)));
    }
    std::vector<Interpretation> sorted = projected;
    std::sort(sorted.begin(), sorted.end());
    bool injective =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!injective || sorted != expected) {
      record_failure(r, print_weight_program(w));
    }
  });
}

CheckResult check_prop1(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("proposition 1", seed, cases, [&](Rng& rng, CheckResult& r) {
    int m = rand_int(rng, 0, 4);
    std::vector<std::pair<Formula, Rational>> fs;
    for (int i = 0; i < m; ++i) {
      fs.emplace_back(rand_formula(rng, p, 2), rand_weight(rng, p));
    }
    Rational total;
    for (const auto& [f, w] : fs) total += w;
    Bound bound(Rational(rand_int(rng, -2, static_cast<int>(total.floor()) + 2)));
    ThresholdMode mode = rand_percent(rng, 50) ? ThresholdMode::kAtLeast
                                               : ThresholdMode::kGreaterThan;
    Formula big = threshold_formula(fs, bound, mode);
    Interpretation z = rand_interpretation(rng, p);
    Rational satisfied_weight;
    for (const auto& [f, w] : fs) {
      if (satisfies(z, f)) satisfied_weight += w;
    }
    bool in_x = mode == ThresholdMode::kAtLeast ? bound <= satisfied_weight
                                                : bound < satisfied_weight;
    if (satisfies(z, big) != in_x) {
      record_failure(r, print_formula(big) + " at " + z.str());
    }
  });
}

CheckResult check_prop2(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("proposition 2", seed, cases, [&](Rng& rng, CheckResult& r) {
    WProgram w = rand_wprogram(rng, p);
    NProgram basic = tr_basic(w).output;
    NProgram nd = tr_nd(w).output;
    StrongEqResult eq = strong_eq_nested(nd, basic);
    if (!eq.equivalent || answer_sets(nd) != answer_sets(basic)) {
      record_failure(r, print_weight_program(w));
    }
  });
}

CheckResult check_prop3(std::uint64_t seed, int cases) {
  GenParams p;
  CheckResult r = run_check(
      "proposition 3", seed, cases, [&](Rng& rng, CheckResult& res) {
        WProgram w = rand_wprogram(rng, p);
        SizeMetrics m = size_metrics(w);
        // bound: count <= 2 * sum L(C)*(W(C)+L(C)+2) + 64
        Rational allowance(64);
        for (const auto& row : m.table) {
          Rational len(static_cast<std::int64_t>(row.length));
          allowance += Rational(2) * len * (row.weight + len + Rational(2));
        }
        if (Rational(m.weight_atom_count) > allowance) {
          record_failure(res, print_weight_program(w));
        }
      });
  // least-squares slope of weight-atom count against sum L(C)*W(C),
  // reported for the scaling claim (no hard tolerance; the claim is
  // asymptotic)
  Rng rng(seed);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < cases; ++i) {
    WProgram w = rand_wprogram(rng, p);
    SizeMetrics m = size_metrics(w);
    double x = static_cast<double>(m.sum_length_times_weight.num()) /
               static_cast<double>(m.sum_length_times_weight.den());
    double y = m.weight_atom_count;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = cases;
  double denom = n * sxx - sx * sx;
  if (denom != 0) {
    double slope = (n * sxy - sx * sy) / denom;
    r.name = "proposition 3 (fit slope " + std::to_string(slope) + ")";
  }
  return r;
}

CheckResult check_prop4(std::uint64_t seed, int cases) {
  GenParams p;
  p.max_atoms = 3;
  p.max_rules = 2;
  p.max_constraint_len = 3;
  p.cn_percent = 10;
  return run_check("proposition 4", seed, cases, [&](Rng& rng, CheckResult& r) {
    WProgram w1 = rand_wprogram(rng, p);
    WProgram w2 = rand_percent(rng, 30) ? w1 : rand_wprogram(rng, p);
    bool via_ht = strong_eq_weight(w1, w2).equivalent;
    bool via_turner = turner_strong_eq(w1, w2).equivalent;
    if (via_ht != via_turner) {
      record_failure(r, print_weight_program(w1) + "-- versus --\n" +
                            print_weight_program(w2));
    }
  });
}

CheckResult check_lemma1(std::uint64_t seed, int cases) {
  GenParams p;
  p.max_constraint_len = 6;
  return run_check("lemma 1", seed, cases, [&](Rng& rng, CheckResult& r) {
    WeightConstraint c = rand_constraint(rng, p);
    Interpretation z = rand_interpretation(rng, p);
    if (satisfies(z, tr_constraint(c)) != satisfies(z, c)) {
      record_failure(r, print_constraint(c) + " at " + z.str());
    }
  });
}

CheckResult check_lemma2(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("lemma 2", seed, cases, [&](Rng& rng, CheckResult& r) {
    WeightConstraint full = rand_constraint(rng, p);
    WeightConstraint c(full.lower(), full.elements(), Bound::pos_inf());
    Interpretation z = rand_interpretation(rng, p);
    Interpretation zp = rand_interpretation(rng, p);
    bool formula_route = satisfies(zp, reduct(tr_lower(c), z));
    bool weight_route = satisfies(zp, reduct_lower(c, z));
    if (formula_route != weight_route) {
      record_failure(r, print_constraint(c) + " at Z=" + z.str() +
                            " Z'=" + zp.str());
    }
  });
}

CheckResult check_lemma3(std::uint64_t seed, int cases) {
  GenParams p;
  return run_check("lemma 3", seed, cases, [&](Rng& rng, CheckResult& r) {
    WeightConstraint full = rand_constraint(rng, p);
    WeightConstraint c(Bound::neg_inf(), full.elements(), full.upper());
    Interpretation z = rand_interpretation(rng, p);
    Formula reduced = reduct(tr_upper(c), z);
    bool holds = satisfies(z, c);
    bool is_top = reduced == Formula::top();
    bool is_bot = reduced == Formula::bot();
    if (!(is_top || is_bot) || is_top != holds) {
      record_failure(r, print_constraint(c) + " at " + z.str());
    }
  });
}

CheckResult check_lemma8(std::uint64_t seed, int cases) {
  GenParams p;
  p.rational_weights = true;
  return run_check("lemma 8", seed, cases, [&](Rng& rng, CheckResult& r) {
    GenParams q = p;
    q.max_constraint_len = 4;
    WeightConstraint c = rand_constraint(rng, q);
    for (WeightRelation rel :
         {WeightRelation::kAtLeast, WeightRelation::kLessThan}) {
      Rational w(rand_int(rng, -2,
                          static_cast<int>(c.total_weight().floor()) + 2));
      ThresholdMode mode = rel == WeightRelation::kAtLeast
                               ? ThresholdMode::kAtLeast
                               : ThresholdMode::kGreaterThan;
      auto fs = [&](const std::vector<WeightedElement>& elems) {
        std::vector<std::pair<Formula, Rational>> out;
        for (const auto& we : elems) {
          out.emplace_back(element_formula(we.element), we.weight);
        }
        return out;
      };
      // [w <= S] with bound w means: sum >= w, i.e. at-least; [w < S] is the
      // strict version, i.e. threshold "greater-than w".
      Formula whole =
          threshold_formula(fs(c.elements()), Bound(w), mode);
      Formula unfolded = Formula::bot();
      Rational total = c.total_weight();
      bool trivially_true = rel == WeightRelation::kAtLeast
                                ? w <= Rational(0)
                                : w < Rational(0);
      bool reachable = rel == WeightRelation::kAtLeast ? w <= total : w < total;
      if (trivially_true) {
        unfolded = Formula::top();
      } else if (!reachable || c.elements().empty()) {
        unfolded = Formula::bot();
      } else {
        std::vector<WeightedElement> shorter(c.elements().begin(),
                                             c.elements().end() - 1);
        const WeightedElement& last = c.elements().back();
        Formula same = threshold_formula(fs(shorter), Bound(w), mode);
        Formula reduced =
            threshold_formula(fs(shorter), Bound(w - last.weight), mode);
        unfolded = big_or(
            {same, big_and({element_formula(last.element), reduced})});
      }
      if (!ht_equivalent(whole, unfolded)) {
        record_failure(r, print_constraint(c) + " with bound " + w.str());
        return;
      }
    }
  });
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int cases) {
  return {
      check_theorem1(seed, cases), check_theorem2(seed, cases),
      check_prop1(seed, cases),    check_prop2(seed, cases),
      check_prop3(seed, cases),    check_prop4(seed, cases),
      check_lemma1(seed, cases),   check_lemma2(seed, cases),
      check_lemma3(seed, cases),   check_lemma8(seed, cases),
  };
}

}  // namespace wcnest
