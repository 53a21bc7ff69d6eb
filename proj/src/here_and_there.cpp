// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/here_and_there.hpp"

#include <algorithm>

#include "wcnest/translate.hpp"
#include "wcnest/weight_semantics.hpp"

namespace wcnest {

// --- PropFormula -------------------------------------------------------------

PropFormula PropFormula::make(Node n) {
  return PropFormula(std::make_shared<const Node>(std::move(n)));
}

PropFormula PropFormula::bot() {
  static const PropFormula f = make(Node{Kind::kBot, {}, {}});
  return f;
}

PropFormula PropFormula::top() {
  static const PropFormula f = make(Node{Kind::kTop, {}, {}});
  return f;
}

PropFormula PropFormula::lit(Literal l) {
  return make(Node{Kind::kLit, std::move(l), {}});
}

PropFormula PropFormula::neg(PropFormula f) {
  return make(Node{Kind::kNeg, {}, {std::move(f)}});
}

PropFormula PropFormula::conj(std::vector<PropFormula> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return fs.front();
  return make(Node{Kind::kAnd, {}, std::move(fs)});
}

PropFormula PropFormula::disj(std::vector<PropFormula> fs) {
  if (fs.empty()) return bot();
  if (fs.size() == 1) return fs.front();
  return make(Node{Kind::kOr, {}, std::move(fs)});
}

PropFormula PropFormula::implies(PropFormula lhs, PropFormula rhs) {
  return make(Node{Kind::kImplies, {}, {std::move(lhs), std::move(rhs)}});
}

PropFormula PropFormula::iff(PropFormula lhs, PropFormula rhs) {
  return make(Node{Kind::kIff, {}, {std::move(lhs), std::move(rhs)}});
}

const Literal& PropFormula::literal() const {
  if (kind() != Kind::kLit) throw std::logic_error("not a literal node");
  return node_->literal;
}

bool PropFormula::operator==(const PropFormula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::kBot:
    case Kind::kTop:
      return true;
    case Kind::kLit:
      return node_->literal == o.node_->literal;
    default:
      return node_->parts == o.node_->parts;
  }
}

std::string print_prop_formula(const PropFormula& f) {
  auto wrap = [](const PropFormula& g) {
    std::string s = print_prop_formula(g);
    switch (g.kind()) {
      case PropFormula::Kind::kBot:
      case PropFormula::Kind::kTop:
      case PropFormula::Kind::kLit:
      case PropFormula::Kind::kNeg:
        return s;
      default:
        return "(" + s + ")";
    }
  };
  switch (f.kind()) {
    case PropFormula::Kind::kBot:
      return "false";
    case PropFormula::Kind::kTop:
      return "true";
    case PropFormula::Kind::kLit:
      return f.literal().str();
    case PropFormula::Kind::kNeg:
      return "~" + wrap(f.parts().front());
    case PropFormula::Kind::kAnd:
    case PropFormula::Kind::kOr: {
      std::string sep = f.kind() == PropFormula::Kind::kAnd ? " & " : " | ";
      std::string s;
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) s += sep;
        s += wrap(f.parts()[i]);
      }
      return s;
    }
    case PropFormula::Kind::kImplies:
      return wrap(f.parts()[0]) + " -> " + wrap(f.parts()[1]);
    case PropFormula::Kind::kIff:
      return wrap(f.parts()[0]) + " <-> " + wrap(f.parts()[1]);
  }
  return "";  // unreachable
}

void collect_atoms(const PropFormula& f, std::vector<Atom>& out) {
  if (f.kind() == PropFormula::Kind::kLit) {
    for (const auto& a : out) {
      if (a == f.literal().atom) return;
    }
    out.push_back(f.literal().atom);
    return;
  }
  if (f.kind() == PropFormula::Kind::kBot || f.kind() == PropFormula::Kind::kTop) {
    return;
  }
  for (const auto& p : f.parts()) collect_atoms(p, out);
}

bool contains_classical_negation(const PropFormula& f) {
  if (f.kind() == PropFormula::Kind::kLit) return f.literal().neg;
  if (f.kind() == PropFormula::Kind::kBot || f.kind() == PropFormula::Kind::kTop) {
    return false;
  }
  for (const auto& p : f.parts()) {
    if (contains_classical_negation(p)) return true;
  }
  return false;
}

// --- HT semantics ------------------------------------------------------------

HTInterpretation::HTInterpretation(std::set<Atom> h, std::set<Atom> t)
    : here(std::move(h)), there(std::move(t)) {
  if (!std::includes(there.begin(), there.end(), here.begin(), here.end())) {
    throw std::invalid_argument("HT-interpretation requires here <= there");
  }
}

std::string HTInterpretation::str() const {
  auto render = [](const std::set<Atom>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : s) {
      if (!first) out += ", ";
      out += a.name;
      first = false;
    }
    return out + "}";
  };
  return "here=" + render(here) + " there=" + render(there);
}

PropFormula formula_to_prop(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
      return PropFormula::bot();
    case Formula::Kind::kTop:
      return PropFormula::top();
    case Formula::Kind::kLit:
      return PropFormula::lit(f.literal());
    case Formula::Kind::kNot:
      return PropFormula::neg(formula_to_prop(f.child()));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<PropFormula> parts;
      parts.reserve(f.parts().size());
      for (const auto& p : f.parts()) parts.push_back(formula_to_prop(p));
      return f.kind() == Formula::Kind::kAnd
                 ? PropFormula::conj(std::move(parts))
                 : PropFormula::disj(std::move(parts));
    }
  }
  return PropFormula::bot();  // unreachable
}

PropFormula rule_to_implication(const NRule& r) {
  return PropFormula::implies(formula_to_prop(r.body),
                              formula_to_prop(r.head));
}

bool classically_satisfies(const std::set<Atom>& model, const PropFormula& f) {
  switch (f.kind()) {
    case PropFormula::Kind::kBot:
      return false;
    case PropFormula::Kind::kTop:
      return true;
    case PropFormula::Kind::kLit:
      return model.count(f.literal().atom) > 0;
    case PropFormula::Kind::kNeg:
      return !classically_satisfies(model, f.parts().front());
    case PropFormula::Kind::kAnd:
      for (const auto& p : f.parts()) {
        if (!classically_satisfies(model, p)) return false;
      }
      return true;
    case PropFormula::Kind::kOr:
      for (const auto& p : f.parts()) {
        if (classically_satisfies(model, p)) return true;
      }
      return false;
    case PropFormula::Kind::kImplies:
      return !classically_satisfies(model, f.parts()[0]) ||
             classically_satisfies(model, f.parts()[1]);
    case PropFormula::Kind::kIff:
      return classically_satisfies(model, f.parts()[0]) ==
             classically_satisfies(model, f.parts()[1]);
  }
  return false;  // unreachable
}

namespace {

bool ht_eval(const HTInterpretation& i, const PropFormula& f) {
  switch (f.kind()) {
    case PropFormula::Kind::kBot:
      return false;
    case PropFormula::Kind::kTop:
      return true;
    case PropFormula::Kind::kLit:
      return i.here.count(f.literal().atom) > 0;
    case PropFormula::Kind::kNeg:
      // -F is F -> bot
      return !ht_eval(i, f.parts().front()) &&
             !classically_satisfies(i.there, f.parts().front());
    case PropFormula::Kind::kAnd:
      for (const auto& p : f.parts()) {
        if (!ht_eval(i, p)) return false;
      }
      return true;
    case PropFormula::Kind::kOr:
      for (const auto& p : f.parts()) {
        if (ht_eval(i, p)) return true;
      }
      return false;
    case PropFormula::Kind::kImplies:
      return (!ht_eval(i, f.parts()[0]) || ht_eval(i, f.parts()[1])) &&
             classically_satisfies(i.there, f);
    case PropFormula::Kind::kIff:
      return ht_eval(i, PropFormula::implies(f.parts()[0], f.parts()[1])) &&
             ht_eval(i, PropFormula::implies(f.parts()[1], f.parts()[0]));
  }
  return false;  // unreachable
}

}  // namespace

bool ht_satisfies(const HTInterpretation& i, const PropFormula& f) {
  if (contains_classical_negation(f)) {
    throw std::invalid_argument(
        "formula contains classical negation; run "
        "eliminate_classical_negation first");
  }
  return ht_eval(i, f);
}

std::vector<HTInterpretation> ht_models(
    const std::vector<PropFormula>& formulas, const std::vector<Atom>& sig,
    std::size_t cap) {
  if (sig.size() > cap) throw CapExceeded(sig.size(), cap);
  std::vector<Atom> atoms = sig;
  std::sort(atoms.begin(), atoms.end());
  std::size_t n = atoms.size();
  std::vector<HTInterpretation> out;
  for (std::uint64_t t = 0; t < (std::uint64_t(1) << n); ++t) {
    std::set<Atom> there;
    for (std::size_t k = 0; k < n; ++k) {
      if (t & (std::uint64_t(1) << k)) there.insert(atoms[k]);
    }
    // h ranges over the submasks of t
    std::uint64_t h = t;
    while (true) {
      std::set<Atom> here;
      for (std::size_t k = 0; k < n; ++k) {
        if (h & (std::uint64_t(1) << k)) here.insert(atoms[k]);
      }
      HTInterpretation i(std::move(here), there);
      bool ok = true;
      for (const auto& f : formulas) {
        if (!ht_satisfies(i, f)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(i));
      if (h == 0) break;
      h = (h - 1) & t;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- classical-negation elimination ------------------------------------------

namespace {

Atom primed_atom(const Atom& a) {
  // reserved prefix keeps primes clear of user atoms
  return Atom{"q_neg_" + a.name, AtomKind::kAuxNegation};
}

Formula rename_cn(const Formula& f, std::map<Atom, Atom>& renamed) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
      return f;
    case Formula::Kind::kLit: {
      const Literal& l = f.literal();
      if (!l.neg) return f;
      auto it = renamed.find(l.atom);
      if (it == renamed.end()) {
        it = renamed.emplace(l.atom, primed_atom(l.atom)).first;
      }
      return Formula::lit(Literal{it->second, false});
    }
    case Formula::Kind::kNot:
      return Formula::naf(rename_cn(f.child(), renamed));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const auto& p : f.parts()) parts.push_back(rename_cn(p, renamed));
      return f.kind() == Formula::Kind::kAnd ? big_and(std::move(parts))
                                             : big_or(std::move(parts));
    }
  }
  return f;  // unreachable
}

}  // namespace

CnElimination eliminate_classical_negation(const NProgram& p) {
  CnElimination out;
  out.program.aux_atoms = p.aux_atoms;
  for (const auto& r : p.rules) {
    out.program.rules.push_back(NRule{rename_cn(r.head, out.renamed),
                                      rename_cn(r.body, out.renamed)});
  }
  for (const auto& [orig, prime] : out.renamed) {
    out.constraints.push_back(PropFormula::neg(PropFormula::conj(
        {PropFormula::atom(orig), PropFormula::atom(prime)})));
  }
  return out;
}

// --- strong equivalence -------------------------------------------------------

namespace {

// Shared renaming across both programs so the constraints line up.
std::pair<CnElimination, CnElimination> eliminate_shared(const NProgram& p1,
                                                         const NProgram& p2) {
  CnElimination e1 = eliminate_classical_negation(p1);
  CnElimination e2;
  e2.renamed = e1.renamed;
  e2.program.aux_atoms = p2.aux_atoms;
  for (const auto& r : p2.rules) {
    e2.program.rules.push_back(NRule{rename_cn(r.head, e2.renamed),
                                     rename_cn(r.body, e2.renamed)});
  }
  // rebuild both constraint sets from the union of renamings
  e1.renamed = e2.renamed;
  e1.constraints.clear();
  e2.constraints.clear();
  for (const auto& [orig, prime] : e2.renamed) {
    PropFormula c = PropFormula::neg(PropFormula::conj(
        {PropFormula::atom(orig), PropFormula::atom(prime)}));
    e1.constraints.push_back(c);
    e2.constraints.push_back(c);
  }
  return {std::move(e1), std::move(e2)};
}

}  // namespace

StrongEqResult strong_eq_nested(const NProgram& p1, const NProgram& p2,
                                std::size_t cap) {
  auto [e1, e2] = eliminate_shared(p1, p2);

  std::vector<PropFormula> f1, f2;
  for (const auto& r : e1.program.rules) f1.push_back(rule_to_implication(r));
  for (const auto& r : e2.program.rules) f2.push_back(rule_to_implication(r));
  for (const auto& c : e1.constraints) {
    f1.push_back(c);
    f2.push_back(c);
  }

  std::vector<Atom> sig;
  for (const auto& a : signature(e1.program)) sig.push_back(a);
  for (const auto& a : signature(e2.program)) {
    if (std::find(sig.begin(), sig.end(), a) == sig.end()) sig.push_back(a);
  }
  for (const auto& [orig, prime] : e1.renamed) {
    if (std::find(sig.begin(), sig.end(), orig) == sig.end()) sig.push_back(orig);
    if (std::find(sig.begin(), sig.end(), prime) == sig.end()) sig.push_back(prime);
  }

  if (sig.size() > cap) throw CapExceeded(sig.size(), cap);
  std::sort(sig.begin(), sig.end());

  auto all_hold = [](const HTInterpretation& i,
                     const std::vector<PropFormula>& fs) {
    for (const auto& f : fs) {
      if (!ht_satisfies(i, f)) return false;
    }
    return true;
  };

  StrongEqResult result;
  result.equivalent = true;
  std::size_t n = sig.size();
  for (std::uint64_t t = 0; t < (std::uint64_t(1) << n); ++t) {
    std::set<Atom> there;
    for (std::size_t k = 0; k < n; ++k) {
      if (t & (std::uint64_t(1) << k)) there.insert(sig[k]);
    }
    std::uint64_t h = t;
    while (true) {
      std::set<Atom> here;
      for (std::size_t k = 0; k < n; ++k) {
        if (h & (std::uint64_t(1) << k)) here.insert(sig[k]);
      }
      HTInterpretation i(std::move(here), there);
      if (all_hold(i, f1) != all_hold(i, f2)) {
        result.equivalent = false;
        result.witness = std::move(i);
        return result;
      }
      if (h == 0) break;
      h = (h - 1) & t;
    }
  }
  return result;
}

StrongEqResult strong_eq_weight(const WProgram& p1, const WProgram& p2,
                                std::size_t cap) {
  return strong_eq_nested(tr_basic(p1).output, tr_basic(p2).output, cap);
}

bool ht_equivalent(const Formula& f, const Formula& g, std::size_t cap) {
  NProgram pf{{NRule{f, Formula::top()}}, {}};
  NProgram pg{{NRule{g, Formula::top()}}, {}};
  auto [ef, eg] = eliminate_shared(pf, pg);
  PropFormula a = formula_to_prop(ef.program.rules.front().head);
  PropFormula b = formula_to_prop(eg.program.rules.front().head);
  std::vector<Atom> sig;
  collect_atoms(a, sig);
  collect_atoms(b, sig);
  if (sig.size() > cap) throw CapExceeded(sig.size(), cap);
  std::sort(sig.begin(), sig.end());
  std::size_t n = sig.size();
  for (std::uint64_t t = 0; t < (std::uint64_t(1) << n); ++t) {
    std::set<Atom> there;
    for (std::size_t k = 0; k < n; ++k) {
      if (t & (std::uint64_t(1) << k)) there.insert(sig[k]);
    }
    std::uint64_t h = t;
    while (true) {
      std::set<Atom> here;
      for (std::size_t k = 0; k < n; ++k) {
        if (h & (std::uint64_t(1) << k)) here.insert(sig[k]);
      }
      HTInterpretation i(std::move(here), there);
      if (ht_satisfies(i, a) != ht_satisfies(i, b)) return false;
      if (h == 0) break;
      h = (h - 1) & t;
    }
  }
  return true;
}

}  // namespace wcnest
