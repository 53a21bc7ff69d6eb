// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/core.hpp"

#include <algorithm>

namespace wcnest {

WeightConstraint::WeightConstraint(Bound lower,
                                   std::vector<WeightedElement> elements,
                                   Bound upper)
    : lower_(lower), elements_(std::move(elements)), upper_(upper) {
  for (const auto& we : elements_) {
    if (we.weight.is_negative()) {
      throw std::invalid_argument("negative weight " + we.weight.str() +
                                  " in weight constraint");
    }
  }
}

Rational WeightConstraint::total_weight() const {
  Rational sum;
  for (const auto& we : elements_) sum += we.weight;
  return sum;
}

WeightConstraint element_constraint(const RuleElement& e) {
  return WeightConstraint(Bound(1), {WeightedElement{e, Rational(1)}},
                          Bound::pos_inf());
}

WeightConstraint empty_head_constraint() {
  return WeightConstraint(Bound(1), {}, Bound::pos_inf());
}

// --- Formula ---------------------------------------------------------------

Formula Formula::make(Node n) {
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::bot() {
  static const Formula f = make(Node{Kind::kBot, {}, {}});
  return f;
}

Formula Formula::top() {
  static const Formula f = make(Node{Kind::kTop, {}, {}});
  return f;
}

Formula Formula::lit(Literal l) {
  return make(Node{Kind::kLit, std::move(l), {}});
}

Formula Formula::naf(Formula f) {
  return make(Node{Kind::kNot, {}, {std::move(f)}});
}

const Literal& Formula::literal() const {
  if (kind() != Kind::kLit) throw std::logic_error("not a literal node");
  return node_->literal;
}

const Formula& Formula::child() const {
  if (kind() != Kind::kNot) throw std::logic_error("not a negation node");
  return node_->parts.front();
}

const std::vector<Formula>& Formula::parts() const {
  if (kind() != Kind::kAnd && kind() != Kind::kOr) {
    throw std::logic_error("not a connective node");
  }
  return node_->parts;
}

bool Formula::operator==(const Formula& o) const {
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

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  if (kind() == Kind::kNot || kind() == Kind::kAnd || kind() == Kind::kOr) {
    for (const auto& p : node_->parts) n += p.node_count();
  }
  return n;
}

Formula big_and(std::vector<Formula> fs) {
  if (fs.empty()) return Formula::top();
  if (fs.size() == 1) return fs.front();
  return Formula::make(Formula::Node{Formula::Kind::kAnd, {}, std::move(fs)});
}

Formula big_or(std::vector<Formula> fs) {
  if (fs.empty()) return Formula::bot();
  if (fs.size() == 1) return fs.front();
  return Formula::make(Formula::Node{Formula::Kind::kOr, {}, std::move(fs)});
}

// --- Interpretation --------------------------------------------------------

bool Interpretation::consistent(const std::vector<Literal>& lits) {
  for (const auto& l : lits) {
    for (const auto& m : lits) {
      if (l.atom == m.atom && l.neg != m.neg) return false;
    }
  }
  return true;
}

Interpretation::Interpretation(std::vector<Literal> lits)
    : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i) {
    if (lits_[i].atom == lits_[i + 1].atom) {
      throw std::invalid_argument("inconsistent interpretation: " +
                                  lits_[i].str() + " and " +
                                  lits_[i + 1].str());
    }
  }
}

bool Interpretation::contains(const Literal& l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Interpretation::subset_of(const Interpretation& o) const {
  return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(),
                       lits_.end());
}

bool Interpretation::operator<(const Interpretation& o) const {
  if (size() != o.size()) return size() < o.size();
  return lits_ < o.lits_;
}

std::string Interpretation::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) s += ", ";
    s += lits_[i].str();
  }
  return s + "}";
}

// --- aux-atom naming -------------------------------------------------------

namespace {

// Underscores double so that joining name fragments with single underscores
// stays decodable regardless of user atom names.
std::string escape_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    out += c;
    if (c == '_') out += '_';
  }
  return out;
}

std::string literal_tag(const Literal& l) {
  return (l.neg ? "neg_" : "") + escape_name(l.atom.name);
}

std::string element_tag(const RuleElement& e) {
  return (e.naf ? "not_" : "") + literal_tag(e.lit);
}

std::string number_tag(const Rational& r) {
  std::string s = r.num() < 0 ? "m" + std::to_string(-r.num())
                              : std::to_string(r.num());
  if (r.den() != 1) s += "d" + std::to_string(r.den());
  return s;
}

std::string bound_tag(const Bound& b) {
  if (b.is_neg_inf()) return "ninf";
  if (b.is_pos_inf()) return "inf";
  return number_tag(b.value());
}

}  // namespace

Atom naf_aux_atom(const Literal& l) {
  return Atom{"q_not_" + literal_tag(l), AtomKind::kAuxNegation};
}

Atom weight_aux_atom(WeightRelation rel, const Bound& bound,
                     const std::vector<WeightedElement>& prefix) {
  std::string name = "q_" + bound_tag(bound) + "_" +
                     (rel == WeightRelation::kAtLeast ? "le" : "lt");
  for (const auto& we : prefix) {
    name += "_" + element_tag(we.element) + "_" + number_tag(we.weight);
  }
  return Atom{name, AtomKind::kAuxWeight};
}

// --- signatures ------------------------------------------------------------

namespace {

void add_atom(const Atom& a, std::vector<Atom>& out) {
  for (const auto& b : out) {
    if (b == a) return;
  }
  out.push_back(a);
}

void add_literal(const Literal& l, std::vector<Literal>& out) {
  for (const auto& m : out) {
    if (m == l) return;
  }
  out.push_back(l);
}

void collect_constraint_atoms(const WeightConstraint& c,
                              std::vector<Atom>& out) {
  for (const auto& we : c.elements()) add_atom(we.element.lit.atom, out);
}

}  // namespace

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
      return;
    case Formula::Kind::kLit:
      add_atom(f.literal().atom, out);
      return;
    case Formula::Kind::kNot:
      collect_atoms(f.child(), out);
      return;
    default:
      for (const auto& p : f.parts()) collect_atoms(p, out);
  }
}

std::vector<Atom> signature(const WProgram& p) {
  std::vector<Atom> out;
  for (const auto& r : p.rules) {
    collect_constraint_atoms(r.head, out);
    for (const auto& c : r.body) collect_constraint_atoms(c, out);
  }
  return out;
}

std::vector<Atom> signature(const NProgram& p) {
  std::vector<Atom> out;
  for (const auto& r : p.rules) {
    collect_atoms(r.head, out);
    collect_atoms(r.body, out);
  }
  return out;
}

namespace {

void collect_literals(const Formula& f, std::vector<Literal>& out) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
      return;
    case Formula::Kind::kLit:
      add_literal(f.literal(), out);
      return;
    case Formula::Kind::kNot:
      collect_literals(f.child(), out);
      return;
    default:
      for (const auto& p : f.parts()) collect_literals(p, out);
  }
}

}  // namespace

std::vector<Literal> occurring_literals(const WProgram& p) {
  std::vector<Literal> out;
  for (const auto& r : p.rules) {
    for (const auto& we : r.head.elements()) add_literal(we.element.lit, out);
    for (const auto& c : r.body) {
      for (const auto& we : c.elements()) add_literal(we.element.lit, out);
    }
  }
  return out;
}

std::vector<Literal> occurring_literals(const NProgram& p) {
  std::vector<Literal> out;
  for (const auto& r : p.rules) {
    collect_literals(r.head, out);
    collect_literals(r.body, out);
  }
  return out;
}

bool contains_classical_negation(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
      return false;
    case Formula::Kind::kLit:
      return f.literal().neg;
    case Formula::Kind::kNot:
      return contains_classical_negation(f.child());
    default:
      for (const auto& p : f.parts()) {
        if (contains_classical_negation(p)) return true;
      }
      return false;
  }
}

bool contains_classical_negation(const NProgram& p) {
  for (const auto& r : p.rules) {
    if (contains_classical_negation(r.head) ||
        contains_classical_negation(r.body)) {
      return true;
    }
  }
  return false;
}

}  // namespace wcnest
