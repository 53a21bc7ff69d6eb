// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/completion.hpp"

#include <algorithm>
#include <map>

#include "wcnest/weight_semantics.hpp"

namespace wcnest {

namespace {

// A nonnested body as unit conjuncts. Returns false when the formula is not
// a conjunction of possibly-NAF literals.
bool flatten_body(const Formula& f, std::vector<RuleElement>& out) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kLit:
      out.push_back(RuleElement{f.literal(), false});
      return true;
    case Formula::Kind::kNot:
      if (f.child().kind() != Formula::Kind::kLit) return false;
      out.push_back(RuleElement{f.child().literal(), true});
      return true;
    case Formula::Kind::kAnd:
      for (const auto& p : f.parts()) {
        if (!flatten_body(p, out)) return false;
      }
      return true;
    default:
      return false;
  }
}

struct NonnestedRule {
  bool bot_head = false;
  Literal head;                    // valid when !bot_head
  std::vector<RuleElement> body;   // unit conjuncts
};

bool decompose(const NProgram& p, std::vector<NonnestedRule>& out) {
  for (const auto& r : p.rules) {
    NonnestedRule nr;
    if (r.head.kind() == Formula::Kind::kBot) {
      nr.bot_head = true;
    } else if (r.head.kind() == Formula::Kind::kLit) {
      nr.head = r.head.literal();
    } else {
      return false;
    }
    if (!flatten_body(r.body, nr.body)) return false;
    out.push_back(std::move(nr));
  }
  return true;
}

}  // namespace

bool is_nonnested(const NProgram& p) {
  std::vector<NonnestedRule> rules;
  return decompose(p, rules);
}

std::vector<PropFormula> completion(const NProgram& p) {
  if (contains_classical_negation(p)) {
    throw std::invalid_argument(
        "completion requires a program free of classical negation");
  }
  std::vector<NonnestedRule> rules;
  if (!decompose(p, rules)) {
    throw std::invalid_argument("completion requires a nonnested program");
  }
  std::vector<PropFormula> out;
  std::vector<Atom> sig = signature(p);
  for (const auto& a : sig) {
    std::vector<PropFormula> bodies;
    for (const auto& r : rules) {
      if (r.bot_head || !(r.head.atom == a)) continue;
      std::vector<PropFormula> units;
      for (const auto& e : r.body) {
        PropFormula u = PropFormula::lit(e.lit);
        units.push_back(e.naf ? PropFormula::neg(std::move(u)) : std::move(u));
      }
      bodies.push_back(PropFormula::conj(std::move(units)));
    }
    out.push_back(PropFormula::iff(PropFormula::atom(a),
                                   PropFormula::disj(std::move(bodies))));
  }
  for (const auto& r : rules) {
    if (!r.bot_head) continue;
    std::vector<PropFormula> units;
    for (const auto& e : r.body) {
      PropFormula u = PropFormula::lit(e.lit);
      units.push_back(e.naf ? PropFormula::neg(std::move(u)) : std::move(u));
    }
    out.push_back(PropFormula::neg(PropFormula::conj(std::move(units))));
  }
  return out;
}

bool is_tight(const NProgram& p) {
  std::vector<NonnestedRule> rules;
  if (!decompose(p, rules)) {
    throw std::invalid_argument("tightness is defined for nonnested programs");
  }
  // positive dependency graph over literals
  std::vector<Literal> nodes;
  auto index_of = [&](const Literal& l) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == l) return i;
    }
    nodes.push_back(l);
    return nodes.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  for (const auto& r : rules) {
    if (r.bot_head) continue;
    std::size_t h = index_of(r.head);
    for (const auto& e : r.body) {
      if (e.naf) continue;
      edge_list.emplace_back(h, index_of(e.lit));
    }
  }
  std::vector<std::vector<std::size_t>> edges(nodes.size());
  for (const auto& [h, b] : edge_list) edges[h].push_back(b);
  // DFS cycle check
  std::vector<int> state(nodes.size(), 0);  // 0 new, 1 active, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (state[s] != 0) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < edges[v].size()) {
        std::size_t w = edges[v][next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// --- supported-model enumeration ---------------------------------------------
//
// In any answer set of a nonnested program, a literal holds iff some rule
// with that head literal has a true body (immediate from the least-fixpoint
// characterization), and for programs without classical negation this
// supportedness is exactly the completion. Literals on dependency cycles are
// enumerated; every other literal's value follows from its support
// equivalence in topological order.

namespace {

struct SupportGraph {
  std::vector<Literal> nodes;
  std::map<Literal, std::size_t> index;
  std::vector<std::vector<std::size_t>> rules_for;  // node -> rule indices
  std::vector<std::vector<std::size_t>> deps;       // node -> body nodes
  std::vector<NonnestedRule> rules;
  std::vector<std::size_t> constraint_rules;  // indices of bot-headed rules

  std::size_t node(const Literal& l) {
    auto it = index.find(l);
    if (it != index.end()) return it->second;
    std::size_t id = nodes.size();
    nodes.push_back(l);
    index.emplace(l, id);
    rules_for.emplace_back();
    deps.emplace_back();
    return id;
  }
};

SupportGraph build_support_graph(std::vector<NonnestedRule> rules) {
  SupportGraph g;
  g.rules = std::move(rules);
  for (std::size_t ri = 0; ri < g.rules.size(); ++ri) {
    const auto& r = g.rules[ri];
    if (r.bot_head) {
      g.constraint_rules.push_back(ri);
      for (const auto& e : r.body) g.node(e.lit);
      continue;
    }
    std::size_t h = g.node(r.head);
    g.rules_for[h].push_back(ri);
    for (const auto& e : r.body) {
      std::size_t b = g.node(e.lit);
      g.deps[h].push_back(b);
    }
  }
  return g;
}

// Nodes of nontrivial strongly connected components among the still-active
// nodes (removed ones are treated as absent).
std::vector<std::size_t> nontrivial_scc_nodes(const SupportGraph& g,
                                              const std::vector<bool>& removed) {
  std::size_t n = g.nodes.size();
  std::vector<int> idx(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack, result;
  int counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (idx[root] != -1 || removed[root]) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < g.deps[f.v].size()) {
        std::size_t w = g.deps[f.v][f.child++];
        if (removed[w]) continue;
        if (idx[w] == -1) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        if (low[f.v] == idx[f.v]) {
          std::vector<std::size_t> comp;
          while (true) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == f.v) break;
          }
          bool self_loop = false;
          for (std::size_t w : comp) {
            for (std::size_t d : g.deps[w]) {
              if (d == w && !removed[w]) self_loop = true;
            }
          }
          if (comp.size() > 1 || self_loop) {
            for (std::size_t w : comp) result.push_back(w);
          }
        }
        std::size_t v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return result;
}

// Small feedback vertex set: repeatedly drop the busiest node of a
// nontrivial component until the graph is acyclic. Enumerating assignments
// over this set makes every remaining support equation propagate.
std::vector<bool> feedback_set(const SupportGraph& g) {
  std::vector<bool> removed(g.nodes.size(), false);
  while (true) {
    std::vector<std::size_t> cyclic = nontrivial_scc_nodes(g, removed);
    if (cyclic.empty()) break;
    std::sort(cyclic.begin(), cyclic.end());
    std::size_t best = cyclic.front();
    std::size_t best_degree = 0;
    for (std::size_t v : cyclic) {
      std::size_t degree = g.deps[v].size();
      for (std::size_t w : cyclic) {
        for (std::size_t d : g.deps[w]) {
          if (d == v) ++degree;
        }
      }
      if (degree > best_degree) {
        best_degree = degree;
        best = v;
      }
    }
    removed[best] = true;
  }
  return removed;
}

// Topological order of the acyclic remainder (cyclic nodes act as sources).
std::vector<std::size_t> evaluation_order(const SupportGraph& g,
                                          const std::vector<bool>& cyclic) {
  std::size_t n = g.nodes.size();
  std::vector<int> state(n, 0);
  std::vector<std::size_t> order;
  struct Frame {
    std::size_t v;
    std::size_t child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0 || cyclic[root]) continue;
    std::vector<Frame> call{{root, 0}};
    state[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < g.deps[f.v].size()) {
        std::size_t w = g.deps[f.v][f.child++];
        if (state[w] == 0 && !cyclic[w]) {
          state[w] = 1;
          call.push_back({w, 0});
        }
      } else {
        order.push_back(f.v);
        state[f.v] = 2;
        call.pop_back();
      }
    }
  }
  return order;  // dependencies first
}

bool body_true(const SupportGraph& g, const NonnestedRule& r,
               const std::vector<bool>& value) {
  for (const auto& e : r.body) {
    bool v = value[g.index.at(e.lit)];
    if (e.naf ? v : !v) return false;
  }
  return true;
}

bool supported(const SupportGraph& g, std::size_t node,
               const std::vector<bool>& value) {
  for (std::size_t ri : g.rules_for[node]) {
    if (body_true(g, g.rules[ri], value)) return true;
  }
  return false;
}

// Exact stability check, from the least-fixpoint definition: the closure of
// the literal-headed rules of the reduct must equal Z, and every bot-headed
// rule's body must be false under Z.
bool stable(const SupportGraph& g, const std::vector<bool>& value) {
  std::size_t n = g.nodes.size();
  std::vector<bool> derived(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (derived[v]) continue;
      for (std::size_t ri : g.rules_for[v]) {
        const auto& r = g.rules[ri];
        bool fires = true;
        for (const auto& e : r.body) {
          std::size_t b = g.index.at(e.lit);
          if (e.naf ? value[b] : !derived[b]) {
            fires = false;
            break;
          }
        }
        if (fires) {
          derived[v] = true;
          changed = true;
          break;
        }
      }
    }
  }
  if (derived != value) return false;
  for (std::size_t ri : g.constraint_rules) {
    if (body_true(g, g.rules[ri], value)) return false;
  }
  return true;
}

enum class CandidateFilter { kSupportedOnly, kStable };

std::vector<Interpretation> enumerate_candidates(const NProgram& p,
                                                 CandidateFilter filter) {
  std::vector<NonnestedRule> rules;
  if (!decompose(p, rules)) {
    throw std::invalid_argument("nonnested program required");
  }
  SupportGraph g = build_support_graph(std::move(rules));
  std::vector<bool> in_feedback = feedback_set(g);
  std::vector<std::size_t> order = evaluation_order(g, in_feedback);
  std::vector<std::size_t> feedback;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (in_feedback[v]) feedback.push_back(v);
  }
  if (feedback.size() > 24) throw CapExceeded(feedback.size(), 24);

  std::vector<Interpretation> out;
  std::vector<bool> value(g.nodes.size(), false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << feedback.size());
       ++mask) {
    for (std::size_t i = 0; i < feedback.size(); ++i) {
      value[feedback[i]] = (mask >> i) & 1;
    }
    for (std::size_t v : order) value[v] = supported(g, v, value);
    bool ok = true;
    for (std::size_t v : feedback) {
      if (value[v] != supported(g, v, value)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t ri : g.constraint_rules) {
      if (body_true(g, g.rules[ri], value)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Literal> lits;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (value[v]) lits.push_back(g.nodes[v]);
    }
    if (!Interpretation::consistent(lits)) continue;
    if (filter == CandidateFilter::kStable && !stable(g, value)) continue;
    out.push_back(Interpretation(std::move(lits)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Interpretation> completion_models(const NProgram& p) {
  if (contains_classical_negation(p)) {
    throw std::invalid_argument(
        "completion models require a program free of classical negation");
  }
  return enumerate_candidates(p, CandidateFilter::kSupportedOnly);
}

std::vector<Interpretation> answer_sets_nonnested(const NProgram& p) {
  return enumerate_candidates(p, CandidateFilter::kStable);
}

// --- CNF export ---------------------------------------------------------------

namespace {

// Constant folding so the Tseitin encoding never sees top/bot below an
// operator. A formula may still fold to plain top or bot.
PropFormula fold(const PropFormula& f) {
  using K = PropFormula::Kind;
  switch (f.kind()) {
    case K::kBot:
    case K::kTop:
    case K::kLit:
      return f;
    case K::kNeg: {
      PropFormula c = fold(f.parts().front());
      if (c.kind() == K::kTop) return PropFormula::bot();
      if (c.kind() == K::kBot) return PropFormula::top();
      return PropFormula::neg(std::move(c));
    }
    case K::kAnd:
    case K::kOr: {
      bool is_and = f.kind() == K::kAnd;
      std::vector<PropFormula> parts;
      for (const auto& p : f.parts()) {
        PropFormula s = fold(p);
        if (s.kind() == (is_and ? K::kBot : K::kTop)) return s;
        if (s.kind() == (is_and ? K::kTop : K::kBot)) continue;
        parts.push_back(std::move(s));
      }
      return is_and ? PropFormula::conj(std::move(parts))
                    : PropFormula::disj(std::move(parts));
    }
    case K::kImplies: {
      PropFormula a = fold(f.parts()[0]);
      PropFormula b = fold(f.parts()[1]);
      if (a.kind() == K::kBot || b.kind() == K::kTop) return PropFormula::top();
      if (a.kind() == K::kTop) return b;
      if (b.kind() == K::kBot) return PropFormula::neg(std::move(a));
      return PropFormula::implies(std::move(a), std::move(b));
    }
    case K::kIff: {
      PropFormula a = fold(f.parts()[0]);
      PropFormula b = fold(f.parts()[1]);
      if (a.kind() == K::kTop) return b;
      if (b.kind() == K::kTop) return a;
      if (a.kind() == K::kBot) return fold(PropFormula::neg(std::move(b)));
      if (b.kind() == K::kBot) return fold(PropFormula::neg(std::move(a)));
      return PropFormula::iff(std::move(a), std::move(b));
    }
  }
  return f;  // unreachable
}

class Tseitin {
 public:
  explicit Tseitin(CnfDocument& doc) : doc_(doc) {}

  int var_for_atom(const Atom& a) {
    auto it = atom_vars_.find(a);
    if (it != atom_vars_.end()) return it->second;
    int v = ++doc_.num_vars;
    atom_vars_.emplace(a, v);
    doc_.var_names.emplace_back(v, a.name);
    return v;
  }

  int fresh() {
    int v = ++doc_.num_vars;
    doc_.var_names.emplace_back(v, "_t" + std::to_string(v));
    return v;
  }

  // Returns a signed literal whose truth equals the formula's.
  int encode(const PropFormula& f) {
    using K = PropFormula::Kind;
    switch (f.kind()) {
      case K::kLit:
        return var_for_atom(f.literal().atom);
      case K::kNeg:
        return -encode(f.parts().front());
      case K::kAnd:
      case K::kOr: {
        bool is_and = f.kind() == K::kAnd;
        std::vector<int> lits;
        lits.reserve(f.parts().size());
        for (const auto& p : f.parts()) lits.push_back(encode(p));
        int v = fresh();
        std::vector<int> big{is_and ? v : -v};
        for (int l : lits) {
          doc_.clauses.push_back(is_and ? std::vector<int>{-v, l}
                                        : std::vector<int>{v, -l});
          big.push_back(is_and ? -l : l);
        }
        doc_.clauses.push_back(std::move(big));
        return v;
      }
      case K::kImplies: {
        int a = encode(f.parts()[0]);
        int b = encode(f.parts()[1]);
        int v = fresh();
        doc_.clauses.push_back({-v, -a, b});
        doc_.clauses.push_back({v, a});
        doc_.clauses.push_back({v, -b});
        return v;
      }
      case K::kIff: {
        int a = encode(f.parts()[0]);
        int b = encode(f.parts()[1]);
        int v = fresh();
        doc_.clauses.push_back({-v, -a, b});
        doc_.clauses.push_back({-v, a, -b});
        doc_.clauses.push_back({v, a, b});
        doc_.clauses.push_back({v, -a, -b});
        return v;
      }
      default:
        throw std::logic_error("constants must be folded before encoding");
    }
  }

 private:
  CnfDocument& doc_;
  std::map<Atom, int> atom_vars_;
};

}  // namespace

CnfDocument to_dimacs(const std::vector<PropFormula>& formulas) {
  CnfDocument doc;
  Tseitin enc(doc);
  // assign atom variables in first-occurrence order across all formulas
  std::vector<Atom> atoms;
  for (const auto& f : formulas) collect_atoms(f, atoms);
  for (const auto& a : atoms) enc.var_for_atom(a);
  for (const auto& f : formulas) {
    PropFormula folded = fold(f);
    if (folded.kind() == PropFormula::Kind::kTop) continue;
    if (folded.kind() == PropFormula::Kind::kBot) {
      doc.clauses.push_back({});
      continue;
    }
    doc.clauses.push_back({enc.encode(folded)});
  }
  return doc;
}

std::string dimacs_string(const CnfDocument& doc) {
  std::string s;
  for (const auto& [v, name] : doc.var_names) {
    s += "c map " + std::to_string(v) + " " + name + "\n";
  }
  s += "p cnf " + std::to_string(doc.num_vars) + " " +
       std::to_string(doc.clauses.size()) + "\n";
  for (const auto& clause : doc.clauses) {
    for (int l : clause) s += std::to_string(l) + " ";
    s += "0\n";
  }
  return s;
}

std::vector<std::set<Atom>> classical_models(
    const std::vector<PropFormula>& formulas, const std::vector<Atom>& sig,
    std::size_t cap) {
  if (sig.size() > cap) throw CapExceeded(sig.size(), cap);
  std::vector<Atom> atoms = sig;
  std::sort(atoms.begin(), atoms.end());
  std::vector<std::set<Atom>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << atoms.size());
       ++mask) {
    std::set<Atom> model;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask & (std::uint64_t(1) << i)) model.insert(atoms[i]);
    }
    bool ok = true;
    for (const auto& f : formulas) {
      if (!classically_satisfies(model, f)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(model));
  }
  return out;
}

// --- the end-to-end verifier ----------------------------------------------------

CompletionReport verify_completion(const WProgram& p, std::size_t cap) {
  CompletionReport report;
  TranslationReport nn = tr_nn(p);

  NProgram renamed = nn.output;
  std::map<Atom, Atom> primes;
  if (contains_classical_negation(nn.output)) {
    CnElimination elim = eliminate_classical_negation(nn.output);
    renamed = std::move(elim.program);
    primes = std::move(elim.renamed);
  }

  report.tight = is_tight(renamed);
  if (!report.tight) {
    report.detail =
        "the nonnested translation has a positive dependency cycle; "
        "completion models are not guaranteed to match its answer sets";
    return report;
  }

  std::map<Atom, Atom> prime_to_orig;
  for (const auto& [orig, prime] : primes) prime_to_orig.emplace(prime, orig);

  for (const auto& model : completion_models(renamed)) {
    bool has_pair = false;
    for (const auto& [orig, prime] : primes) {
      if (model.contains(Literal{orig, false}) &&
          model.contains(Literal{prime, false})) {
        has_pair = true;
        break;
      }
    }
    if (has_pair) continue;  // such models correspond to no literal set
    std::vector<Literal> lits;
    for (const auto& l : model.literals()) {
      if (nn.q_omega.count(l.atom)) continue;  // project Q_Omega away
      auto it = prime_to_orig.find(l.atom);
      if (it != prime_to_orig.end()) {
        lits.push_back(Literal{it->second, true});
      } else {
        lits.push_back(l);
      }
    }
    report.projected_models.push_back(Interpretation(std::move(lits)));
  }
  std::sort(report.projected_models.begin(), report.projected_models.end());

  report.answer_sets = answer_sets(p, cap);
  report.ok = report.projected_models == report.answer_sets;
  if (!report.ok) {
    report.detail = "projected completion models differ from the answer sets";
  }
  return report;
}

}  // namespace wcnest
