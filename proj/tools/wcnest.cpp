// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.
//
// Command-line surface: parsing, answer-set enumeration, the three
// translations, equivalence checking, completion export and the randomized
// verification harness. Identical invocations produce byte-identical
// output; results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wcnest/completion.hpp"
#include "wcnest/here_and_there.hpp"
#include "wcnest/nested_semantics.hpp"
#include "wcnest/parser.hpp"
#include "wcnest/translate.hpp"
#include "wcnest/verify.hpp"
#include "wcnest/weight_semantics.hpp"

namespace {

using namespace wcnest;

enum class Format { kText, kRecords };

struct RunConfig {
  std::string input;
  std::string input2;
  std::string semantics;  // "", "weight", "nested"
  std::string mode = "basic";
  bool simplify = false;
  bool report = false;
  bool strong = false;
  bool weak = false;
  bool verify = false;
  std::size_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  int cases = 200;
  int theorem = 0;
  int prop = 0;
  int lemma = 0;
  std::string dimacs_path;
  Format format = Format::kText;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("WCNEST_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid WCNEST_CAP value '" << env << "'\n";
  }
  return kDefaultEnumerationCap;
}

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// "weight" for .wc, "nested" for .lp, otherwise empty
std::string semantics_from_extension(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot);
  if (ext == ".wc") return "weight";
  if (ext == ".lp") return "nested";
  return "";
}

std::string pick_semantics(const RunConfig& cfg, const std::string& path) {
  if (!cfg.semantics.empty()) return cfg.semantics;
  return semantics_from_extension(path);
}

struct Loaded {
  bool is_weight = false;
  WProgram weight;
  NProgram nested;
};

int load_program(const RunConfig& cfg, const std::string& path, Loaded& out) {
  std::string text;
  if (!read_file(path, text)) return fail("cannot read '" + path + "'");
  std::string sem = pick_semantics(cfg, path);
  if (sem.empty()) {
    return fail("cannot tell the language of '" + path +
                "'; use --semantics weight|nested or the .wc/.lp extensions");
  }
  if (sem == "weight") {
    auto parsed = parse_weight_program(text);
    if (auto* err = std::get_if<ParseError>(&parsed)) {
      return fail(path + ":" + err->str());
    }
    out.is_weight = true;
    out.weight = std::get<WProgram>(parsed);
    return 0;
  }
  auto parsed = parse_nested_program(text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    return fail(path + ":" + err->str());
  }
  out.is_weight = false;
  out.nested = std::get<NProgram>(parsed);
  return 0;
}

std::vector<Interpretation> enumerate_answer_sets(const Loaded& p,
                                                  std::size_t cap) {
  if (p.is_weight) return answer_sets(p.weight, cap);
  if (signature(p.nested).size() > cap && is_nonnested(p.nested)) {
    // exact beyond the brute-force cap for nonnested programs
    return answer_sets_nonnested(p.nested);
  }
  return answer_sets(p.nested, cap);
}

int cmd_answer_sets(const RunConfig& cfg) {
  Loaded p;
  if (int rc = load_program(cfg, cfg.input, p)) return rc;
  std::vector<Interpretation> sets;
  try {
    sets = enumerate_answer_sets(p, cfg.cap);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  for (const auto& z : sets) {
    if (cfg.format == Format::kRecords) {
      std::cout << "answer_set=" << z.str() << "\n";
    } else {
      std::cout << z.str() << "\n";
    }
  }
  if (cfg.format == Format::kRecords) {
    std::cout << "count=" << sets.size() << "\n";
  }
  return sets.empty() ? 1 : 0;
}

int cmd_translate(const RunConfig& cfg) {
  Loaded p;
  if (int rc = load_program(cfg, cfg.input, p)) return rc;
  if (!p.is_weight) return fail("translate expects a weight program");
  TranslationReport report;
  TranslateOptions opts{cfg.simplify};
  try {
    if (cfg.mode == "basic") {
      report = tr_basic(p.weight, opts);
    } else if (cfg.mode == "nd") {
      report = tr_nd(p.weight, opts);
    } else if (cfg.mode == "nn") {
      report = tr_nn(p.weight, opts);
    } else {
      return fail("unknown mode '" + cfg.mode + "' (basic|nd|nn)");
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::cout << print_nested_program(report.output);
  if (cfg.report) {
    bool records = cfg.format == Format::kRecords;
    std::string prefix = records ? "" : "% ";
    std::string q;
    for (const auto& a : report.q_omega) {
      if (!q.empty()) q += " ";
      q += a.name;
    }
    std::cout << prefix << "q_omega=" << q << "\n";
    std::cout << prefix << "weight_atoms=" << report.weight_atom_count << "\n";
    std::cout << prefix << "rules=" << report.rule_count << "\n";
    for (const auto& row : report.table) {
      std::cout << prefix << "constraint=" << print_constraint(row.constraint)
                << " length=" << row.length << " weight=" << row.weight.str()
                << "\n";
    }
  }
  return 0;
}

int cmd_check_equiv(const RunConfig& cfg) {
  Loaded p1, p2;
  if (int rc = load_program(cfg, cfg.input, p1)) return rc;
  if (int rc = load_program(cfg, cfg.input2, p2)) return rc;
  if (p1.is_weight != p2.is_weight) {
    return fail("both programs must be in the same language");
  }
  bool strong = cfg.strong && !cfg.weak;
  bool records = cfg.format == Format::kRecords;
  try {
    if (!strong) {
      auto s1 = enumerate_answer_sets(p1, cfg.cap);
      auto s2 = enumerate_answer_sets(p2, cfg.cap);
      bool eq = s1 == s2;
      std::cout << (records ? (eq ? "verdict=equivalent\n"
                                  : "verdict=not_equivalent\n")
                            : (eq ? "equivalent\n" : "not equivalent\n"));
      return eq ? 0 : 1;
    }
    if (p1.is_weight) {
      TurnerResult res = turner_strong_eq(p1.weight, p2.weight, cfg.cap);
      if (res.equivalent) {
        std::cout << (records ? "verdict=equivalent\n" : "equivalent\n");
        return 0;
      }
      std::cout << (records ? "verdict=not_equivalent\n" : "not equivalent\n");
      if (res.witness) {
        if (records) {
          std::cout << "witness_z=" << res.witness->first.str() << "\n"
                    << "witness_z_prime=" << res.witness->second.str() << "\n";
        } else {
          std::cout << "counterexample: Z=" << res.witness->first.str()
                    << " Z'=" << res.witness->second.str() << "\n";
        }
      }
      return 1;
    }
    StrongEqResult res = strong_eq_nested(p1.nested, p2.nested, cfg.cap);
    if (res.equivalent) {
      std::cout << (records ? "verdict=equivalent\n" : "equivalent\n");
      return 0;
    }
    std::cout << (records ? "verdict=not_equivalent\n" : "not equivalent\n");
    if (res.witness) {
      if (records) {
        std::cout << "witness=" << res.witness->str() << "\n";
      } else {
        std::cout << "counterexample: " << res.witness->str() << "\n";
      }
    }
    return 1;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_completion(const RunConfig& cfg) {
  Loaded p;
  if (int rc = load_program(cfg, cfg.input, p)) return rc;
  if (!p.is_weight) return fail("completion expects a weight program");
  try {
    TranslationReport nn = tr_nn(p.weight);
    NProgram program = nn.output;
    if (contains_classical_negation(program)) {
      program = eliminate_classical_negation(program).program;
    }
    if (!is_tight(program)) {
      std::cerr << "error: the nonnested translation is not tight; its "
                   "completion may not match the answer sets\n";
      return 3;
    }
    CnfDocument doc = to_dimacs(completion(program));
    std::string text = dimacs_string(doc);
    if (cfg.dimacs_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.dimacs_path);
      if (!out) return fail("cannot write '" + cfg.dimacs_path + "'");
      out << text;
    }
    if (cfg.verify) {
      CompletionReport report = verify_completion(p.weight, cfg.cap);
      bool records = cfg.format == Format::kRecords;
      if (records) {
        std::cout << "completion_models=" << report.projected_models.size()
                  << "\nanswer_sets=" << report.answer_sets.size()
                  << "\nverdict=" << (report.ok ? "ok" : "mismatch") << "\n";
      } else {
        std::cout << "completion models: " << report.projected_models.size()
                  << ", answer sets: " << report.answer_sets.size() << " -> "
                  << (report.ok ? "match" : "MISMATCH") << "\n";
      }
      if (!report.ok) return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<CheckResult> results;
  try {
    if (cfg.theorem == 1) {
      results.push_back(check_theorem1(cfg.seed, cfg.cases));
    } else if (cfg.theorem == 2) {
      results.push_back(check_theorem2(cfg.seed, cfg.cases));
    } else if (cfg.prop >= 1 && cfg.prop <= 4) {
      using Check = CheckResult (*)(std::uint64_t, int);
      static const Check props[] = {check_prop1, check_prop2, check_prop3,
                                    check_prop4};
      results.push_back(props[cfg.prop - 1](cfg.seed, cfg.cases));
    } else if (cfg.lemma == 1) {
      results.push_back(check_lemma1(cfg.seed, cfg.cases));
    } else if (cfg.lemma == 2) {
      results.push_back(check_lemma2(cfg.seed, cfg.cases));
    } else if (cfg.lemma == 3) {
      results.push_back(check_lemma3(cfg.seed, cfg.cases));
    } else if (cfg.lemma == 8) {
      results.push_back(check_lemma8(cfg.seed, cfg.cases));
    } else if (cfg.theorem != 0 || cfg.lemma != 0 || cfg.prop != 0) {
      return fail("unknown selector; use --theorem 1|2, --prop 1..4, or "
                  "--lemma 1|2|3|8");
    } else {
      results = run_all_checks(cfg.seed, cfg.cases);
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  bool all_pass = true;
  for (const auto& r : results) {
    if (cfg.format == Format::kRecords) {
      std::string key = r.name.substr(0, r.name.find(" ("));
      for (auto& c : key) {
        if (c == ' ') c = '_';
      }
      std::cout << "check=" << key << " cases=" << r.cases
                << " failures=" << r.failures
                << " status=" << (r.pass() ? "pass" : "fail") << "\n";
    } else {
      std::cout << r.name << ": " << r.cases << " cases, " << r.failures
                << " failures [" << (r.pass() ? "pass" : "FAIL") << "]\n";
    }
    if (!r.pass()) {
      all_pass = false;
      std::cout << "first failing input:\n" << r.first_failure << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight-constraint and nested-expression programs: answer "
               "sets, translations, equivalence, completion"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.cap = default_cap();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap,
                    "enumeration cap on signature atoms (env WCNEST_CAP)");
    sub->add_option("--format", [&cfg](const std::vector<std::string>& v) {
      if (v.front() == "records") {
        cfg.format = Format::kRecords;
        return true;
      }
      if (v.front() == "text") {
        cfg.format = Format::kText;
        return true;
      }
      return false;
    }, "output format: text|records");
  };

  CLI::App* ans = app.add_subcommand("answer-sets", "enumerate answer sets");
  ans->add_option("file", cfg.input, "program file")->required();
  ans->add_option("--semantics", cfg.semantics, "weight|nested")
      ->check(CLI::IsMember({"weight", "nested"}));
  add_common(ans);

  CLI::App* tr = app.add_subcommand("translate", "translate a weight program");
  tr->add_option("file", cfg.input, "weight program file")->required();
  tr->add_option("--mode", cfg.mode, "basic|nd|nn")
      ->check(CLI::IsMember({"basic", "nd", "nn"}));
  tr->add_flag("--simplify", cfg.simplify, "apply the simplification pass");
  tr->add_flag("--report", cfg.report, "append aux atoms and size metrics");
  tr->add_option("--semantics", cfg.semantics, "weight|nested")
      ->check(CLI::IsMember({"weight", "nested"}));
  add_common(tr);

  CLI::App* eq = app.add_subcommand("check-equiv", "compare two programs");
  eq->add_option("file1", cfg.input, "first program")->required();
  eq->add_option("file2", cfg.input2, "second program")->required();
  eq->add_flag("--strong", cfg.strong, "strong equivalence");
  eq->add_flag("--weak", cfg.weak, "weak equivalence (same answer sets)");
  eq->add_option("--semantics", cfg.semantics, "weight|nested")
      ->check(CLI::IsMember({"weight", "nested"}));
  add_common(eq);

  CLI::App* comp = app.add_subcommand(
      "completion", "export the completion of the nonnested translation");
  comp->add_option("file", cfg.input, "weight program file")->required();
  comp->add_option("--dimacs", cfg.dimacs_path, "write DIMACS here");
  comp->add_flag("--verify", cfg.verify,
                 "check completion models against the answer sets");
  comp->add_option("--semantics", cfg.semantics, "weight|nested")
      ->check(CLI::IsMember({"weight", "nested"}));
  add_common(comp);

  CLI::App* ver = app.add_subcommand("verify", "randomized cross-checks");
  ver->add_option("--theorem", cfg.theorem, "1|2");
  ver->add_option("--prop", cfg.prop, "1|2|3|4");
  ver->add_option("--lemma", cfg.lemma, "1|2|3|8");
  ver->add_option("--cases", cfg.cases, "number of random cases");
  ver->add_option("--seed", cfg.seed, "random seed");
  add_common(ver);

  CLI11_PARSE(app, argc, argv);

  if (ans->parsed()) return cmd_answer_sets(cfg);
  if (tr->parsed()) return cmd_translate(cfg);
  if (eq->parsed()) return cmd_check_equiv(cfg);
  if (comp->parsed()) return cmd_completion(cfg);
  if (ver->parsed()) return cmd_verify(cfg);
  return 2;
}
