// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/parser.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

namespace wcnest {

std::string ParseError::str() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         (kind == Kind::kSyntax ? "syntax error: " : "validation error: ") +
         message;
}

namespace {

enum class Tok {
  kIdent,   // atom or keyword
  kNumber,  // unsigned; sign handled by the parser
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kSemi,
  kEq,
  kDot,
  kMinus,
  kIf,   // :-
  kLeq,  // <=
  kEnd,
};

struct Token {
  Tok type;
  std::string text;
  Rational number;
  int line;
  int col;
};

struct LexFail {
  ParseError error;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::kEnd, "", {}, line, col};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
    if (c >= 'a' && c <= 'z') return lex_ident();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      fail(line, col, "atom names must start with a lowercase letter");
    }
    switch (c) {
      case '{': return punct(Tok::kLBrace, "{");
      case '}': return punct(Tok::kRBrace, "}");
      case '(': return punct(Tok::kLParen, "(");
      case ')': return punct(Tok::kRParen, ")");
      case ',': return punct(Tok::kComma, ",");
      case ';': return punct(Tok::kSemi, ";");
      case '=': return punct(Tok::kEq, "=");
      case '.': return punct(Tok::kDot, ".");
      case '-': return punct(Tok::kMinus, "-");
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance();
          advance();
          return {Tok::kIf, ":-", {}, line, col};
        }
        fail(line, col, "expected ':-'");
        break;
      case '<':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          advance();
          advance();
          return {Tok::kLeq, "<=", {}, line, col};
        }
        fail(line, col, "'<' is not allowed; bounds use '<='");
        break;
      default:
        break;
    }
    fail(line, col, std::string("unexpected character '") + c + "'");
    return {};  // unreachable
  }

  [[noreturn]] static void fail(int line, int col, std::string msg,
                                ParseError::Kind kind = ParseError::Kind::kSyntax) {
    throw LexFail{ParseError{line, col, std::move(msg), kind}};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token punct(Tok t, const char* s) {
    int line = line_, col = col_;
    advance();
    return {t, s, {}, line, col};
  }

  Token lex_ident() {
    int line = line_, col = col_;
    std::string s;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        s += c;
        advance();
      } else {
        break;
      }
    }
    return {Tok::kIdent, s, {}, line, col};
  }

  std::int64_t lex_digits(int line, int col) {
    std::string s;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    if (s.size() > 18) fail(line, col, "number literal too large");
    return std::stoll(s);
  }

  Token lex_number() {
    int line = line_, col = col_;
    std::int64_t whole = lex_digits(line, col);
    Rational value(whole);
    if (pos_ < text_.size() && text_[pos_] == '.' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      std::size_t start = pos_;
      std::int64_t frac = lex_digits(line, col);
      std::int64_t scale = 1;
      for (std::size_t i = start; i < pos_; ++i) scale *= 10;
      value = Rational(whole) + Rational(frac, scale);
    } else if (pos_ < text_.size() && text_[pos_] == '/' &&
               pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      std::int64_t den = lex_digits(line, col);
      if (den == 0) fail(line, col, "fraction with zero denominator");
      value = Rational(whole, den);
    }
    return {Tok::kNumber, "", value, line, col};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& s) {
  return s == "not" || s == "bot" || s == "top";
}

class ParserBase {
 public:
  explicit ParserBase(const std::string& text) : lexer_(text) { shift(); }

 protected:
  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg,
                         ParseError::Kind kind = ParseError::Kind::kSyntax) {
    Lexer::fail(tok_.line, tok_.col, msg, kind);
  }

  void expect(Tok t, const char* what) {
    if (tok_.type != t) fail(std::string("expected ") + what);
    shift();
  }

  bool at_ident(const char* kw) const {
    return tok_.type == Tok::kIdent && tok_.text == kw;
  }

  Atom parse_atom_name() {
    if (tok_.type != Tok::kIdent) fail("expected an atom");
    if (is_keyword(tok_.text)) {
      fail("'" + tok_.text + "' is a reserved word");
    }
    Atom a{tok_.text, AtomKind::kUser};
    shift();
    return a;
  }

  Literal parse_literal() {
    bool neg = false;
    if (tok_.type == Tok::kMinus) {
      neg = true;
      shift();
    }
    return Literal{parse_atom_name(), neg};
  }

  // Signed number; weights and bounds share this.
  Rational parse_number() {
    bool neg = false;
    if (tok_.type == Tok::kMinus) {
      neg = true;
      shift();
    }
    if (tok_.type != Tok::kNumber) fail("expected a number");
    Rational v = tok_.number;
    shift();
    return neg ? -v : v;
  }

  Token tok_;

 private:
  Lexer lexer_;
};

class WeightParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  WProgram parse_program() {
    WProgram p;
    while (tok_.type != Tok::kEnd) p.rules.push_back(parse_rule());
    return p;
  }

 private:
  void check_user_atom(const Atom& a, int line, int col) {
    if (a.name.rfind(kReservedAtomPrefix, 0) == 0) {
      Lexer::fail(line, col,
                  "atom '" + a.name + "' uses the reserved prefix 'q_'",
                  ParseError::Kind::kValidation);
    }
  }

  RuleElement parse_element() {
    bool naf = false;
    if (at_ident("not")) {
      naf = true;
      shift();
    }
    int line = tok_.line, col = tok_.col;
    Literal l = parse_literal();
    check_user_atom(l.atom, line, col);
    return RuleElement{l, naf};
  }

  WeightedElement parse_pair() {
    RuleElement e = parse_element();
    Rational w(1);
    if (tok_.type == Tok::kEq) {
      shift();
      int line = tok_.line, col = tok_.col;
      w = parse_number();
      if (w.is_negative()) {
        Lexer::fail(line, col,
                    "negative weight " + w.str() +
                        " (weights must be nonnegative)",
                    ParseError::Kind::kValidation);
      }
    }
    return WeightedElement{e, w};
  }

  bool at_constraint_start() const {
    return tok_.type == Tok::kNumber || tok_.type == Tok::kLBrace ||
           tok_.type == Tok::kMinus || at_ident("not") ||
           (tok_.type == Tok::kIdent && !is_keyword(tok_.text));
  }

  WeightConstraint parse_constraint() {
    Bound lower = Bound::neg_inf();
    bool saw_lower = false;
    if (tok_.type == Tok::kNumber) {
      lower = Bound(parse_number());
      saw_lower = true;
      expect(Tok::kLeq, "'<='");
    } else if (tok_.type == Tok::kMinus) {
      // "-" starts either a negative lower bound or a negated literal.
      shift();
      if (tok_.type == Tok::kNumber) {
        lower = Bound(-parse_number());
        saw_lower = true;
        expect(Tok::kLeq, "'<='");
      } else {
        int line = tok_.line, col = tok_.col;
        Atom a = parse_atom_name();
        check_user_atom(a, line, col);
        return element_constraint(RuleElement{Literal{a, true}, false});
      }
    }
    if (tok_.type != Tok::kLBrace) {
      if (saw_lower) fail("expected '{' after a lower bound");
      return element_constraint(parse_element());
    }
    shift();
    std::vector<WeightedElement> elements;
    if (tok_.type != Tok::kRBrace) {
      elements.push_back(parse_pair());
      while (tok_.type == Tok::kComma) {
        shift();
        elements.push_back(parse_pair());
      }
    }
    expect(Tok::kRBrace, "'}'");
    Bound upper = Bound::pos_inf();
    if (tok_.type == Tok::kLeq) {
      shift();
      upper = Bound(parse_number());
    }
    return WeightConstraint(lower, std::move(elements), upper);
  }

  WRule parse_rule() {
    WeightConstraint head = empty_head_constraint();
    if (at_constraint_start()) head = parse_constraint();
    std::vector<WeightConstraint> body;
    if (tok_.type == Tok::kIf) {
      shift();
      if (at_constraint_start()) {
        body.push_back(parse_constraint());
        while (tok_.type == Tok::kComma) {
          shift();
          body.push_back(parse_constraint());
        }
      }
    }
    expect(Tok::kDot, "'.'");
    return WRule{std::move(head), std::move(body)};
  }
};

class NestedParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  NProgram parse_program() {
    NProgram p;
    while (tok_.type != Tok::kEnd) p.rules.push_back(parse_rule());
    return p;
  }

 private:
  Formula parse_primary() {
    if (at_ident("bot")) {
      shift();
      return Formula::bot();
    }
    if (at_ident("top")) {
      shift();
      return Formula::top();
    }
    if (at_ident("not")) {
      shift();
      return Formula::naf(parse_primary());
    }
    if (tok_.type == Tok::kLParen) {
      shift();
      Formula f = parse_or();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (tok_.type == Tok::kMinus || tok_.type == Tok::kIdent) {
      return Formula::lit(parse_literal());
    }
    fail("expected a formula");
  }

  Formula parse_and() {
    std::vector<Formula> parts{parse_primary()};
    while (tok_.type == Tok::kComma) {
      shift();
      parts.push_back(parse_primary());
    }
    return big_and(std::move(parts));
  }

  Formula parse_or() {
    std::vector<Formula> parts{parse_and()};
    while (tok_.type == Tok::kSemi) {
      shift();
      parts.push_back(parse_and());
    }
    return big_or(std::move(parts));
  }

  NRule parse_rule() {
    Formula head = parse_or();
    Formula body = Formula::top();
    if (tok_.type == Tok::kIf) {
      shift();
      body = parse_or();
    }
    expect(Tok::kDot, "'.'");
    return NRule{std::move(head), std::move(body)};
  }
};

}  // namespace

std::variant<WProgram, ParseError> parse_weight_program(
    const std::string& text) {
  try {
    WeightParser p(text);
    return p.parse_program();
  } catch (const LexFail& f) {
    return f.error;
  } catch (const std::exception& e) {
    return ParseError{1, 1, e.what(), ParseError::Kind::kValidation};
  }
}

std::variant<NProgram, ParseError> parse_nested_program(
    const std::string& text) {
  try {
    NestedParser p(text);
    return p.parse_program();
  } catch (const LexFail& f) {
    return f.error;
  } catch (const std::exception& e) {
    return ParseError{1, 1, e.what(), ParseError::Kind::kValidation};
  }
}

// --- printers ---------------------------------------------------------------

namespace {

bool is_element_sugar(const WeightConstraint& c) {
  return c.lower() == Bound(1) && c.upper() == Bound::pos_inf() &&
         c.elements().size() == 1 &&
         c.elements().front().weight == Rational(1);
}

bool is_headless_head(const WeightConstraint& c) {
  return c.lower() == Bound(1) && c.upper() == Bound::pos_inf() &&
         c.elements().empty();
}

}  // namespace

std::string print_constraint(const WeightConstraint& c) {
  if (is_element_sugar(c)) return c.elements().front().element.str();
  std::string s;
  if (c.lower().is_finite()) s += c.lower().value().str() + " <= ";
  s += "{";
  for (std::size_t i = 0; i < c.elements().size(); ++i) {
    if (i) s += ", ";
    s += c.elements()[i].element.str();
    if (!(c.elements()[i].weight == Rational(1))) {
      s += "=" + c.elements()[i].weight.str();
    }
  }
  s += "}";
  if (c.upper().is_finite()) s += " <= " + c.upper().value().str();
  return s;
}

std::string print_wrule(const WRule& r) {
  bool headless = is_headless_head(r.head);
  std::string s = headless ? "" : print_constraint(r.head);
  if (!r.body.empty()) {
    if (!headless) s += " ";
    s += ":- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) s += ", ";
      s += print_constraint(r.body[i]);
    }
    return s + ".";
  }
  if (headless) return ":- .";
  return s + ".";
}

std::string print_weight_program(const WProgram& p) {
  std::string s;
  for (const auto& r : p.rules) s += print_wrule(r) + "\n";
  return s;
}

namespace {

enum Prec { kPrecOr = 0, kPrecAnd = 1, kPrecNot = 2 };

void print_formula_rec(const Formula& f, std::string& out, bool paren_or,
                       bool paren_and) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
      out += "bot";
      return;
    case Formula::Kind::kTop:
      out += "top";
      return;
    case Formula::Kind::kLit:
      out += f.literal().str();
      return;
    case Formula::Kind::kNot: {
      out += "not ";
      const Formula& c = f.child();
      bool wrap = c.kind() == Formula::Kind::kAnd ||
                  c.kind() == Formula::Kind::kOr;
      if (wrap) out += "(";
      print_formula_rec(c, out, false, false);
      if (wrap) out += ")";
      return;
    }
    case Formula::Kind::kAnd: {
      bool wrap = paren_and;
      if (wrap) out += "(";
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) out += ", ";
        // Or children and nested And children need parentheses to
        // reparse into the same tree.
        print_formula_rec(f.parts()[i], out, true, true);
      }
      if (wrap) out += ")";
      return;
    }
    case Formula::Kind::kOr: {
      bool wrap = paren_or;
      if (wrap) out += "(";
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) out += "; ";
        print_formula_rec(f.parts()[i], out, true, false);
      }
      if (wrap) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_rec(f, out, false, false);
  return out;
}

std::string print_nrule(const NRule& r) {
  std::string s = print_formula(r.head);
  if (r.body != Formula::top()) s += " :- " + print_formula(r.body);
  return s + ".";
}

std::string print_nested_program(const NProgram& p) {
  std::string s;
  for (const auto& r : p.rules) s += print_nrule(r) + "\n";
  return s;
}

}  // namespace wcnest
