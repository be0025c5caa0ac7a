#include "rspin/expression.hpp"

#include <cctype>
#include <optional>

namespace rspin::expression {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Int& r) : text_(text), r_(r) {}

  FormalClass parse_expression() {
    FormalClass out;
    skip_space();
    Int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    out += sign * parse_term();
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      out += (op == '-' ? Int(-1) : Int(1)) * parse_term();
    }
    return out;
  }

 private:
  FormalClass parse_term() {
    skip_space();
    const std::size_t start = pos_;
    std::optional<Int> coefficient;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned();
      skip_space();
      if (peek() == '*') {
        take();
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a class after '*'");
      }
    }
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      if (!coefficient) fail("expected a term");
      if (*coefficient != 0)
        throw ParseError("a bare integer other than 0 does not denote a class", start);
      return {};
    }
    const ClassSymbol atom = parse_atom();
    return coefficient.value_or(1) * FormalClass(atom);
  }

  ClassSymbol parse_atom() {
    const std::size_t start = pos_;
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(peek()))) word += take();
    if (word == "mu") {
      if (!divides(2, r_))
        throw InvalidInput("mu is only defined when r is even (r = " + r_.get_str() +
                           "); it is built from the underlying 2-Spin structure");
      return ClassSymbol::mu();
    }
    if (word != "lambda" && word != "kappa1")
      throw ParseError("unknown class '" + word + "' (expected lambda, kappa1 or mu)", start);
    Int a = r_;
    skip_space();
    if (peek() == '(') {
      take();
      a = parse_signed();
      skip_space();
      expect('/');
      const std::size_t denominator_at = (skip_space(), pos_);
      const Int denominator = parse_signed();
      if (denominator != r_)
        throw ParseError("denominator " + denominator.get_str() +
                             " does not match the context's r = " + r_.get_str(),
                         denominator_at);
      skip_space();
      expect(')');
    }
    return word == "lambda" ? ClassSymbol::lambda(a) : ClassSymbol::kappa1(a);
  }

  Int parse_signed() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    skip_space();
    Int v = parse_unsigned();
    return negative ? Int(-v) : v;
  }

  Int parse_unsigned() {
    const std::size_t start = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty()) throw ParseError("expected an integer", start);
    return Int(digits);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(what + " but reached end of input", pos_);
    throw ParseError(what + ", found '" + text_[pos_] + "'", pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  const Int& r_;
  std::size_t pos_ = 0;
};

struct Term {
  Int coefficient;
  std::string body;
  bool compound;  // body needs parentheses when scaled
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const bool negative = t.coefficient < 0;
    const Int magnitude = abs(t.coefficient);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude == 1) {
      out += (t.compound && (negative || i > 0)) ? "(" + t.body + ")" : t.body;
    } else {
      out += magnitude.get_str() + "*" + (t.compound ? "(" + t.body + ")" : t.body);
    }
  }
  return out;
}

}  // namespace

FormalClass parse(std::string_view text, const Int& r) {
  return Parser(text, r).parse_expression();
}

std::string format_symbol(const ClassSymbol& s, const Int& r) {
  switch (s.kind) {
    case ClassSymbol::Kind::mu:
      return "mu";
    case ClassSymbol::Kind::lambda:
      return s.a == r ? "lambda" : "lambda(" + s.a.get_str() + "/" + r.get_str() + ")";
    case ClassSymbol::Kind::kappa1:
      return s.a == r ? "kappa1" : "kappa1(" + s.a.get_str() + "/" + r.get_str() + ")";
  }
  return {};
}

std::string format_class(const FormalClass& x, const Int& r) {
  std::vector<Term> terms;
  // Hodge-type classes first, then the fractional ones, then mu.
  auto rank = [&](const ClassSymbol& s) {
    if (s.kind == ClassSymbol::Kind::mu) return 3;
    return s.a == r ? (s.kind == ClassSymbol::Kind::lambda ? 0 : 1) : 2;
  };
  for (int pass = 0; pass <= 3; ++pass)
    for (const auto& [s, c] : x.terms())
      if (rank(s) == pass) terms.push_back({c, format_symbol(s, r), false});
  return join_terms(terms);
}

std::string format_relation(const std::vector<FormalClass>& generators,
                            std::span<const Int> row, const Int& r) {
  if (row.size() != generators.size())
    throw InvalidInput("relation row does not match the generator count");
  Int content = 0;
  std::size_t support = 0;
  for (const auto& c : row) {
    content = gcd(content, c);
    if (c != 0) ++support;
  }
  if (support == 0) return "0";
  const bool factor_out = support > 1 && content > 1;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    const FormalClass& g = generators[i];
    const Int c = factor_out ? Int(row[i] / content) : row[i];
    if (g.terms().size() == 1) {
      // c * (k * s) is written as (c k) * s
      const auto& [symbol, k] = *g.terms().begin();
      terms.push_back({c * k, format_symbol(symbol, r), false});
    } else {
      terms.push_back({c, format_class(g, r), true});
    }
  }
  const std::string body = join_terms(terms);
  return factor_out ? content.get_str() + "(" + body + ")" : body;
}

std::string format_presentation(const classes::Presentation& p, const Int& r) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += format_class(p.generators[i], r);
  }
  out += " | ";
  if (p.relations.rows() == 0) out += "-";
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    if (i) out += ", ";
    out += format_relation(p.generators, p.relations.row(i), r);
  }
  out += "⟩";
  return out;
}

}  // namespace rspin::expression
