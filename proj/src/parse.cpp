/**
 * @file parse.cpp
 * @brief Recursive-descent parser for polynomial expressions and frames.
 */
#include "parse.hpp"

#include <cctype>

namespace sing {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (c) ++pos;
    return c;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrCode::Parse, what + " at position " + std::to_string(pos) + " in '" + text + "'");
  }

  bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  unsigned long number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) error("expected a number");
    const std::string digits = text.substr(start, pos - start);
    if (digits.size() > 18) error("integer literal too large");
    return std::stoul(digits);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) error("expected an identifier");
    return text.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  const Field* F;
  const Frame& frame;

  Parser(const std::string& text, const Field* field, const Frame& fr)
      : lex(text), F(field), frame(fr) {}

  Poly run() {
    Poly f = expr();
    if (lex.peek() != '\0') lex.error("trailing input");
    return f;
  }

  Poly expr() {
    Poly f = term();
    while (true) {
      if (lex.eat('+')) {
        f = f + term();
      } else if (lex.eat('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  Poly term() {
    Poly f = factor();
    while (true) {
      if (lex.eat('*')) {
        f = f * factor();
      } else if (lex.eat('/')) {
        Poly d = factor();
        if (d.size() != 1 || !d.terms().begin()->first.divides(Exponent{}))
          lex.error("division is only defined by nonzero constants");
        f = f.scale(F->inv(d.terms().begin()->second));
      } else {
        return f;
      }
    }
  }

  Poly factor() {
    bool neg = false;
    while (true) {
      if (lex.eat('-')) {
        neg = !neg;
      } else if (lex.eat('+')) {
        // no-op sign
      } else {
        break;
      }
    }
    Poly f = power();
    return neg ? -f : f;
  }

  Poly power() {
    Poly f = atom();
    if (lex.eat('^')) {
      if (!lex.at_number()) lex.error("exponent must be a nonnegative integer literal");
      unsigned long k = lex.number();
      if (k > 0xffff) lex.error("exponent too large");
      f = f.pow(static_cast<unsigned>(k));
    }
    return f;
  }

  Poly atom() {
    if (lex.eat('(')) {
      Poly f = expr();
      if (!lex.eat(')')) lex.error("expected ')'");
      return f;
    }
    if (lex.at_number()) {
      unsigned long v = lex.number();
      return Poly::constant(F, frame.n(), F->from_mpz(mpz_class(static_cast<unsigned long>(v))));
    }
    if (lex.at_ident()) {
      std::string name = lex.ident();
      int idx = frame.index_of(name);
      if (idx >= 0) return Poly::variable(F, frame.n(), static_cast<unsigned>(idx));
      if (name == "t" && F->spec().kind == FieldKind::RationalFunctions)
        return Poly::constant(F, frame.n(), F->fpt_t());
      if (name == "w" && F->spec().kind == FieldKind::ExtField)
        return Poly::constant(F, frame.n(), F->element(F->spec().p));
      lex.error("unknown identifier '" + name + "'");
    }
    lex.error("expected a number, identifier, or '('");
  }
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Poly parse_poly(const std::string& text, const Field* F, const Frame& frame) {
  if (F->spec().kind == FieldKind::RationalFunctions && frame.index_of("t") >= 0)
    fail(ErrCode::Parse, "'t' is reserved over F_p(t) and cannot name a variable");
  if (F->spec().kind == FieldKind::ExtField && frame.index_of("w") >= 0)
    fail(ErrCode::Parse, "'w' is reserved over an extension field and cannot name a variable");
  return Parser(text, F, frame).run();
}

Frame parse_frame(const std::string& text, unsigned N) {
  Frame fr;
  fr.N = N;
  size_t bar = text.find('|');
  if (text.find('|', bar == std::string::npos ? bar : bar + 1) != std::string::npos)
    fail(ErrCode::Parse, "frame declaration has more than one '|'");

  auto push_names = [&](const std::string& part) {
    size_t start = 0;
    while (start <= part.size()) {
      size_t comma = part.find(',', start);
      std::string name = part.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
      // trim
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (!valid_name(name))
        fail(ErrCode::Parse, "bad variable name '" + name + "' in frame '" + text + "'");
      fr.names.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  };

  if (bar == std::string::npos) {
    push_names(text);
    fr.split = fr.n();
  } else {
    push_names(text.substr(0, bar));
    fr.split = fr.n();
    push_names(text.substr(bar + 1));
  }
  if (fr.n() == 0 || fr.n() > kMaxVars)
    fail(ErrCode::Parse, "frame must declare between 1 and " + std::to_string(kMaxVars) + " variables");
  for (unsigned i = 0; i < fr.n(); ++i)
    for (unsigned j = i + 1; j < fr.n(); ++j)
      if (fr.names[i] == fr.names[j])
        fail(ErrCode::Parse, "duplicate variable name '" + fr.names[i] + "'");
  return fr;
}

}  // namespace sing
