#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "heyting/error.hpp"
#include "heyting/formula.hpp"
#include "heyting/term.hpp"

namespace heyting {

namespace detail {

enum class Tok {
  Ident, Bot, Top, Not, And, Or, Imp, LParen, RParen, Eq, Dot, Comma,
  FImplies, Forall, Exists, FNot, FAnd, FOr, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  struct Sym {
    std::string_view text;
    Tok kind;
  };
  // Longer spellings first so "=>" is not read as "=".
  static const Sym symbols[] = {
      {"->", Tok::Imp},    {"=>", Tok::FImplies}, {"→", Tok::Imp},  {"¬", Tok::Not},    {"∧", Tok::And},
      {"∨", Tok::Or},      {"⊥", Tok::Bot},       {"⊤", Tok::Top},  {"∀", Tok::Forall}, {"∃", Tok::Exists},
      {"~", Tok::Not},     {"&", Tok::And},       {"|", Tok::Or},   {"(", Tok::LParen}, {")", Tok::RParen},
      {"=", Tok::Eq},      {".", Tok::Dot},       {",", Tok::Comma},
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "bot") kind = Tok::Bot;
      else if (word == "top") kind = Tok::Top;
      else if (word == "forall") kind = Tok::Forall;
      else if (word == "exists") kind = Tok::Exists;
      else if (word == "not") kind = Tok::FNot;
      else if (word == "and") kind = Tok::FAnd;
      else if (word == "or") kind = Tok::FOr;
      out.push_back({kind, word, i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& s : symbols) {
      if (starts(s.text)) {
        out.push_back({s.kind, std::string(s.text), i});
        i += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(i, "unexpected character '" + std::string(1, src[i]) + "'");
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Equation whole_equation() {
    Equation e = equation();
    expect(Tok::End, "end of input");
    return e;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      const Token& t = peek();
      throw SyntaxError(t.pos, std::string("expected ") + what + (t.kind == Tok::End ? ", got end of input"
                                                                                      : ", got '" + t.text + "'"));
    }
  }

  // term := join ('->' term)?
  Term term() {
    Term lhs = join();
    if (accept(Tok::Imp)) return Term::imp(lhs, term());
    return lhs;
  }
  Term join() {
    Term t = meet();
    while (accept(Tok::Or)) t = Term::join(t, meet());
    return t;
  }
  Term meet() {
    Term t = unary();
    while (accept(Tok::And)) t = Term::meet(t, unary());
    return t;
  }
  Term unary() {
    if (accept(Tok::Not)) return Term::neg(unary());
    return atom();
  }
  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: ++pos_; return Term::var(t.text);
      case Tok::Bot: ++pos_; return Term::bot();
      case Tok::Top: ++pos_; return Term::top();
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.pos, t.kind == Tok::End ? "expected a term, got end of input"
                                                    : "expected a term, got '" + t.text + "'");
    }
  }

  Equation equation() {
    Term lhs = term();
    expect(Tok::Eq, "'='");
    return {lhs, term()};
  }

  // formula := quantifier | disj ('=>' formula)?
  Formula formula() {
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) return quantified();
    Formula lhs = disj();
    if (accept(Tok::FImplies)) return Formula::implies(lhs, formula());
    return lhs;
  }
  Formula quantified() {
    bool universal = peek().kind == Tok::Forall;
    ++pos_;
    std::vector<std::string> vars;
    do {
      const Token& t = peek();
      if (t.kind != Tok::Ident) throw SyntaxError(t.pos, "expected a bound variable");
      vars.push_back(t.text);
      ++pos_;
      accept(Tok::Comma);
    } while (peek().kind == Tok::Ident);
    expect(Tok::Dot, "'.'");
    Formula body = formula();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = universal ? Formula::forall(*it, body) : Formula::exists(*it, body);
    return body;
  }
  Formula disj() {
    Formula f = conj();
    while (accept(Tok::FOr)) f = Formula::disj(f, conj());
    return f;
  }
  Formula conj() {
    Formula f = funary();
    while (accept(Tok::FAnd)) f = Formula::conj(f, funary());
    return f;
  }
  Formula funary() {
    if (accept(Tok::FNot)) return Formula::negation(funary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) return quantified();
    if (peek().kind == Tok::LParen) {
      // A parenthesis opens either a subformula or the first term of an
      // equation; try the formula reading first and rewind on failure.
      std::size_t save = pos_;
      try {
        ++pos_;
        Formula inner = formula();
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::Eq && peek().kind != Tok::Imp && peek().kind != Tok::Or &&
            peek().kind != Tok::And)
          return inner;
      } catch (const SyntaxError&) {
      }
      pos_ = save;
    }
    return Formula::atom(equation());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar, tightest first: ~ (¬), & (∧), | (∨), -> (→, right associative).
inline Term parse_term(std::string_view src) { return detail::Parser(src).whole_term(); }

inline Equation parse_equation(std::string_view src) { return detail::Parser(src).whole_equation(); }

/// Formulas: equation atoms joined by not/and/or/=> with forall/exists.
inline Formula parse_formula(std::string_view src) { return detail::Parser(src).whole_formula(); }

}  // namespace heyting
