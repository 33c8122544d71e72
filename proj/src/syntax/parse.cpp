#include "tsa/syntax/parse.h"

#include <cctype>
#include <cstdint>
#include <vector>

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/names.h"
#include "tsa/syntax/ops.h"

namespace tsa {

namespace {

// Numerals are iterated-successor chains, and the structural operations
// walk them recursively; the cap keeps chains well inside stack limits.
// Larger values enter through assignments, never through literals.
constexpr std::uint64_t kNumeralCap = 20000;

enum class Tok : std::uint8_t {
  Ident, Number, LParen, RParen, Comma, Semicolon, Dot, Bang, Apos,
  Plus, Star, Eq, Lt, Le, Pipe, Tilde, Amp, Vee, Arrow, End,
};

struct Token {
  Tok kind;
  std::string text;     // for Ident
  std::uint64_t value;  // for Number
  std::size_t pos;      // byte offset, for error messages
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t at) { out.push_back({k, {}, 0, at}); };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(src[i] - '0');
        if (v > kNumeralCap) {
          throw ParseError("numeral too large at offset " + std::to_string(at));
        }
        ++i;
      }
      out.push_back({Tok::Number, {}, v, at});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_')) {
        ++i;
      }
      out.push_back(
          {Tok::Ident, std::string(src.substr(start, i - start)), 0, at});
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, at); ++i; break;
      case ')': push(Tok::RParen, at); ++i; break;
      case ',': push(Tok::Comma, at); ++i; break;
      case ';': push(Tok::Semicolon, at); ++i; break;
      case '.': push(Tok::Dot, at); ++i; break;
      case '!': push(Tok::Bang, at); ++i; break;
      case '\'': push(Tok::Apos, at); ++i; break;
      case '+': push(Tok::Plus, at); ++i; break;
      case '*': push(Tok::Star, at); ++i; break;
      case '=': push(Tok::Eq, at); ++i; break;
      case '~': push(Tok::Tilde, at); ++i; break;
      case '&': push(Tok::Amp, at); ++i; break;
      case '|': push(Tok::Pipe, at); ++i; break;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          push(Tok::Le, at);
          i += 2;
        } else {
          push(Tok::Lt, at);
          ++i;
        }
        break;
      case '\\':
        if (i + 1 < src.size() && src[i + 1] == '/') {
          push(Tok::Vee, at);
          i += 2;
        } else {
          throw ParseError("stray backslash at offset " + std::to_string(at));
        }
        break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          push(Tok::Arrow, at);
          i += 2;
        } else {
          throw ParseError("stray '-' at offset " + std::to_string(at));
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c +
                         "' at offset " + std::to_string(at));
    }
  }
  out.push_back({Tok::End, {}, 0, src.size()});
  return out;
}

// Backtracking recursive-descent parser. Failed attempts throw ParseError;
// the deepest failure is reported when nothing applies.
class Parser {
 public:
  explicit Parser(std::string_view src,
                  const std::set<std::string>* defined = nullptr)
      : toks_(lex(src)), defined_(defined) {}

  TermPtr term_all() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  FunctorPtr functor_all() {
    FunctorPtr u = functor();
    expect_end();
    return u;
  }

  FormulaPtr formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

 private:
  std::vector<Token> toks_;
  const std::set<std::string>* defined_ = nullptr;
  std::size_t pos_ = 0;
  std::string deepest_msg_;
  std::size_t deepest_pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) {
    std::string msg = what + " at offset " + std::to_string(peek().pos);
    if (peek().pos >= deepest_pos_) {
      deepest_pos_ = peek().pos;
      deepest_msg_ = msg;
    }
    throw ParseError(deepest_msg_.empty() ? msg : deepest_msg_);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    advance();
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("trailing input");
  }

  template <typename F>
  auto attempt(F&& f) -> decltype(f()) {
    std::size_t saved = pos_;
    try {
      return f();
    } catch (const ParseError&) {
      pos_ = saved;
      return nullptr;
    }
  }

  // ------------------------------------------------------------- names

  NumVar num_var_from(const Token& tok) {
    auto split = split_var_name(tok.text);
    if (!split || is_reserved_word(split->base) || is_fun_var_word(split->base)) {
      fail("'" + tok.text + "' is not a number variable");
    }
    return NumVar{split->base, split->index};
  }

  // Parses a function-variable name at the current position, or returns
  // nullopt without consuming when none is present.
  std::optional<FunVar> try_fun_var() {
    if (peek().kind == Tok::Apos && peek(1).kind == Tok::Ident) {
      auto split = split_var_name(peek(1).text);
      if (!split) fail("invalid function-variable name");
      advance();
      advance();
      return FunVar{split->base, split->index};
    }
    if (peek().kind == Tok::Ident) {
      auto split = split_var_name(peek().text);
      if (split && is_fun_var_word(split->base)) {
        advance();
        return FunVar{split->base, split->index};
      }
    }
    return std::nullopt;
  }

  // ------------------------------------------------------------- terms

  TermPtr term() { return sum(); }

  TermPtr sum() {
    TermPtr t = product();
    while (peek().kind == Tok::Plus) {
      advance();
      t = mk_const(Const::Add, {t, product()});
    }
    return t;
  }

  TermPtr product() {
    TermPtr t = postfix();
    while (peek().kind == Tok::Star) {
      advance();
      t = mk_const(Const::Mul, {t, postfix()});
    }
    return t;
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (peek().kind == Tok::Apos) {
      advance();
      t = mk_const(Const::Succ, {t});
    }
    return t;
  }

  TermPtr paren_term_or_application() {
    // "(" functor ")" "(" term ")"  — application with an explicit head —
    // or an ordinary parenthesized term.
    if (TermPtr t = attempt([&]() -> TermPtr {
          expect(Tok::LParen, "'('");
          FunctorPtr head = functor();
          expect(Tok::RParen, "')'");
          expect(Tok::LParen, "'(' before application argument");
          TermPtr arg = term();
          expect(Tok::RParen, "')'");
          return mk_apply(std::move(head), std::move(arg));
        })) {
      return t;
    }
    expect(Tok::LParen, "'('");
    TermPtr t = term();
    expect(Tok::RParen, "')'");
    return t;
  }

  TermPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        advance();
        return numeral(tok.value);
      }
      case Tok::LParen:
        return paren_term_or_application();
      case Tok::Apos: {
        auto fv = try_fun_var();
        if (!fv) fail("expected function variable after '''");
        expect(Tok::LParen, "'(' after function variable in term position");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return mk_apply(mk_fun_var(*fv), std::move(arg));
      }
      case Tok::Ident: {
        if (tok.text == "rec") {
          advance();
          expect(Tok::LParen, "'(' after rec");
          TermPtr base = term();
          expect(Tok::Semicolon, "';'");
          FunctorPtr step = functor();
          expect(Tok::Semicolon, "';'");
          TermPtr count = term();
          expect(Tok::RParen, "')'");
          return mk_rec(std::move(base), std::move(step), std::move(count));
        }
        if (auto c = const_by_name(tok.text)) {
          const auto& sig = const_sig(*c);
          advance();
          std::vector<TermPtr> nums;
          std::vector<FunctorPtr> funs;
          if (sig.num_args + sig.fun_args > 0) {
            expect(Tok::LParen, "'(' after constant name");
            for (int i = 0; i < sig.num_args; ++i) {
              if (i > 0) expect(Tok::Comma, "','");
              nums.push_back(term());
            }
            for (int i = 0; i < sig.fun_args; ++i) {
              if (sig.num_args + i > 0) expect(Tok::Comma, "','");
              funs.push_back(functor());
            }
            expect(Tok::RParen, "')'");
          }
          return mk_const(*c, std::move(nums), std::move(funs));
        }
        if (defined_ && defined_->count(tok.text) != 0) {
          advance();
          expect(Tok::LParen, "'(' after defined constant");
          TermPtr a = term();
          expect(Tok::Comma, "','");
          TermPtr b = term();
          expect(Tok::RParen, "')'");
          return mk_defined(tok.text, std::move(a), std::move(b));
        }
        if (auto split = split_var_name(tok.text);
            split && is_fun_var_word(split->base)) {
          advance();
          expect(Tok::LParen, "'(' after function variable in term position");
          TermPtr arg = term();
          expect(Tok::RParen, "')'");
          return mk_apply(mk_fun_var(FunVar{split->base, split->index}),
                          std::move(arg));
        }
        NumVar v = num_var_from(tok);
        advance();
        return mk_var(v);
      }
      default:
        fail("expected a term");
    }
  }

  // ----------------------------------------------------------- functors

  FunctorPtr functor() {
    const Token& tok = peek();
    if (tok.kind == Tok::Ident && tok.text == "lam") {
      advance();
      if (peek().kind != Tok::Ident) fail("expected bound variable after lam");
      NumVar v = num_var_from(peek());
      advance();
      expect(Tok::Dot, "'.' after lam binder");
      return mk_lambda(v, term());
    }
    if (auto fv = try_fun_var()) return mk_fun_var(*fv);
    if (tok.kind == Tok::Ident) {
      if (auto c = const_by_name(tok.text); c && is_unary_const(*c)) {
        advance();
        return mk_const_fn(*c);
      }
      fail("'" + tok.text + "' is not a functor");
    }
    if (tok.kind == Tok::LParen) {
      advance();
      FunctorPtr u = functor();
      expect(Tok::RParen, "')'");
      return u;
    }
    fail("expected a functor");
  }

  // ----------------------------------------------------------- formulas

  FormulaPtr formula() { return implies_level(); }

  FormulaPtr implies_level() {
    FormulaPtr lhs = or_level();
    if (peek().kind == Tok::Arrow) {
      advance();
      return mk_implies(std::move(lhs), implies_level());
    }
    return lhs;
  }

  FormulaPtr or_level() {
    FormulaPtr f = and_level();
    while (peek().kind == Tok::Vee) {
      advance();
      f = mk_or(std::move(f), and_level());
    }
    return f;
  }

  FormulaPtr and_level() {
    FormulaPtr f = unary_level();
    while (peek().kind == Tok::Amp) {
      advance();
      f = mk_and(std::move(f), unary_level());
    }
    return f;
  }

  FormulaPtr unary_level() {
    if (peek().kind == Tok::Tilde) {
      advance();
      return mk_not(unary_level());
    }
    if (peek().kind == Tok::Ident &&
        (peek().text == "forall" || peek().text == "exists")) {
      return quantifier();
    }
    return formula_atom();
  }

  FormulaPtr quantifier() {
    bool universal = peek().text == "forall";
    advance();
    bool unique = false;
    if (peek().kind == Tok::Bang) {
      if (universal) fail("'!' only follows exists");
      unique = true;
      advance();
    }
    if (!unique) {
      if (auto fv = try_fun_var()) {
        expect(Tok::Dot, "'.' after quantifier binder");
        FormulaPtr body = formula();
        return universal ? mk_forall_fun(*fv, std::move(body))
                         : mk_exists_fun(*fv, std::move(body));
      }
    }
    if (peek().kind != Tok::Ident) fail("expected quantifier binder");
    NumVar v = num_var_from(peek());
    advance();
    expect(Tok::Dot, "'.' after quantifier binder");
    FormulaPtr body = formula();
    if (unique) return exists_unique(v, std::move(body));
    return universal ? mk_forall(v, std::move(body))
                     : mk_exists(v, std::move(body));
  }

  FormulaPtr relation_after(TermPtr lhs) {
    switch (peek().kind) {
      case Tok::Eq:
        advance();
        return mk_eq(std::move(lhs), term());
      case Tok::Lt:
        advance();
        return lt_formula(std::move(lhs), term());
      case Tok::Le:
        advance();
        return le_formula(std::move(lhs), term());
      case Tok::Pipe:
        advance();
        return divides_formula(std::move(lhs), term());
      default:
        fail("expected a relation symbol");
    }
  }

  FormulaPtr formula_atom() {
    // A relation between terms...
    if (FormulaPtr f = attempt([&]() -> FormulaPtr {
          TermPtr lhs = term();
          return relation_after(std::move(lhs));
        })) {
      return f;
    }
    // ...or an equation between functors (expanded pointwise)...
    if (FormulaPtr f = attempt([&]() -> FormulaPtr {
          FunctorPtr u = functor();
          expect(Tok::Eq, "'='");
          FunctorPtr v = functor();
          return functor_eq_formula(std::move(u), std::move(v));
        })) {
      return f;
    }
    // ...or a parenthesized formula.
    expect(Tok::LParen, "a formula");
    FormulaPtr f = formula();
    expect(Tok::RParen, "')'");
    return f;
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  Parser p(text);
  return p.term_all();
}

FunctorPtr parse_functor(std::string_view text) {
  Parser p(text);
  return p.functor_all();
}

FormulaPtr parse_formula(std::string_view text) {
  Parser p(text);
  return p.formula_all();
}

Expr parse_expr(std::string_view text) {
  try {
    return parse_formula(text);
  } catch (const ParseError&) {
  }
  try {
    return parse_term(text);
  } catch (const ParseError&) {
  }
  try {
    return parse_functor(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("not a formula, term, or functor: ") +
                     e.what());
  }
}

TermPtr parse_term(std::string_view text, const std::set<std::string>& defined) {
  Parser p(text, &defined);
  return p.term_all();
}

FormulaPtr parse_formula(std::string_view text,
                         const std::set<std::string>& defined) {
  Parser p(text, &defined);
  return p.formula_all();
}

Expr parse_expr(std::string_view text, const std::set<std::string>& defined) {
  try {
    return parse_formula(text, defined);
  } catch (const ParseError&) {
  }
  try {
    return parse_term(text, defined);
  } catch (const ParseError&) {
  }
  try {
    return parse_functor(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("not a formula, term, or functor: ") +
                     e.what());
  }
}

}  // namespace tsa
