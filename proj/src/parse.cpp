#include "lsc/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

#include "lsc/emergent.hpp"
#include "lsc/errors.hpp"

namespace lsc {

namespace {

enum class Tok {
  lparen, rparen, lbrace, rbrace, backslash,
  star, caret, comma, minus, ident, number, end,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push1 = [&](Tok k) {
    out.push_back({k, std::string(src.substr(i, 1)), {i, i + 1}});
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': push1(Tok::lparen); continue;
      case ')': push1(Tok::rparen); continue;
      case '{': push1(Tok::lbrace); continue;
      case '}': push1(Tok::rbrace); continue;
      case '\\': push1(Tok::backslash); continue;
      case '*': push1(Tok::star); continue;
      case '^': push1(Tok::caret); continue;
      case ',': push1(Tok::comma); continue;
      case '-': push1(Tok::minus); continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), {i, j}});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), {i, j}});
      i = j;
      continue;
    }
    throw ParseError(ErrorCode::syntax_error, {i, i + 1},
                     "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::end, "", {src.size(), src.size()}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term parse_term_all() {
    Term t = expr();
    const Token& tk = cur();
    if (tk.kind == Tok::rparen)
      throw ParseError(ErrorCode::unbalanced_parens, tk.span, "unmatched ')'");
    if (tk.kind != Tok::end)
      throw ParseError(ErrorCode::syntax_error, tk.span,
                       "trailing input after term");
    return t;
  }

  Scale parse_scale_all() {
    Scale s = scale_body();
    if (cur().kind != Tok::end)
      throw ParseError(ErrorCode::bad_scale_literal, cur().span,
                       "trailing input after scale");
    return s;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  const Token& peek(std::size_t k) const {
    std::size_t i = idx_ + k;
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }
  void advance() {
    if (idx_ + 1 < toks_.size()) ++idx_;
  }

  void expect_rparen() {
    if (cur().kind == Tok::rparen) {
      advance();
      return;
    }
    if (cur().kind == Tok::end)
      throw ParseError(ErrorCode::unbalanced_parens, cur().span, "missing ')'");
    throw ParseError(ErrorCode::syntax_error, cur().span, "expected ')'");
  }

  Term expr() {
    const Token tk = cur();
    if (tk.kind == Tok::ident) {
      if (tk.text == "dil" && peek(1).kind == Tok::lbrace) return dil_form();
      if (tk.text == "dil")
        throw ParseError(ErrorCode::syntax_error, tk.span,
                         "'dil' is reserved; expected dil{scale}(B, A)");
      advance();
      return Term::var(tk.text);
    }
    if (tk.kind == Tok::lparen) {
      advance();
      if (cur().kind == Tok::ident && peek(1).kind == Tok::backslash) {
        const Token binder = cur();
        if (binder.text == "dil")
          throw ParseError(ErrorCode::syntax_error, binder.span,
                           "'dil' is reserved and cannot be a binder");
        advance();
        advance();
        Term body = expr();
        expect_rparen();
        return Term::abs(binder.text, body);
      }
      Term first = expr();
      if (cur().kind == Tok::lbrace) {
        advance();
        Scale s = scale_body();
        if (cur().kind != Tok::rbrace)
          throw ParseError(ErrorCode::bad_scale_literal, cur().span,
                           "expected '}'");
        advance();
        Term second = expr();
        expect_rparen();
        return Term::scaled(first, s, second);
      }
      if (cur().kind == Tok::rparen)
        throw ParseError(ErrorCode::syntax_error, cur().span,
                         "expected a second term or '{scale}'");
      Term second = expr();
      expect_rparen();
      return Term::scaled(first, Scale::one(), second);
    }
    if (tk.kind == Tok::end)
      throw ParseError(ErrorCode::syntax_error, tk.span, "expected a term");
    throw ParseError(ErrorCode::syntax_error, tk.span, "expected a term");
  }

  Term dil_form() {
    advance();  // dil
    advance();  // {
    Scale s = scale_body();
    if (cur().kind != Tok::rbrace)
      throw ParseError(ErrorCode::bad_scale_literal, cur().span,
                       "expected '}'");
    advance();
    if (cur().kind != Tok::lparen)
      throw ParseError(ErrorCode::syntax_error, cur().span,
                       "expected '(' after dil{scale}");
    advance();
    Term base = expr();
    if (cur().kind != Tok::comma)
      throw ParseError(ErrorCode::syntax_error, cur().span,
                       "expected ',' in dil{scale}(B, A)");
    advance();
    Term arg = expr();
    expect_rparen();
    return dilation(base, s, arg);
  }

  // One factor: "1", "name", or "name^exp" with exp a possibly negative
  // decimal int64.
  void scale_factor(std::vector<std::pair<std::string, std::int64_t>>& out) {
    const Token tk = cur();
    if (tk.kind == Tok::number) {
      if (tk.text == "1") {
        advance();
        return;  // neutral factor
      }
      throw ParseError(ErrorCode::bad_scale_literal, tk.span,
                       "expected a generator name or 1");
    }
    if (tk.kind != Tok::ident)
      throw ParseError(ErrorCode::bad_scale_literal, tk.span,
                       "expected a generator name or 1");
    advance();
    std::int64_t exp = 1;
    if (cur().kind == Tok::caret) {
      advance();
      bool neg = false;
      if (cur().kind == Tok::minus) {
        neg = true;
        advance();
      }
      const Token num = cur();
      if (num.kind != Tok::number)
        throw ParseError(ErrorCode::bad_scale_literal, num.span,
                         "expected an exponent");
      std::int64_t value = 0;
      auto [p, ec] = std::from_chars(num.text.data(),
                                     num.text.data() + num.text.size(), value);
      if (ec != std::errc() || p != num.text.data() + num.text.size())
        throw ParseError(ErrorCode::bad_scale_literal, num.span,
                         "exponent out of range");
      advance();
      exp = neg ? -value : value;
    }
    out.emplace_back(tk.text, exp);
  }

  Scale scale_body() {
    std::vector<std::pair<std::string, std::int64_t>> exps;
    scale_factor(exps);
    while (cur().kind == Tok::star) {
      advance();
      scale_factor(exps);
    }
    return Scale::from_exponents(exps);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

Term parse_term(std::string_view src) { return Parser(src).parse_term_all(); }

Scale parse_scale(std::string_view src) { return Parser(src).parse_scale_all(); }

}  // namespace lsc
