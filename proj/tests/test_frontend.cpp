#include <string>
#include <vector>

#include "doctest.h"
#include "lsc/dot.hpp"
#include "lsc/errors.hpp"
#include "lsc/gen.hpp"
#include "lsc/parse.hpp"
#include "lsc/term.hpp"

using namespace lsc;

TEST_CASE("grammar forms") {
  CHECK(parse_term("(x \\ x)") == Term::abs("x", Term::var("x")));
  CHECK(parse_term("((x \\ (b {m} x)) {e} a)") ==
        Term::scaled(
            Term::abs("x", Term::scaled(Term::var("b"),
                                        Scale::generator("m"),
                                        Term::var("x"))),
            Scale::generator("e"), Term::var("a")));
  // juxtaposition desugars to the neutral scale
  CHECK(parse_term("(K a)") ==
        Term::scaled(Term::var("K"), Scale::one(), Term::var("a")));
  CHECK(print_term(parse_term("(K a)")) == "(K {1} a)");
  // whitespace is insignificant between tokens
  CHECK(parse_term("  ( x \\   ( b   {  e ^ 2 * m }  x ) ) ") ==
        parse_term("(x \\ (b {e^2*m} x))"));
}

TEST_CASE("dil sugar builds a dilation") {
  CHECK(print_term(parse_term("dil{e}(b, a)")) == "((y \\ a) {e} b)");
  // nested argument terms work
  CHECK(print_term(parse_term("dil{e^-1}((x \\ x), (a b))")) ==
        "((y \\ (a {1} b)) {e^-1} (x \\ x))");
  // the binder avoids free variables of both operands
  CHECK(print_term(parse_term("dil{m}(y, (y {1} a))")) ==
        "((y_1 \\ (y {1} a)) {m} y)");
}

TEST_CASE("printing is canonical and parse inverts it") {
  const char* cases[] = {
      "x",
      "(x \\ x)",
      "(a {1} b)",
      "(a {e^2*m^-1} b)",
      "((x \\ (b {m} x)) {e} a)",
      "((x \\ (y \\ (x {e} y))) {m^-2} (z \\ z))",
  };
  for (const char* c : cases) {
    Term t = parse_term(c);
    CHECK(print_term(t) == c);
    CHECK(parse_term(print_term(t)) == t);
  }
}

TEST_CASE("seeded round trip over random terms") {
  TermGen g(123);
  const std::vector<VarName> vars = {"x", "y", "z", "a"};
  for (int i = 0; i < 1000; ++i) {
    Term t = g.random_term(5, vars);
    Term back = parse_term(print_term(t));
    CHECK(back == t);  // name-identical, not merely alpha-equivalent
  }
}

namespace {

struct CaughtParse {
  bool threw = false;
  ErrorCode code{};
  size_t start = 0, end = 0;
  std::string message;
};

CaughtParse try_parse(const char* src) {
  CaughtParse out;
  try {
    parse_term(src);
  } catch (const ParseError& e) {
    out.threw = true;
    out.code = e.code();
    out.start = e.span().start;
    out.end = e.span().end;
    out.message = e.what();
  }
  return out;
}

}  // namespace

TEST_CASE("parse errors carry stable spans and categories") {
  {
    CaughtParse c = try_parse("(x \\ x");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::unbalanced_parens);
    CHECK(c.start == 6);  // at end of input
  }
  {
    CaughtParse c = try_parse("(x \\ x))");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::unbalanced_parens);
    CHECK(c.start == 7);
    CHECK(c.end == 8);  // the stray ')'
  }
  {
    CaughtParse c = try_parse("(a {e^} b)");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::bad_scale_literal);
  }
  {
    CaughtParse c = try_parse("(a {2e} b)");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::bad_scale_literal);
  }
  {
    CaughtParse c = try_parse("(a)");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::syntax_error);
  }
  {
    CaughtParse c = try_parse("");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::syntax_error);
  }
  {
    CaughtParse c = try_parse("(\\ x)");
    REQUIRE(c.threw);
    CHECK(c.code == ErrorCode::syntax_error);
  }
  // determinism: same input, same span, same message
  CaughtParse a = try_parse("(a {e^} b)");
  CaughtParse b = try_parse("(a {e^} b)");
  CHECK(a.start == b.start);
  CHECK(a.end == b.end);
  CHECK(a.message == b.message);
}

TEST_CASE("dot export shape and determinism") {
  // a single variable is a single node
  std::string v = to_dot(parse_term("x"));
  CHECK(v.find("digraph term {") == 0);
  CHECK(v.find("label=\"x\"") != std::string::npos);
  CHECK(v.find("->") == std::string::npos);

  // an abstraction node has the binder leaf as its left child
  std::string ab = to_dot(parse_term("(x \\ y)"));
  CHECK(ab.find("label=\"\\\\\"") == std::string::npos);  // no raw backslash
  CHECK(ab.find("n0 [label=\"λ\"]") != std::string::npos);
  CHECK(ab.find("n1 [label=\"x\"]") != std::string::npos);
  CHECK(ab.find("n2 [label=\"y\"]") != std::string::npos);
  CHECK(ab.find("n0 -> n1") < ab.find("n0 -> n2"));

  // a scaled node is labeled with the canonical scale text
  std::string sc = to_dot(parse_term("(a {e^2*m} b)"));
  CHECK(sc.find("label=\"e^2*m\"") != std::string::npos);

  // byte determinism
  Term t = parse_term("((x \\ (x {e} y)) {m} z)");
  CHECK(to_dot(t) == to_dot(t));
  CHECK(to_dot(t) == to_dot(parse_term(print_term(t))));
}

TEST_CASE("scale literal canonicalization through the term printer") {
  CHECK(print_term(parse_term("(a {m*e} b)")) == "(a {e*m} b)");
  CHECK(print_term(parse_term("(a {e^0} b)")) == "(a {1} b)");
  CHECK(print_term(parse_term("(a {e*e} b)")) == "(a {e^2} b)");
}
