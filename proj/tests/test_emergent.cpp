#include <string>
#include <vector>

#include "doctest.h"
#include "lsc/emergent.hpp"
#include "lsc/errors.hpp"
#include "lsc/gen.hpp"
#include "lsc/parse.hpp"
#include "lsc/rewrite.hpp"
#include "lsc/term.hpp"
#include "lsc/trace_check.hpp"

using namespace lsc;

namespace {
Term T(const char* s) { return parse_term(s); }
const Scale E = Scale::generator("e");
const Scale M = Scale::generator("m");
}  // namespace

TEST_CASE("dilation builds the based-abstraction form") {
  CHECK(print_term(dilation(T("b"), E, T("a"))) == "((y \\ a) {e} b)");
  // binder avoids the operands' free variables
  CHECK(print_term(dilation(T("y"), E, T("(y {1} a)"))) ==
        "((y_1 \\ (y {1} a)) {e} y)");
  // neutral coefficient collapses to the argument
  CHECK(equiv(dilation(T("b"), Scale::one(), T("a")), T("a"), 100).proved);
  // based at itself it collapses too
  CHECK(equiv(dilation(T("a"), E, T("a")), T("a"), 100).proved);
}

TEST_CASE("bullet is dilation with the inverse coefficient") {
  CHECK(print_term(bullet(T("b"), E, T("a"))) == "((y \\ a) {e^-1} b)");
  CHECK(bullet(T("b"), Scale::one(), T("a")) ==
        dilation(T("b"), Scale::one(), T("a")));
  CHECK(equiv(dilation(T("a"), E, bullet(T("a"), E, T("c"))), T("c"), 500)
            .proved);
}

TEST_CASE("app is neutral-scale pairing") {
  CHECK(app(T("a"), T("b")) == T("(a {1} b)"));
  CHECK(normalize(app(T("(x \\ b)"), T("a")), 10).result == T("b"));
  Term k = combinators::k();
  CHECK(normalize(app(app(k, T("a")), T("b")), 50).result == T("a"));
}

TEST_CASE("dilation laws hold on the stock instances") {
  for (const CheckReport& r :
       check_irq_axioms(T("a"), T("b"), E, M, 5000)) {
    INFO(r.axiom << " on " << r.instance);
    CHECK(r.proved);
  }
  for (const CheckReport& r : check_irq_axioms(T("a"), T("b"), Scale::one(),
                                               Scale::one(), 5000)) {
    INFO(r.axiom << " on " << r.instance);
    CHECK(r.proved);
  }
  for (const CheckReport& r : check_irq_axioms(
           T("(u \\ u)"), T("(v {e} w)"), E, E.inverse(), 5000)) {
    INFO(r.axiom << " on " << r.instance);
    CHECK(r.proved);
  }
}

TEST_CASE("report lines carry the verdict") {
  std::vector<CheckReport> rs = check_irq_axioms(T("a"), T("b"), E, M, 5000);
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].axiom == "idem");
  CHECK(rs[1].axiom == "inv");
  CHECK(rs[2].axiom == "unit");
  CHECK(rs[3].axiom == "compose");
  for (const CheckReport& r : rs) {
    CHECK(r.line().find(r.axiom + " proved budget=") == 0);
    for (const ProofEvidence& p : r.proofs) {
      std::string why;
      CHECK(validate_trace(p.lhs, p.rhs, p.trace, &why));
      INFO(why);
    }
  }
}

TEST_CASE("t1 recognition") {
  CHECK(is_t1_term(T("(x \\ (x {1} y))")));
  CHECK_FALSE(is_t1_term(T("(x \\ (x {e} y))")));
  CHECK(is_t1_term(T("x")));
  CHECK_FALSE(is_t1_term(T("((a {1} b) {1} (c {m} c))")));
}

TEST_CASE("t1 closure under the constructors and substitution") {
  TermGen g(19);
  const std::vector<VarName> vars = {"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    // neutral-scale generator: post-filter a random term by neutralizing
    Term a = g.random_term(3, vars);
    Term b = g.random_term(3, vars);
    if (!is_t1_term(a) || !is_t1_term(b)) continue;
    CHECK(is_t1_term(app(a, b)));
    CHECK(is_t1_term(Term::abs("w", a)));
    CHECK(is_t1_term(substitute(a, g.pick(vars), b)));
  }
}

TEST_CASE("classical oracle on the canonical examples") {
  Term k_ab = app(app(combinators::k(), T("a")), T("b"));
  NormalizeOutcome o = lambda_oracle_normalize(k_ab, 100);
  CHECK(o.status == NormalStatus::normal);
  CHECK(alpha_eq(o.result, T("a")));

  Term plus23 = app(app(combinators::church_plus(), combinators::church(2)),
                    combinators::church(3));
  o = lambda_oracle_normalize(plus23, 500);
  CHECK(o.status == NormalStatus::normal);
  CHECK(alpha_eq(o.result, combinators::church(5)));

  Term omega_half = T("(x \\ (x {1} x))");
  Term omega = app(omega_half, omega_half);
  CHECK(lambda_oracle_normalize(omega, 50).status ==
        NormalStatus::budget_exhausted);

  CHECK_THROWS_AS(lambda_oracle_normalize(T("(a {e} b)"), 10), Error);
  try {
    lambda_oracle_normalize(T("(a {e} b)"), 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_t1_term);
  }
}

TEST_CASE("oracle performs eta contraction") {
  Term eta = T("(x \\ (b {1} x))");
  NormalizeOutcome o = lambda_oracle_normalize(eta, 10);
  CHECK(o.status == NormalStatus::normal);
  CHECK(o.result == T("b"));
}

TEST_CASE("engine agrees with the oracle on the corpus") {
  for (const auto& [name, term] : lambda_corpus()) {
    CheckReport r = check_t1_agreement(term, 2000);
    INFO(name);
    CHECK(r.proved);
  }
}

TEST_CASE("agreement on the applied S shape from the remark") {
  Term s_applied =
      T("(((x \\ (y \\ ((x {1} z) {1} (y {1} z)))) {1} a) {1} b)");
  CheckReport r = check_t1_agreement(s_applied, 2000);
  CHECK(r.proved);
  NormalizeOutcome o = normalize(s_applied, 100);
  CHECK(o.result == T("((a {1} z) {1} (b {1} z))"));
}

TEST_CASE("bridge property instances") {
  CHECK(prop1_instance(T("a"), T("b"), E, 5000).proved);
  CHECK(prop1_instance(T("a"), T("b"), Scale::one(), 5000).proved);
  CHECK(prop1_instance(T("(u \\ u)"), T("(v \\ v)"), E, 5000).proved);

  CHECK(prop2_instance(T("a"), T("b"), E, 5000).proved);
  CHECK(prop2_instance(T("a"), T("b"), Scale::one(), 5000).proved);
  CHECK(prop2_instance(T("(u {m} w)"), T("b"), Scale::generator("e", 2), 5000)
            .proved);
}

TEST_CASE("dilation laws on random instances") {
  TermGen g(3);
  const std::vector<VarName> vars = {"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    Term a = g.random_term(4, vars);
    Term b = g.random_term(4, vars);
    Scale eps = g.random_scale({"e", "m"}, -2, 2);
    Scale mu = g.random_scale({"e", "m"}, -2, 2);
    for (const CheckReport& r : check_irq_axioms(a, b, eps, mu, 5000)) {
      INFO(r.axiom << " on " << r.instance);
      CHECK(r.proved);
    }
  }
}
