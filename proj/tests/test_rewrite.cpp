#include <string>
#include <vector>

#include "doctest.h"
#include "lsc/errors.hpp"
#include "lsc/gen.hpp"
#include "lsc/parse.hpp"
#include "lsc/rewrite.hpp"
#include "lsc/term.hpp"
#include "lsc/trace_check.hpp"

using namespace lsc;

namespace {
Term T(const char* s) { return parse_term(s); }
const Position k_root = Position::root();
}  // namespace

TEST_CASE("beta* rewrites with a deterministic fresh binder") {
  CHECK(step_beta_star(T("((x \\ x) {e} y)"), k_root) ==
        T("((x_1 \\ y) {e} y)"));

  // self-application duplicates the argument under a fresh binder
  Term omega_half = T("(x \\ (x {1} x))");
  Term omega = Term::scaled(omega_half, Scale::one(), omega_half);
  CHECK(step_beta_star(omega, k_root) ==
        T("((x_1 \\ ((x \\ (x {1} x)) {1} (x \\ (x {1} x)))) {1} "
          "(x \\ (x {1} x)))"));

  // vacuous binder: the rewrite would be an alpha-identity, so it refuses
  CHECK_THROWS_AS(step_beta_star(T("((x \\ y) {e} z)"), k_root), Error);
  try {
    step_beta_star(T("((x \\ y) {e} z)"), k_root);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rule_not_applicable);
  }
  CHECK_THROWS_AS(step_beta_star(T("(a {e} b)"), k_root), Error);
}

TEST_CASE("R1 erases a vacuous wrapper around an identical operand") {
  CHECK(step_r1(T("((x \\ y) {e} y)"), k_root) == T("y"));
  CHECK(step_r1(T("((x \\ (u {m} v)) {e} (u {m} v))"), k_root) ==
        T("(u {m} v)"));
  // operands only need to be alpha-equivalent
  CHECK(step_r1(T("((x \\ (z \\ z)) {e} (w \\ w))"), k_root) == T("(z \\ z)"));
  CHECK_THROWS_AS(step_r1(T("((x \\ x) {e} x)"), k_root), Error);
  CHECK_THROWS_AS(step_r1(T("((x \\ y) {e} z)"), k_root), Error);
}

TEST_CASE("R2 multiplies the scales") {
  CHECK(step_r2(T("((x \\ (b {m} x)) {e} a)"), k_root) == T("(b {e*m} a)"));
  CHECK(step_r2(T("((x \\ (b {e^-1} x)) {e} a)"), k_root) == T("(b {1} a)"));
  CHECK_THROWS_AS(step_r2(T("((x \\ (x {m} x)) {e} a)"), k_root), Error);
  CHECK_THROWS_AS(step_r2(T("((x \\ (b {m} y)) {e} a)"), k_root), Error);
}

TEST_CASE("ext1 cancels a neutral eta-wrapper") {
  CHECK(step_ext1(T("(x \\ (b {1} x))"), k_root) == T("b"));
  CHECK(step_ext1(T("(x \\ ((u {e} v) {1} x))"), k_root) == T("(u {e} v)"));
  CHECK_THROWS_AS(step_ext1(T("(x \\ (b {e} x))"), k_root), Error);
  CHECK_THROWS_AS(step_ext1(T("(x \\ (x {1} x))"), k_root), Error);
}

TEST_CASE("ext2 discards a neutral application to a vacuous binder") {
  CHECK(step_ext2(T("((x \\ b) {1} a)"), k_root) == T("b"));
  CHECK(step_ext2(T("((x_1 \\ y) {1} y)"), k_root) == T("y"));
  CHECK_THROWS_AS(step_ext2(T("((x \\ b) {e} a)"), k_root), Error);
  CHECK_THROWS_AS(step_ext2(T("((x \\ x) {1} a)"), k_root), Error);
}

TEST_CASE("steps at inner positions rebuild the context") {
  Term t = T("(q {m} ((x \\ (b {m} x)) {e} a))");
  CHECK(step_r2(t, Position::parse("/R")) == T("(q {m} (b {e*m} a))"));
  CHECK_THROWS_AS(step_r2(t, Position::parse("/L")), Error);
  CHECK_THROWS_AS(step_r2(t, Position::parse("/R/L/B/R/R")), Error);
}

TEST_CASE("normalization of K applied twice") {
  Term t = T("(((x \\ (y \\ x)) {1} a) {1} b)");
  NormalizeOutcome o = normalize(t, 50);
  CHECK(o.status == NormalStatus::normal);
  CHECK(o.result == T("a"));
  REQUIRE(o.trace.steps.size() == 3);
  CHECK(o.trace.steps[0].rule == Rule::beta_star);
  CHECK(o.trace.steps[1].rule == Rule::ext2);
  CHECK(o.trace.steps[2].rule == Rule::ext2);
}

TEST_CASE("normalization applies R2 directly") {
  NormalizeOutcome o = normalize(T("((x \\ (b {m} x)) {e} a)"), 10);
  CHECK(o.status == NormalStatus::normal);
  CHECK(o.result == T("(b {e*m} a)"));
  CHECK(o.trace.steps.size() == 1);
}

TEST_CASE("divergent self-application exhausts the budget") {
  Term omega_half = T("(x \\ (x {1} x))");
  Term omega = Term::scaled(omega_half, Scale::one(), omega_half);
  NormalizeOutcome o = normalize(omega, 20);
  CHECK(o.status == NormalStatus::budget_exhausted);
  CHECK(o.trace.steps.size() == 20);
}

TEST_CASE("budget zero on a normal term is already normal") {
  NormalizeOutcome o = normalize(T("(a {e} b)"), 0);
  CHECK(o.status == NormalStatus::normal);
  CHECK(o.trace.steps.empty());
}

TEST_CASE("normal results contain no forward redex") {
  TermGen g(31);
  const std::vector<VarName> vars = {"x", "y", "z"};
  for (int i = 0; i < 300; ++i) {
    Term t = g.random_term(4, vars);
    NormalizeOutcome o = normalize(t, 200);
    if (o.status == NormalStatus::normal) {
      CHECK_FALSE(has_forward_redex(o.result));
    } else {
      CHECK(o.trace.steps.size() == 200);
    }
    // trace endpoints replay through the independent validator
    std::string why;
    CHECK(validate_trace(t, o.result, o.trace, &why));
    INFO(why);
  }
}

TEST_CASE("determinism of normalize across repeated runs") {
  Term omega_half = T("(x \\ (x {1} x))");
  Term omega = Term::scaled(omega_half, Scale::one(), omega_half);
  std::string first = normalize(omega, 100).trace.serialize();
  for (int i = 0; i < 3; ++i)
    CHECK(normalize(omega, 100).trace.serialize() == first);

  TermGen g(5);
  const std::vector<VarName> vars = {"x", "y"};
  for (int i = 0; i < 50; ++i) {
    Term t = g.random_term(4, vars);
    CHECK(normalize(t, 100).trace.serialize() ==
          normalize(t, 100).trace.serialize());
  }
}

TEST_CASE("trace serialization format") {
  NormalizeOutcome o = normalize(T("((x \\ (b {m} x)) {e} a)"), 10);
  CHECK(o.trace.serialize() ==
        "R2 forward @ / : ((x \\ (b {m} x)) {e} a) ==> (b {e*m} a)\n");
}

TEST_CASE("equiv proves the bridge example") {
  EquivVerdict v = equiv(T("(b {e} a)"), T("((y \\ (b {1} a)) {e} a)"), 500);
  CHECK(v.proved);
  std::string why;
  CHECK(validate_trace(T("(b {e} a)"), T("((y \\ (b {1} a)) {e} a)"), v.trace,
                       &why));
  INFO(why);
}

TEST_CASE("equiv short-circuits on alpha equality") {
  EquivVerdict v = equiv(T("(x \\ x)"), T("(y \\ y)"), 1);
  CHECK(v.proved);
  CHECK(v.trace.steps.empty());
}

TEST_CASE("equiv cannot connect a divergent term to a variable") {
  Term omega_half = T("(x \\ (x {1} x))");
  Term omega = Term::scaled(omega_half, Scale::one(), omega_half);
  EquivVerdict v = equiv(omega, T("z"), 200);
  CHECK_FALSE(v.proved);
}

TEST_CASE("equiv connects both orientations of each rule") {
  // lhs -> rhs (forward) and rhs -> lhs (needs a backward step)
  const char* pairs[][2] = {
      {"((x \\ (b {m} x)) {e} a)", "(b {e*m} a)"},
      {"((x \\ y) {e} y)", "y"},
      {"(x \\ (b {1} x))", "b"},
      {"((x \\ b) {1} a)", "b"},
  };
  for (auto& p : pairs) {
    CHECK(equiv(T(p[0]), T(p[1]), 500).proved);
    CHECK(equiv(T(p[1]), T(p[0]), 500).proved);
  }
}

TEST_CASE("proved traces survive the validator, corrupted ones do not") {
  Term a = T("(((x \\ (y \\ x)) {1} a) {1} b)");
  Term b = T("a");
  EquivVerdict v = equiv(a, b, 500);
  REQUIRE(v.proved);
  std::string why;
  REQUIRE(validate_trace(a, b, v.trace, &why));

  // corrupt the endpoint
  CHECK_FALSE(validate_trace(a, T("(a {e} b)"), v.trace, &why));
  // corrupt a step's rule tag
  REQUIRE(!v.trace.steps.empty());
  Trace bad = v.trace;
  bad.steps[0].rule =
      bad.steps[0].rule == Rule::ext2 ? Rule::ext1 : Rule::ext2;
  CHECK_FALSE(validate_trace(a, b, bad, &why));
  // corrupt an intermediate term
  Trace bad2 = v.trace;
  bad2.steps[0].after = T("q");
  CHECK_FALSE(validate_trace(a, b, bad2, &why));
}

TEST_CASE("equiv is a congruence on proved pairs") {
  TermGen g(17);
  const std::vector<VarName> vars = {"x", "y", "z"};
  int proved_pairs = 0;
  for (int i = 0; i < 40 && proved_pairs < 15; ++i) {
    Term t = g.random_term(3, vars);
    NormalizeOutcome o = normalize(t, 100);
    if (o.status != NormalStatus::normal || o.result == t) continue;
    ++proved_pairs;
    Term c = g.random_term(2, vars);
    Scale eps = g.random_scale({"e", "m"}, -2, 2);
    CHECK(equiv(Term::scaled(t, eps, c), Term::scaled(o.result, eps, c), 2000)
              .proved);
    CHECK(equiv(Term::scaled(c, eps, t), Term::scaled(c, eps, o.result), 2000)
              .proved);
    CHECK(equiv(Term::abs("q", t), Term::abs("q", o.result), 2000).proved);
  }
  CHECK(proved_pairs > 0);
}

TEST_CASE("beta* preserves convertibility in both directions") {
  // The rule system is not confluent: ((x \ (b {m} x)) {e} a) normalizes to
  // (b {e*m} a) by R2, while its beta* contractum ((x_1 \ (b {m} a)) {e} a)
  // is itself normal. The two normal forms must still be provably
  // convertible, which is what this property asserts.
  TermGen g(23);
  const std::vector<VarName> vars = {"x", "y", "z"};
  int tried = 0;
  for (int i = 0; i < 200 && tried < 25; ++i) {
    Term t = g.random_term(4, vars);
    // find a beta* redex position
    bool found = false;
    Position where = Position::root();
    for (const Position& p : all_positions(t)) {
      if (match_rule(Rule::beta_star, subterm_at(t, p))) {
        where = p;
        found = true;
        break;
      }
    }
    if (!found) continue;
    ++tried;
    Term stepped = apply_rule(Rule::beta_star, t, where);
    NormalizeOutcome a = normalize(t, 400);
    NormalizeOutcome b = normalize(stepped, 400);
    if (a.status == NormalStatus::normal && b.status == NormalStatus::normal) {
      INFO(print_term(a.result) << "  vs  " << print_term(b.result));
      CHECK(equiv(a.result, b.result, 4000).proved);
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("the R2/beta* critical pair joins through equivalence") {
  Term t = T("((x \\ (b {m} x)) {e} a)");
  Term by_r2 = normalize(t, 10).result;
  CHECK(by_r2 == T("(b {e*m} a)"));
  Term contractum = step_beta_star(t, k_root);
  NormalizeOutcome o = normalize(contractum, 10);
  CHECK(o.status == NormalStatus::normal);
  CHECK(o.result == contractum);  // already normal: a distinct normal form
  CHECK_FALSE(alpha_eq(by_r2, o.result));
  CHECK(equiv(by_r2, o.result, 2000).proved);
}

TEST_CASE("normal forms never contain a live beta* redex") {
  TermGen g(41);
  const std::vector<VarName> vars = {"x", "y"};
  for (int i = 0; i < 200; ++i) {
    NormalizeOutcome o = normalize(g.random_term(4, vars), 300);
    if (o.status != NormalStatus::normal) continue;
    for (const Position& p : all_positions(o.result)) {
      Term sub = subterm_at(o.result, p);
      if (sub.is_scaled() && sub.left().is_abs())
        CHECK_FALSE(sub.left().body().free_vars().contains(sub.left().binder()));
    }
  }
}
