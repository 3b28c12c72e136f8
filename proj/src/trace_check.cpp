#include "lsc/trace_check.hpp"

#include <optional>

#include "lsc/errors.hpp"

namespace lsc {

namespace {

// The rules below are transcribed directly from their definitions on purpose:
// the validator must not share the engine's matcher code, so a defect has to
// be introduced twice before a bad trace slips through.

// (x \ A) {e} B --> (y \ A[x := B]) {e} B with y outside FV(B) and
// FV(A[x := B]). Any admissible y is fine here; comparison is modulo alpha.
std::optional<Term> replay_beta_star(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  Term a = lam.body();
  Term b = s.right();
  Term sub = substitute(a, lam.binder(), b);
  VarSet avoid = b.free_vars();
  avoid.insert(sub.free_vars().begin(), sub.free_vars().end());
  avoid.insert(lam.binder());
  return Term::scaled(Term::abs(fresh_var(avoid, lam.binder()), sub), s.scale(),
                      b);
}

// (x \ A) {e} A' --> A with x not free in A and A alpha-equal to A'.
std::optional<Term> replay_r1(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  if (lam.body().free_vars().contains(lam.binder())) return std::nullopt;
  if (!alpha_eq(lam.body(), s.right())) return std::nullopt;
  return lam.body();
}

// (x \ (B {m} x)) {e} A --> B {e*m} A with x not free in B.
std::optional<Term> replay_r2(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  Term inner = lam.body();
  if (!inner.is_scaled()) return std::nullopt;
  if (!inner.right().is_var() || inner.right().var_name() != lam.binder())
    return std::nullopt;
  if (inner.left().free_vars().contains(lam.binder())) return std::nullopt;
  return Term::scaled(inner.left(), s.scale().mul(inner.scale()), s.right());
}

// x \ (B {1} x) --> B with x not free in B.
std::optional<Term> replay_ext1(const Term& s) {
  if (!s.is_abs()) return std::nullopt;
  Term inner = s.body();
  if (!inner.is_scaled() || !inner.scale().is_one()) return std::nullopt;
  if (!inner.right().is_var() || inner.right().var_name() != s.binder())
    return std::nullopt;
  if (inner.left().free_vars().contains(s.binder())) return std::nullopt;
  return inner.left();
}

// (x \ B) {1} A --> B with x not free in B.
std::optional<Term> replay_ext2(const Term& s) {
  if (!s.is_scaled() || !s.scale().is_one() || !s.left().is_abs())
    return std::nullopt;
  Term lam = s.left();
  if (lam.body().free_vars().contains(lam.binder())) return std::nullopt;
  return lam.body();
}

std::optional<Term> replay_rule(Rule r, const Term& s) {
  switch (r) {
    case Rule::beta_star: return replay_beta_star(s);
    case Rule::r1: return replay_r1(s);
    case Rule::r2: return replay_r2(s);
    case Rule::ext1: return replay_ext1(s);
    case Rule::ext2: return replay_ext2(s);
  }
  return std::nullopt;
}

}  // namespace

bool validate_trace(const Term& from, const Term& to, const Trace& trace,
                    std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (trace.steps.empty()) {
    if (alpha_eq(from, to)) return true;
    return fail("empty trace but endpoints differ");
  }
  if (!alpha_eq(from, trace.steps.front().before))
    return fail("trace does not start at the left endpoint");
  if (!alpha_eq(trace.steps.back().after, to))
    return fail("trace does not end at the right endpoint");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RewriteStep& s = trace.steps[i];
    std::string here = "step " + std::to_string(i + 1);
    if (i > 0 && !alpha_eq(trace.steps[i - 1].after, s.before))
      return fail(here + ": does not continue from the previous step");
    // A backward step asserts after --rule--> before.
    const Term& src = s.dir == Direction::forward ? s.before : s.after;
    const Term& dst = s.dir == Direction::forward ? s.after : s.before;
    std::optional<Term> sub;
    try {
      sub = subterm_at(src, s.at);
    } catch (const Error&) {
      return fail(here + ": position " + s.at.str() + " does not exist");
    }
    std::optional<Term> res = replay_rule(s.rule, *sub);
    if (!res)
      return fail(here + ": " + std::string(rule_name(s.rule)) +
                  " does not apply at " + s.at.str());
    if (!alpha_eq(replace_at(src, s.at, *res), dst))
      return fail(here + ": rewrite result does not match the recorded term");
  }
  return true;
}

}  // namespace lsc
