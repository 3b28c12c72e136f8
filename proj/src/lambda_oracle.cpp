#include "lsc/emergent.hpp"
#include "lsc/errors.hpp"

namespace lsc {

// Classical normal-order reduction for neutral-scale terms, used as the
// ground truth the rewrite engine is compared against. It only shares the
// term representation and substitute() with the engine; redex search and the
// reduction rules are its own.
namespace {

// Leftmost-outermost beta or eta redex. Preorder: a node is considered
// before its children, left operand before right.
std::optional<Term> oracle_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      return std::nullopt;
    case Term::Kind::scaled: {
      // beta: (\x. M) N  -->  M[x := N]
      if (t.left().is_abs()) {
        Term lam = t.left();
        return substitute(lam.body(), lam.binder(), t.right());
      }
      if (std::optional<Term> l = oracle_step(t.left()))
        return Term::scaled(*l, t.scale(), t.right());
      if (std::optional<Term> r = oracle_step(t.right()))
        return Term::scaled(t.left(), t.scale(), *r);
      return std::nullopt;
    }
    case Term::Kind::abs: {
      // eta: \x. (M x)  -->  M when x is not free in M
      Term body = t.body();
      if (body.is_scaled() && body.right().is_var() &&
          body.right().var_name() == t.binder() &&
          !body.left().free_vars().contains(t.binder()))
        return body.left();
      if (std::optional<Term> b = oracle_step(body))
        return Term::abs(t.binder(), *b);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizeOutcome lambda_oracle_normalize(const Term& t, long budget) {
  if (budget < 0)
    throw Error(ErrorCode::bad_argument, "budget must be nonnegative");
  if (!is_t1_term(t))
    throw Error(ErrorCode::not_t1_term,
                "term carries non-neutral scales: " + print_term(t));
  Term cur = t;
  for (long i = 0;; ++i) {
    std::optional<Term> next = oracle_step(cur);
    if (!next) return {cur, {}, NormalStatus::normal};
    if (i >= budget) return {cur, {}, NormalStatus::budget_exhausted};
    cur = *next;
  }
}

}  // namespace lsc
