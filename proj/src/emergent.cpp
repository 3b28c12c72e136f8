#include "lsc/emergent.hpp"

#include "lsc/errors.hpp"

namespace lsc {

Term dilation(const Term& base, const Scale& eps, const Term& arg) {
  VarSet avoid = arg.free_vars();
  avoid.insert(base.free_vars().begin(), base.free_vars().end());
  VarName y = fresh_var(avoid, "y");
  return Term::scaled(Term::abs(y, arg), eps, base);
}

Term bullet(const Term& base, const Scale& eps, const Term& arg) {
  return dilation(base, eps.inverse(), arg);
}

Term app(const Term& a, const Term& b) {
  return Term::scaled(a, Scale::one(), b);
}

std::string CheckReport::line() const {
  return axiom + (proved ? " proved" : " unknown") +
         " budget=" + std::to_string(budget_used);
}

namespace {

CheckReport check_pair(const std::string& axiom, const std::string& instance,
                       const Term& lhs, const Term& rhs, long budget) {
  CheckReport r;
  r.axiom = axiom;
  r.instance = instance;
  EquivVerdict v = equiv(lhs, rhs, budget);
  r.proved = v.proved;
  r.budget_used = v.budget_used;
  if (v.proved) r.proofs.push_back({lhs, rhs, std::move(v.trace)});
  return r;
}

// Fold a second equivalence into an existing report: proved only if both are.
void check_also(CheckReport& r, const Term& lhs, const Term& rhs, long budget) {
  EquivVerdict v = equiv(lhs, rhs, budget);
  r.proved = r.proved && v.proved;
  r.budget_used += v.budget_used;
  if (v.proved) r.proofs.push_back({lhs, rhs, std::move(v.trace)});
}

}  // namespace

std::vector<CheckReport> check_irq_axioms(const Term& a, const Term& b,
                                          const Scale& eps, const Scale& mu,
                                          long budget) {
  std::string inst = "A=" + print_term(a) + " B=" + print_term(b) +
                     " e=" + eps.str() + " m=" + mu.str();
  std::vector<CheckReport> out;
  out.push_back(check_pair("idem", inst, dilation(a, eps, a), a, budget));

  CheckReport inv = check_pair(
      "inv", inst, dilation(a, eps, dilation(a, eps.inverse(), b)), b, budget);
  check_also(inv, dilation(a, eps.inverse(), dilation(a, eps, b)), b, budget);
  out.push_back(std::move(inv));

  out.push_back(
      check_pair("unit", inst, dilation(a, Scale::one(), b), b, budget));
  out.push_back(check_pair("compose", inst,
                           dilation(a, eps, dilation(a, mu, b)),
                           dilation(a, eps.mul(mu), b), budget));
  return out;
}

CheckReport prop1_instance(const Term& a, const Term& b, const Scale& eps,
                           long budget) {
  std::string inst =
      "A=" + print_term(a) + " B=" + print_term(b) + " e=" + eps.str();
  return check_pair("pro1", inst, Term::scaled(b, eps, a),
                    dilation(a, eps, app(b, a)), budget);
}

CheckReport prop2_instance(const Term& a, const Term& b, const Scale& eps,
                           long budget) {
  std::string inst =
      "A=" + print_term(a) + " B=" + print_term(b) + " e=" + eps.str();
  VarSet avoid = a.free_vars();
  avoid.insert(b.free_vars().begin(), b.free_vars().end());
  VarName x = fresh_var(avoid, "x");
  Term lhs = app(b, a);
  Term mid = Term::scaled(
      Term::abs(x, Term::scaled(b, eps.inverse(), Term::var(x))), eps, a);
  Term rhs =
      Term::scaled(Term::abs(x, Term::scaled(b, eps.inverse(), a)), eps, a);
  CheckReport r = check_pair("pro2", inst, lhs, mid, budget);
  check_also(r, mid, rhs, budget);
  return r;
}

bool is_t1_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      return true;
    case Term::Kind::abs:
      return is_t1_term(t.body());
    case Term::Kind::scaled:
      return t.scale().is_one() && is_t1_term(t.left()) &&
             is_t1_term(t.right());
  }
  return false;
}

CheckReport check_t1_agreement(const Term& t, long budget) {
  if (!is_t1_term(t))
    throw Error(ErrorCode::not_t1_term,
                "term carries non-neutral scales: " + print_term(t));
  CheckReport r;
  r.axiom = "t1-agreement";
  r.instance = print_term(t);
  NormalizeOutcome engine = normalize(t, budget);
  NormalizeOutcome oracle = lambda_oracle_normalize(t, budget);
  r.budget_used = static_cast<long>(engine.trace.steps.size());
  r.proved = engine.status == NormalStatus::normal &&
             oracle.status == NormalStatus::normal &&
             alpha_eq(engine.result, oracle.result);
  if (r.proved) r.proofs.push_back({t, engine.result, std::move(engine.trace)});
  return r;
}

namespace combinators {

namespace {
Term v(const char* n) { return Term::var(n); }
}  // namespace

Term identity() { return Term::abs("x", v("x")); }

Term k() { return Term::abs("x", Term::abs("y", v("x"))); }

// B = \f g x. f (g x)
Term b() {
  return Term::abs(
      "f", Term::abs("g", Term::abs("x", app(v("f"), app(v("g"), v("x"))))));
}

// C = \f x y. (f y) x
Term c() {
  return Term::abs(
      "f", Term::abs("x", Term::abs("y", app(app(v("f"), v("y")), v("x")))));
}

Term church(int n) {
  if (n < 0) throw Error(ErrorCode::bad_argument, "negative Church numeral");
  Term body = v("z");
  for (int i = 0; i < n; ++i) body = app(v("s"), body);
  return Term::abs("s", Term::abs("z", body));
}

// plus = \m n s z. (m s) ((n s) z)
Term church_plus() {
  Term body = app(app(v("m"), v("s")), app(app(v("n"), v("s")), v("z")));
  return Term::abs("m",
                   Term::abs("n", Term::abs("s", Term::abs("z", body))));
}

// times = \m n s. m (n s)
Term church_times() {
  Term body = app(v("m"), app(v("n"), v("s")));
  return Term::abs("m", Term::abs("n", Term::abs("s", body)));
}

}  // namespace combinators

std::vector<std::pair<std::string, Term>> lambda_corpus() {
  using namespace combinators;
  Term a = Term::var("a");
  Term bb = Term::var("b");
  Term cc = Term::var("c");
  // Applied S-shape with a free argument slot: the closed three-binder S is
  // intentionally not part of the corpus.
  Term s_shape = Term::abs(
      "x", Term::abs("y", app(app(Term::var("x"), Term::var("z")),
                              app(Term::var("y"), Term::var("z")))));
  std::vector<std::pair<std::string, Term>> out;
  out.emplace_back("I", identity());
  out.emplace_back("I_a", app(identity(), a));
  out.emplace_back("K", k());
  out.emplace_back("K_a_b", app(app(k(), a), bb));
  out.emplace_back("S_applied", app(app(s_shape, a), bb));
  out.emplace_back("B_f_g_x", app(app(app(b(), a), bb), cc));
  out.emplace_back("C_f_x_y", app(app(app(c(), a), bb), cc));
  for (int n = 0; n <= 5; ++n)
    out.emplace_back("church_" + std::to_string(n), church(n));
  out.emplace_back("plus_2_3", app(app(church_plus(), church(2)), church(3)));
  out.emplace_back("times_2_3",
                   app(app(church_times(), church(2)), church(3)));
  return out;
}

}  // namespace lsc
