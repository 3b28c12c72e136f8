#include "lsc/checks.hpp"

#include "lsc/gen.hpp"

namespace lsc {

bool CheckBatchResult::all_proved() const {
  for (const CheckReport& r : reports)
    if (!r.proved) return false;
  return true;
}

long CheckBatchResult::total_budget_used() const {
  long total = 0;
  for (const CheckReport& r : reports) total += r.budget_used;
  return total;
}

std::string CheckBatchResult::serialize() const {
  std::string out;
  for (const CheckReport& r : reports) {
    out += r.line();
    out += '\n';
  }
  return out;
}

CheckBatchResult run_irq_checks(std::uint64_t seed, int count, int depth,
                                long budget) {
  TermGen g(seed);
  const std::vector<VarName> vars = {"a", "b", "c"};
  const std::vector<std::string> gens = {"e", "m"};
  CheckBatchResult batch;
  for (int i = 0; i < count; ++i) {
    Term a = g.random_term(depth, vars);
    Term b = g.random_term(depth, vars);
    Scale eps = g.random_scale(gens, -2, 2);
    Scale mu = g.random_scale(gens, -2, 2);
    std::vector<CheckReport> rs = check_irq_axioms(a, b, eps, mu, budget);
    for (CheckReport& r : rs) batch.reports.push_back(std::move(r));
  }
  return batch;
}

CheckBatchResult run_lambda_checks(long budget) {
  CheckBatchResult batch;
  for (const auto& [name, term] : lambda_corpus()) {
    CheckReport r = check_t1_agreement(term, budget);
    r.axiom = "t1_" + name;
    batch.reports.push_back(std::move(r));
  }
  return batch;
}

CheckBatchResult run_prop_checks(std::uint64_t seed, int count, int depth,
                                 long budget) {
  TermGen g(seed);
  const std::vector<VarName> vars = {"a", "b", "c"};
  const std::vector<std::string> gens = {"e", "m"};
  CheckBatchResult batch;
  for (int i = 0; i < count; ++i) {
    Term a = g.random_term(depth, vars);
    Term b = g.random_term(depth, vars);
    Scale eps = g.random_scale(gens, -2, 2);
    batch.reports.push_back(prop1_instance(a, b, eps, budget));
    batch.reports.push_back(prop2_instance(a, b, eps, budget));
  }
  return batch;
}

CheckBatchResult run_relative_checks(const RelContext& ctx, std::uint64_t seed,
                                     int count, int depth, long budget) {
  TermGen g(seed);
  CheckBatchResult batch;

  // Relative variables must stay clear of the base's free variables.
  std::vector<VarName> pool;
  {
    VarSet taken = ctx.base.free_vars();
    for (const char* c : {"u", "v", "w", "p", "q"})
      if (!taken.contains(c)) pool.emplace_back(c);
    while (pool.size() < 3) {
      VarName f = fresh_var(taken, "u");
      taken.insert(f);
      pool.push_back(std::move(f));
    }
  }

  for (int i = 0; i < count; ++i) {
    RelTerm b = g.random_rel_term(depth, pool);
    VarName v = g.pick(pool);
    RelTerm c = g.random_rel_term(depth, pool);
    batch.reports.push_back(check_prelsub(ctx, b, v, c, budget));
  }

  for (int i = 0; i < count; ++i) {
    VarName u = g.pick(pool);
    RelTerm body = g.random_rel_term(depth, pool);
    CheckReport r;
    r.axiom = "psimply";
    r.instance = "u=" + u + " body=" + print_rel_term(body);
    Term full = translate(ctx, RelTerm::abs(u, body));
    Term shortcut = translate_simplified(ctx, u, body);
    EquivVerdict vd = equiv(full, shortcut, budget);
    r.proved = vd.proved;
    r.budget_used = vd.budget_used;
    if (vd.proved) r.proofs.push_back({full, shortcut, std::move(vd.trace)});
    batch.reports.push_back(std::move(r));
  }

  std::vector<CheckReport> rules =
      check_scaled_calculus(ctx, seed, count, budget, depth);
  for (CheckReport& r : rules) batch.reports.push_back(std::move(r));

  return batch;
}

}  // namespace lsc
