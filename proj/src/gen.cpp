#include "lsc/gen.hpp"

namespace lsc {

Scale TermGen::random_scale(const std::vector<std::string>& gens, int min_exp,
                            int max_exp) {
  std::vector<std::pair<std::string, std::int64_t>> exps;
  for (const std::string& g : gens)
    exps.emplace_back(g, uniform(min_exp, max_exp));
  return Scale::from_exponents(exps);
}

Term TermGen::random_term(int max_depth, const std::vector<VarName>& vars) {
  if (max_depth <= 0) return Term::var(pick(vars));
  switch (uniform(0, 2)) {
    case 0:
      return Term::var(pick(vars));
    case 1:
      return Term::abs(pick(vars), random_term(max_depth - 1, vars));
    default:
      return Term::scaled(random_term(max_depth - 1, vars),
                          random_scale({"e", "m"}, -2, 2),
                          random_term(max_depth - 1, vars));
  }
}

Term TermGen::random_closed_term(int max_depth,
                                 const std::vector<VarName>& vars) {
  Term t = random_term(max_depth, vars);
  VarSet fv = t.free_vars();
  for (const VarName& v : fv) t = Term::abs(v, t);
  return t;
}

RelTerm TermGen::random_rel_term(int max_depth,
                                 const std::vector<VarName>& vars) {
  if (max_depth <= 0) return RelTerm::var(pick(vars));
  switch (uniform(0, 2)) {
    case 0:
      return RelTerm::var(pick(vars));
    case 1:
      return RelTerm::abs(pick(vars), random_rel_term(max_depth - 1, vars));
    default:
      return RelTerm::scaled(random_rel_term(max_depth - 1, vars),
                             random_scale({"e", "m"}, -2, 2),
                             random_rel_term(max_depth - 1, vars));
  }
}

}  // namespace lsc
