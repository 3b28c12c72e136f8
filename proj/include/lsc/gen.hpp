#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lsc/relative.hpp"
#include "lsc/term.hpp"

namespace lsc {

// Seeded random structure generator for the property suites. Uses
// mt19937_64 with explicit modulo mapping so a given seed yields the same
// stream on every platform (uniform_int_distribution would not).
class TermGen {
public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }

  // Inclusive range; requires lo <= hi.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() %
                                 (static_cast<std::uint64_t>(hi - lo) + 1));
  }

  const VarName& pick(const std::vector<VarName>& pool) {
    return pool[next() % pool.size()];
  }

  // Independent exponent per generator in [min_exp, max_exp]; zeros drop out,
  // so the neutral element shows up naturally.
  Scale random_scale(const std::vector<std::string>& gens, int min_exp,
                     int max_exp);

  Term random_term(int max_depth, const std::vector<VarName>& vars);

  // Same distribution, then every free variable is abstracted over (sorted
  // order), yielding a closed term.
  Term random_closed_term(int max_depth, const std::vector<VarName>& vars);

  RelTerm random_rel_term(int max_depth, const std::vector<VarName>& vars);

private:
  std::mt19937_64 rng_;
};

}  // namespace lsc
