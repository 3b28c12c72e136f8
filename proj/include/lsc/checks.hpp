#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsc/emergent.hpp"
#include "lsc/relative.hpp"

namespace lsc {

// A batch of instance checks, one report per checked instance. serialize()
// yields one line per report in order, newline-terminated.
struct CheckBatchResult {
  std::vector<CheckReport> reports;

  bool all_proved() const;
  long total_budget_used() const;
  std::string serialize() const;
};

// Dilation laws (idem/inv/unit/compose) on `count` generated instances:
// random terms over variables a, b, c and random coefficients over the
// generators e, m with exponents in [-2, 2].
CheckBatchResult run_irq_checks(std::uint64_t seed, int count, int depth,
                                long budget);

// Engine-versus-classical-oracle agreement over the combinator corpus.
CheckBatchResult run_lambda_checks(long budget);

// The two bridge properties (scaled pairing as based dilation, application
// as a dilation pair) on `count` generated instances each.
CheckBatchResult run_prop_checks(std::uint64_t seed, int count, int depth,
                                 long budget);

// Relative-calculus suite for one observation context: substitution
// commutes with translation (prelsub), the one-abstraction shortcut form
// (psimply), and the five rewrite-rule families transported through
// translation. `count` instances per family.
CheckBatchResult run_relative_checks(const RelContext& ctx, std::uint64_t seed,
                                     int count, int depth, long budget);

}  // namespace lsc
