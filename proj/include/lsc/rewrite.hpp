#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsc/term.hpp"

namespace lsc {

// The five rewrite rules, oriented left-to-right:
//
//   beta*  (x \ A) {e} B   -->  (y \ A[x := B]) {e} B,   y fresh, x free in A
//   R1     (x \ A) {e} A'  -->  A                        x not free in A, A =α A'
//   R2     (x \ (B {m} x)) {e} A  -->  B {e*m} A         x not free in B
//   ext1   (x \ (B {1} x))  -->  B                       x not free in B
//   ext2   (x \ B) {1} A    -->  B                       x not free in B
//
// beta* deliberately requires x free in A: the vacuous case is already
// covered by ext2/R1 and stepping it would only rename the binder.
enum class Rule { beta_star, r1, r2, ext1, ext2 };

enum class Direction { forward, backward };

const char* rule_name(Rule r);            // "beta*", "R1", "R2", "ext1", "ext2"
const char* direction_name(Direction d);  // "forward", "backward"

struct RewriteStep {
  Rule rule;
  Direction dir;
  Position at;
  Term before;  // whole term before the step
  Term after;   // whole term after the step
};

struct Trace {
  std::vector<RewriteStep> steps;

  // One line per step:
  //   <rule> <direction> @ <position> : <before> ==> <after>
  std::string serialize() const;
};

// Nullopt when the rule's pattern or side conditions fail at this subterm;
// otherwise the rewritten subterm. Deterministic (fresh names included).
std::optional<Term> match_rule(Rule r, const Term& subterm);

// Apply one rule at one position; throws position_invalid or
// rule_not_applicable.
Term step_beta_star(const Term& t, const Position& at);
Term step_r1(const Term& t, const Position& at);
Term step_r2(const Term& t, const Position& at);
Term step_ext1(const Term& t, const Position& at);
Term step_ext2(const Term& t, const Position& at);
Term apply_rule(Rule r, const Term& t, const Position& at);

enum class NormalStatus { normal, budget_exhausted };
const char* normal_status_name(NormalStatus s);

struct NormalizeOutcome {
  Term result;
  Trace trace;
  NormalStatus status;
};

inline constexpr long default_normalize_budget = 1000;
inline constexpr long default_equiv_budget = 5000;

// Forward-only reduction: repeatedly rewrite the leftmost-outermost position
// where any rule applies, preferring ext2 > R2 > R1 > ext1 > beta* at that
// position (the shrinking rules before the growing one). Deterministic;
// budget counts steps.
NormalizeOutcome normalize(const Term& t, long budget = default_normalize_budget);

// True when some rule applies somewhere in t (i.e. t is not a normal form).
bool has_forward_redex(const Term& t);

struct EquivVerdict {
  bool proved = false;
  Trace trace;           // rewrite chain from lhs to rhs when proved
  long budget_used = 0;  // distinct terms explored (both sides)
};

// Semi-decision procedure for the congruence generated by the rules:
// normalizes both sides, then runs a greedy extended simplification, then a
// bidirectional search over forward steps, beta* preimages and a conjugation-
// collapsing composite. "proved" verdicts carry a replayed, validated trace;
// a false result only means "not found within budget". The budget caps the
// number of alpha-distinct terms kept per side.
EquivVerdict equiv(const Term& a, const Term& b,
                   long budget = default_equiv_budget);

}  // namespace lsc
