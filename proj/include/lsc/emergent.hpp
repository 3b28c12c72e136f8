#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsc/rewrite.hpp"
#include "lsc/term.hpp"

namespace lsc {

// Dilation of arg with coefficient eps based at base:
//
//   dilation(B, e, A) = (y \ A) {e} B,  y fresh for FV(A) and FV(B)
//
// bullet is the same operation with the inverse coefficient; app is scaled
// pairing with the neutral element (ordinary application).
Term dilation(const Term& base, const Scale& eps, const Term& arg);
Term bullet(const Term& base, const Scale& eps, const Term& arg);
Term app(const Term& a, const Term& b);

// One proved equivalence: endpoints plus the rewrite chain between them, kept
// so an auditor can replay the proof through the trace validator.
struct ProofEvidence {
  Term lhs;
  Term rhs;
  Trace trace;
};

// Outcome of checking one axiom/property on one concrete instance. An axiom
// may assert more than one equivalence (e.g. the two-sided inverse law);
// "proved" means all of them were.
struct CheckReport {
  std::string axiom;
  std::string instance;
  bool proved = false;
  long budget_used = 0;
  std::vector<ProofEvidence> proofs;

  // "<axiom> <proved|unknown> budget=<n>"
  std::string line() const;
};

// The four dilation laws at one instance (A = base point, B = argument):
//   idem     A o_e A = A
//   inv      A o_e (A o_e^-1 B) = B   and   A o_e^-1 (A o_e B) = B
//   unit     A o_1 B = B
//   compose  A o_e (A o_m B) = A o_em B
// Returns one report per law, in that order.
std::vector<CheckReport> check_irq_axioms(const Term& a, const Term& b,
                                          const Scale& eps, const Scale& mu,
                                          long budget);

// B {e} A  =  A o_e (B A)
CheckReport prop1_instance(const Term& a, const Term& b, const Scale& eps,
                           long budget);

// B A  =  (x \ (B {e^-1} x)) {e} A  =  (x \ (B {e^-1} A)) {e} A, x fresh
CheckReport prop2_instance(const Term& a, const Term& b, const Scale& eps,
                           long budget);

// True when every scaled node in t carries the neutral scale; such terms are
// plain lambda-calculus terms with application written Scaled(-, 1, -).
bool is_t1_term(const Term& t);

// Classical normal-order beta/eta reduction of a neutral-scale term, written
// as an independent check against the rewrite engine. Throws not_t1_term.
NormalizeOutcome lambda_oracle_normalize(const Term& t,
                                         long budget = default_normalize_budget);

// Reduces t with both the rewrite engine and the classical oracle and reports
// whether both terminate with alpha-equal normal forms.
CheckReport check_t1_agreement(const Term& t, long budget);

// Small closed-combinator corpus (with applied forms) used by the agreement
// suite: identity, K, applied S-shape, composition/flip combinators, Church
// numerals and their arithmetic.
namespace combinators {
Term identity();
Term k();
Term b();
Term c();
Term church(int n);
Term church_plus();
Term church_times();
}  // namespace combinators

std::vector<std::pair<std::string, Term>> lambda_corpus();

}  // namespace lsc
