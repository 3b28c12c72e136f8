#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lsc/emergent.hpp"
#include "lsc/term.hpp"

namespace lsc {

// Term of the calculus relative to an observation context (base point A and
// coefficient e). Structurally identical to Term but kept as a distinct type:
// relative terms are meaningful only through their translation.
class RelTerm {
public:
  enum class Kind { var, abs, scaled };

  static RelTerm var(VarName name);
  static RelTerm abs(VarName binder, RelTerm body);
  static RelTerm scaled(RelTerm left, Scale scale, RelTerm right);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::var; }
  bool is_abs() const { return kind() == Kind::abs; }
  bool is_scaled() const { return kind() == Kind::scaled; }

  const VarName& var_name() const;
  const VarName& binder() const;
  RelTerm body() const;
  RelTerm left() const;
  const Scale& scale() const;
  RelTerm right() const;

  bool operator==(const RelTerm& other) const;
  bool operator!=(const RelTerm& other) const { return !(*this == other); }

private:
  struct Node;
  explicit RelTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct RelContext {
  Term base;
  Scale scale;
};

VarSet rel_free_vars(const RelTerm& t);
VarSet rel_all_vars(const RelTerm& t);
bool rel_alpha_eq(const RelTerm& a, const RelTerm& b);
std::string print_rel_term(const RelTerm& t);

// Same surface grammar as ordinary terms.
RelTerm parse_rel_term(std::string_view src);

// Structural embeddings between the two term types (no context involved).
RelTerm rel_from_term(const Term& t);
Term erase_rel(const RelTerm& t);

// Translation of a relative term into the plain calculus, clause by clause:
//
//   E[u]        = u
//   E[B {m} C]  = A o_e^-1 ( (A o_e E[B]) {m} (A o_e E[C]) )
//   E[u \ B]    = A o_e^-1 ( z \ ( (u \ (A o_e E[B])) {1} (A o_e^-1 z) ) )
//
// with (A, e) the context and z fresh. Every variable of the relative term,
// bound or free, must avoid the free variables of the base; violations throw
// variable_clash.
Term translate(const RelContext& ctx, const RelTerm& t);

// Shortcut translation of an abstraction (u \ body):
//   A o_e^-1 ( z \ (A o_e (E[body][u := A o_e^-1 z])) )
// Provably equivalent to translate(ctx, RelTerm::abs(u, body)).
Term translate_simplified(const RelContext& ctx, const VarName& u,
                          const RelTerm& body);

// Capture-avoiding substitution on relative terms; renames avoid the base's
// free variables so results stay translatable in the same context.
RelTerm rel_substitute(const RelContext& ctx, const RelTerm& b,
                       const VarName& v, const RelTerm& c);

// Substitution commutes with translation (up to the rewrite congruence):
// translate(b[v := c]) versus translate(b)[v := translate(c)].
CheckReport check_prelsub(const RelContext& ctx, const RelTerm& b,
                          const VarName& v, const RelTerm& c, long budget);

// Equivalence of relative terms: equivalence of their translations.
EquivVerdict rel_equiv(const RelContext& ctx, const RelTerm& a,
                       const RelTerm& b, long budget);

// Random instances of the five rewrite rules, stated relatively and proved
// through translation; count instances per rule family, labeled rel_beta*,
// rel_R1, rel_R2, rel_ext1, rel_ext2.
std::vector<CheckReport> check_scaled_calculus(const RelContext& ctx,
                                               std::uint64_t seed, int count,
                                               long budget, int depth = 3);

}  // namespace lsc
