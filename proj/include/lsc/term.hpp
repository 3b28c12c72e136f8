#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lsc/scale.hpp"

namespace lsc {

using VarName = std::string;
using VarSet = std::set<VarName>;

// Immutable term of the scaled lambda calculus:
//
//   t ::= Var(x) | Abs(x, body) | Scaled(left, scale, right)
//
// Abs(x, B) prints "(x \ B)"; Scaled(A, s, B) prints "(A {s} B)". A scaled
// node with the neutral scale is ordinary application. Nodes are shared
// (persistent tree); every node caches its free-variable set and size so the
// rewrite engine can test side conditions cheaply.
class Term {
public:
  enum class Kind { var, abs, scaled };

  static Term var(VarName name);
  static Term abs(VarName binder, Term body);
  static Term scaled(Term left, Scale scale, Term right);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::var; }
  bool is_abs() const { return kind() == Kind::abs; }
  bool is_scaled() const { return kind() == Kind::scaled; }

  const VarName& var_name() const;  // Kind::var
  const VarName& binder() const;    // Kind::abs
  Term body() const;                // Kind::abs
  Term left() const;                // Kind::scaled
  const Scale& scale() const;       // Kind::scaled
  Term right() const;               // Kind::scaled

  const VarSet& free_vars() const;
  std::size_t node_count() const;

  // Structural equality, variable names compared verbatim.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Same underlying node (cheap; implies ==).
  bool same_node(const Term& other) const { return node_ == other.node_; }

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Every variable name occurring in the term, bound or free, binders included.
VarSet all_vars(const Term& t);

inline const VarSet& free_vars(const Term& t) { return t.free_vars(); }

bool alpha_eq(const Term& a, const Term& b);

// Canonical serialization modulo alpha: alpha_key(a) == alpha_key(b) iff
// alpha_eq(a, b). Used as a search-set key by the equivalence prover.
std::string alpha_key(const Term& t);

// First name of hint, hint_1, hint_2, ... not in avoid.
VarName fresh_var(const VarSet& avoid, const VarName& hint);

// Capture-avoiding substitution a[v := b]. Returns a itself (same nodes)
// when v is not free in a; renames binders with fresh_var on capture.
Term substitute(const Term& a, const VarName& v, const Term& b);

// Canonical fully parenthesized text; parse_term inverts it exactly.
std::string print_term(const Term& t);

// One step down the tree: Left/Right descend a scaled node's operands, Body
// descends an abstraction body. Binder leaves are not addressable.
enum class PathStep : std::uint8_t { left, right, body };

class Position {
public:
  Position() = default;
  explicit Position(std::vector<PathStep> path) : path_(std::move(path)) {}

  static Position root() { return Position(); }

  bool is_root() const { return path_.empty(); }
  const std::vector<PathStep>& path() const { return path_; }
  Position child(PathStep s) const;

  // "/" for the root, else "/"-joined steps: "/L/B", "/R", ...
  std::string str() const;
  static Position parse(const std::string& text);

  bool operator==(const Position&) const = default;

private:
  std::vector<PathStep> path_;
};

Term subterm_at(const Term& t, const Position& pos);   // throws position_invalid
Term replace_at(const Term& t, const Position& pos, const Term& replacement);

// Every position of t in preorder (root first, left/body before right).
std::vector<Position> all_positions(const Term& t);

}  // namespace lsc
