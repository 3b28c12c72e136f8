#include "lsc/term.hpp"

#include <algorithm>
#include <cctype>

#include "lsc/errors.hpp"

namespace lsc {

struct Term::Node {
  Kind kind;
  VarName name;                        // var name / abs binder
  std::shared_ptr<const Node> child0;  // abs body / scaled left
  std::shared_ptr<const Node> child1;  // scaled right
  Scale scale;                         // scaled only
  VarSet fv;
  std::size_t size = 1;
};

namespace {

// Words that the surface grammar claims for itself; a variable with one of
// these names would not survive a print -> parse round trip.
bool reserved_word(const VarName& name) { return name == "dil"; }

void check_var_name(const VarName& name) {
  bool ok =
      !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
  if (ok)
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ok = false;
  if (!ok || reserved_word(name))
    throw Error(ErrorCode::bad_argument,
                "invalid variable name '" + name + "'");
}

}  // namespace

Term Term::var(VarName name) {
  check_var_name(name);
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->fv.insert(name);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::abs(VarName binder, Term body) {
  check_var_name(binder);
  auto n = std::make_shared<Node>();
  n->kind = Kind::abs;
  n->fv = body.node_->fv;
  n->fv.erase(binder);
  n->name = std::move(binder);
  n->size = 1 + body.node_->size;
  n->child0 = std::move(body.node_);
  return Term(std::move(n));
}

Term Term::scaled(Term left, Scale scale, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::scaled;
  n->scale = std::move(scale);
  n->fv = left.node_->fv;
  n->fv.insert(right.node_->fv.begin(), right.node_->fv.end());
  n->size = 1 + left.node_->size + right.node_->size;
  n->child0 = std::move(left.node_);
  n->child1 = std::move(right.node_);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const VarName& Term::var_name() const {
  if (!is_var()) throw Error(ErrorCode::bad_argument, "not a variable");
  return node_->name;
}

const VarName& Term::binder() const {
  if (!is_abs()) throw Error(ErrorCode::bad_argument, "not an abstraction");
  return node_->name;
}

Term Term::body() const {
  if (!is_abs()) throw Error(ErrorCode::bad_argument, "not an abstraction");
  return Term(node_->child0);
}

Term Term::left() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return Term(node_->child0);
}

const Scale& Term::scale() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return node_->scale;
}

Term Term::right() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return Term(node_->child1);
}

const VarSet& Term::free_vars() const { return node_->fv; }

std::size_t Term::node_count() const { return node_->size; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->size != other.node_->size) return false;
  switch (node_->kind) {
    case Kind::var:
      return node_->name == other.node_->name;
    case Kind::abs:
      return node_->name == other.node_->name &&
             Term(node_->child0) == Term(other.node_->child0);
    case Kind::scaled:
      return node_->scale == other.node_->scale &&
             Term(node_->child0) == Term(other.node_->child0) &&
             Term(node_->child1) == Term(other.node_->child1);
  }
  return false;
}

namespace {

void all_vars_rec(const Term& t, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::var:
      out.insert(t.var_name());
      return;
    case Term::Kind::abs:
      out.insert(t.binder());
      all_vars_rec(t.body(), out);
      return;
    case Term::Kind::scaled:
      all_vars_rec(t.left(), out);
      all_vars_rec(t.right(), out);
      return;
  }
}

// Stack of binder pairs from the matching abstractions enclosing the current
// position; innermost last.
bool alpha_eq_rec(const Term& a, const Term& b,
                  std::vector<std::pair<VarName, VarName>>& binders) {
  if (a.same_node(b) && binders.empty()) return true;
  if (a.kind() != b.kind()) return false;
  if (a.node_count() != b.node_count()) return false;
  switch (a.kind()) {
    case Term::Kind::var: {
      const VarName& na = a.var_name();
      const VarName& nb = b.var_name();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        bool hit_a = it->first == na;
        bool hit_b = it->second == nb;
        if (hit_a || hit_b) return hit_a && hit_b;
      }
      return na == nb;  // both free
    }
    case Term::Kind::abs: {
      binders.emplace_back(a.binder(), b.binder());
      bool ok = alpha_eq_rec(a.body(), b.body(), binders);
      binders.pop_back();
      return ok;
    }
    case Term::Kind::scaled:
      return a.scale() == b.scale() &&
             alpha_eq_rec(a.left(), b.left(), binders) &&
             alpha_eq_rec(a.right(), b.right(), binders);
  }
  return false;
}

void alpha_key_rec(const Term& t, std::string& out,
                   std::vector<std::pair<VarName, int>>& binders,
                   int& counter) {
  switch (t.kind()) {
    case Term::Kind::var: {
      const VarName& n = t.var_name();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        if (it->first == n) {
          out += '#';
          out += std::to_string(it->second);
          return;
        }
      }
      out += n;
      return;
    }
    case Term::Kind::abs: {
      int id = counter++;
      out += "(\\";
      out += std::to_string(id);
      out += ' ';
      binders.emplace_back(t.binder(), id);
      alpha_key_rec(t.body(), out, binders, counter);
      binders.pop_back();
      out += ')';
      return;
    }
    case Term::Kind::scaled:
      out += '(';
      alpha_key_rec(t.left(), out, binders, counter);
      out += '{';
      out += t.scale().str();
      out += '}';
      alpha_key_rec(t.right(), out, binders, counter);
      out += ')';
      return;
  }
}

}  // namespace

VarSet all_vars(const Term& t) {
  VarSet out;
  all_vars_rec(t, out);
  return out;
}

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<std::pair<VarName, VarName>> binders;
  return alpha_eq_rec(a, b, binders);
}

std::string alpha_key(const Term& t) {
  std::string out;
  std::vector<std::pair<VarName, int>> binders;
  int counter = 0;
  alpha_key_rec(t, out, binders, counter);
  return out;
}

VarName fresh_var(const VarSet& avoid, const VarName& hint) {
  if (!avoid.contains(hint)) return hint;
  for (unsigned long long i = 1;; ++i) {
    VarName candidate = hint + "_" + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

Term substitute(const Term& a, const VarName& v, const Term& b) {
  if (!a.free_vars().contains(v)) return a;
  switch (a.kind()) {
    case Term::Kind::var:
      return b;  // must be v: it is free in a
    case Term::Kind::scaled:
      return Term::scaled(substitute(a.left(), v, b), a.scale(),
                          substitute(a.right(), v, b));
    case Term::Kind::abs: {
      // v is free in the body and the binder differs from v, else the
      // free-variable guard above would have returned.
      const VarName& x = a.binder();
      Term body = a.body();
      if (b.free_vars().contains(x)) {
        VarSet avoid = b.free_vars();
        avoid.insert(body.free_vars().begin(), body.free_vars().end());
        avoid.insert(v);
        VarName y = fresh_var(avoid, x);
        return Term::abs(y, substitute(substitute(body, x, Term::var(y)), v, b));
      }
      return Term::abs(x, substitute(body, v, b));
    }
  }
  throw Error(ErrorCode::internal, "unreachable term kind");
}

namespace {

void print_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::var:
      out += t.var_name();
      return;
    case Term::Kind::abs:
      out += '(';
      out += t.binder();
      out += " \\ ";
      print_rec(t.body(), out);
      out += ')';
      return;
    case Term::Kind::scaled:
      out += '(';
      print_rec(t.left(), out);
      out += " {";
      out += t.scale().str();
      out += "} ";
      print_rec(t.right(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

Position Position::child(PathStep s) const {
  std::vector<PathStep> p = path_;
  p.push_back(s);
  return Position(std::move(p));
}

std::string Position::str() const {
  if (path_.empty()) return "/";
  std::string out;
  for (PathStep s : path_) {
    out += '/';
    switch (s) {
      case PathStep::left: out += 'L'; break;
      case PathStep::right: out += 'R'; break;
      case PathStep::body: out += 'B'; break;
    }
  }
  return out;
}

Position Position::parse(const std::string& text) {
  if (text == "/") return Position();
  std::vector<PathStep> path;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '/' || i + 1 >= text.size())
      throw Error(ErrorCode::bad_argument, "invalid position '" + text + "'");
    switch (text[i + 1]) {
      case 'L': path.push_back(PathStep::left); break;
      case 'R': path.push_back(PathStep::right); break;
      case 'B': path.push_back(PathStep::body); break;
      default:
        throw Error(ErrorCode::bad_argument, "invalid position '" + text + "'");
    }
    i += 2;
  }
  if (path.empty())
    throw Error(ErrorCode::bad_argument, "invalid position '" + text + "'");
  return Position(std::move(path));
}

Term subterm_at(const Term& t, const Position& pos) {
  Term cur = t;
  for (PathStep s : pos.path()) {
    switch (s) {
      case PathStep::left:
        if (!cur.is_scaled())
          throw Error(ErrorCode::position_invalid,
                      "position " + pos.str() + " does not exist");
        cur = cur.left();
        break;
      case PathStep::right:
        if (!cur.is_scaled())
          throw Error(ErrorCode::position_invalid,
                      "position " + pos.str() + " does not exist");
        cur = cur.right();
        break;
      case PathStep::body:
        if (!cur.is_abs())
          throw Error(ErrorCode::position_invalid,
                      "position " + pos.str() + " does not exist");
        cur = cur.body();
        break;
    }
  }
  return cur;
}

namespace {

Term replace_rec(const Term& t, const std::vector<PathStep>& path,
                 std::size_t i, const Term& replacement, const Position& pos) {
  if (i == path.size()) return replacement;
  switch (path[i]) {
    case PathStep::left:
      if (!t.is_scaled()) break;
      return Term::scaled(replace_rec(t.left(), path, i + 1, replacement, pos),
                          t.scale(), t.right());
    case PathStep::right:
      if (!t.is_scaled()) break;
      return Term::scaled(t.left(), t.scale(),
                          replace_rec(t.right(), path, i + 1, replacement, pos));
    case PathStep::body:
      if (!t.is_abs()) break;
      return Term::abs(t.binder(),
                       replace_rec(t.body(), path, i + 1, replacement, pos));
  }
  throw Error(ErrorCode::position_invalid,
              "position " + pos.str() + " does not exist");
}

}  // namespace

Term replace_at(const Term& t, const Position& pos, const Term& replacement) {
  return replace_rec(t, pos.path(), 0, replacement, pos);
}

namespace {

void collect_positions(const Term& t, std::vector<PathStep>& path,
                       std::vector<Position>& out) {
  out.emplace_back(path);
  switch (t.kind()) {
    case Term::Kind::var:
      return;
    case Term::Kind::abs:
      path.push_back(PathStep::body);
      collect_positions(t.body(), path, out);
      path.pop_back();
      return;
    case Term::Kind::scaled:
      path.push_back(PathStep::left);
      collect_positions(t.left(), path, out);
      path.pop_back();
      path.push_back(PathStep::right);
      collect_positions(t.right(), path, out);
      path.pop_back();
      return;
  }
}

}  // namespace

std::vector<Position> all_positions(const Term& t) {
  std::vector<Position> out;
  std::vector<PathStep> path;
  collect_positions(t, path, out);
  return out;
}

}  // namespace lsc
