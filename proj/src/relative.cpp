#include "lsc/relative.hpp"

#include "lsc/errors.hpp"
#include "lsc/gen.hpp"
#include "lsc/parse.hpp"

namespace lsc {

struct RelTerm::Node {
  Kind kind;
  VarName name;
  std::shared_ptr<const Node> child0;
  std::shared_ptr<const Node> child1;
  Scale scale;
};

RelTerm RelTerm::var(VarName name) {
  Term::var(name);  // borrow the name validation
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->name = std::move(name);
  return RelTerm(std::move(n));
}

RelTerm RelTerm::abs(VarName binder, RelTerm body) {
  Term::var(binder);
  auto n = std::make_shared<Node>();
  n->kind = Kind::abs;
  n->name = std::move(binder);
  n->child0 = std::move(body.node_);
  return RelTerm(std::move(n));
}

RelTerm RelTerm::scaled(RelTerm left, Scale scale, RelTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::scaled;
  n->scale = std::move(scale);
  n->child0 = std::move(left.node_);
  n->child1 = std::move(right.node_);
  return RelTerm(std::move(n));
}

RelTerm::Kind RelTerm::kind() const { return node_->kind; }

const VarName& RelTerm::var_name() const {
  if (!is_var()) throw Error(ErrorCode::bad_argument, "not a variable");
  return node_->name;
}

const VarName& RelTerm::binder() const {
  if (!is_abs()) throw Error(ErrorCode::bad_argument, "not an abstraction");
  return node_->name;
}

RelTerm RelTerm::body() const {
  if (!is_abs()) throw Error(ErrorCode::bad_argument, "not an abstraction");
  return RelTerm(node_->child0);
}

RelTerm RelTerm::left() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return RelTerm(node_->child0);
}

const Scale& RelTerm::scale() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return node_->scale;
}

RelTerm RelTerm::right() const {
  if (!is_scaled()) throw Error(ErrorCode::bad_argument, "not a scaled node");
  return RelTerm(node_->child1);
}

bool RelTerm::operator==(const RelTerm& other) const {
  return erase_rel(*this) == erase_rel(other);
}

Term erase_rel(const RelTerm& t) {
  switch (t.kind()) {
    case RelTerm::Kind::var:
      return Term::var(t.var_name());
    case RelTerm::Kind::abs:
      return Term::abs(t.binder(), erase_rel(t.body()));
    case RelTerm::Kind::scaled:
      return Term::scaled(erase_rel(t.left()), t.scale(),
                          erase_rel(t.right()));
  }
  throw Error(ErrorCode::internal, "unreachable rel term kind");
}

RelTerm rel_from_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      return RelTerm::var(t.var_name());
    case Term::Kind::abs:
      return RelTerm::abs(t.binder(), rel_from_term(t.body()));
    case Term::Kind::scaled:
      return RelTerm::scaled(rel_from_term(t.left()), t.scale(),
                             rel_from_term(t.right()));
  }
  throw Error(ErrorCode::internal, "unreachable term kind");
}

VarSet rel_free_vars(const RelTerm& t) { return free_vars(erase_rel(t)); }

VarSet rel_all_vars(const RelTerm& t) { return all_vars(erase_rel(t)); }

bool rel_alpha_eq(const RelTerm& a, const RelTerm& b) {
  return alpha_eq(erase_rel(a), erase_rel(b));
}

std::string print_rel_term(const RelTerm& t) {
  return print_term(erase_rel(t));
}

RelTerm parse_rel_term(std::string_view src) {
  return rel_from_term(parse_term(src));
}

namespace {

void check_rel_vars(const RelContext& ctx, const RelTerm& t) {
  for (const VarName& v : rel_all_vars(t))
    if (ctx.base.free_vars().contains(v))
      throw Error(ErrorCode::variable_clash,
                  "relative variable '" + v +
                      "' collides with a free variable of the base " +
                      print_term(ctx.base));
}

Term tr(const RelContext& ctx, const RelTerm& t) {
  switch (t.kind()) {
    case RelTerm::Kind::var:
      return Term::var(t.var_name());
    case RelTerm::Kind::scaled: {
      Term db = dilation(ctx.base, ctx.scale, tr(ctx, t.left()));
      Term dc = dilation(ctx.base, ctx.scale, tr(ctx, t.right()));
      return dilation(ctx.base, ctx.scale.inverse(),
                      Term::scaled(db, t.scale(), dc));
    }
    case RelTerm::Kind::abs: {
      Term deb = dilation(ctx.base, ctx.scale, tr(ctx, t.body()));
      Term inner = Term::abs(t.binder(), deb);
      VarSet avoid = all_vars(ctx.base);
      VarSet inner_vars = all_vars(inner);
      avoid.insert(inner_vars.begin(), inner_vars.end());
      VarName z = fresh_var(avoid, "z");
      Term dz = dilation(ctx.base, ctx.scale.inverse(), Term::var(z));
      return dilation(ctx.base, ctx.scale.inverse(),
                      Term::abs(z, Term::scaled(inner, Scale::one(), dz)));
    }
  }
  throw Error(ErrorCode::internal, "unreachable rel term kind");
}

}  // namespace

Term translate(const RelContext& ctx, const RelTerm& t) {
  check_rel_vars(ctx, t);
  return tr(ctx, t);
}

Term translate_simplified(const RelContext& ctx, const VarName& u,
                          const RelTerm& body) {
  check_rel_vars(ctx, RelTerm::abs(u, body));
  Term teb = tr(ctx, body);
  VarSet avoid = all_vars(ctx.base);
  VarSet teb_vars = all_vars(teb);
  avoid.insert(teb_vars.begin(), teb_vars.end());
  avoid.insert(u);
  VarName z = fresh_var(avoid, "z");
  Term dz = dilation(ctx.base, ctx.scale.inverse(), Term::var(z));
  Term inner = dilation(ctx.base, ctx.scale, substitute(teb, u, dz));
  return dilation(ctx.base, ctx.scale.inverse(), Term::abs(z, inner));
}

namespace {

RelTerm rsub(const RelTerm& b, const VarName& v, const RelTerm& c,
             const VarSet& base_fv) {
  if (!rel_free_vars(b).contains(v)) return b;
  switch (b.kind()) {
    case RelTerm::Kind::var:
      return c;  // must be v
    case RelTerm::Kind::scaled:
      return RelTerm::scaled(rsub(b.left(), v, c, base_fv), b.scale(),
                             rsub(b.right(), v, c, base_fv));
    case RelTerm::Kind::abs: {
      const VarName& w = b.binder();
      RelTerm body = b.body();
      VarSet cfv = rel_free_vars(c);
      if (cfv.contains(w)) {
        VarSet avoid = cfv;
        VarSet bfv = rel_free_vars(body);
        avoid.insert(bfv.begin(), bfv.end());
        avoid.insert(v);
        avoid.insert(base_fv.begin(), base_fv.end());
        VarName w2 = fresh_var(avoid, w);
        return RelTerm::abs(
            w2, rsub(rsub(body, w, RelTerm::var(w2), base_fv), v, c, base_fv));
      }
      return RelTerm::abs(w, rsub(body, v, c, base_fv));
    }
  }
  throw Error(ErrorCode::internal, "unreachable rel term kind");
}

}  // namespace

RelTerm rel_substitute(const RelContext& ctx, const RelTerm& b,
                       const VarName& v, const RelTerm& c) {
  check_rel_vars(ctx, b);
  check_rel_vars(ctx, c);
  if (ctx.base.free_vars().contains(v))
    throw Error(ErrorCode::variable_clash,
                "substituted variable '" + v +
                    "' collides with a free variable of the base");
  return rsub(b, v, c, ctx.base.free_vars());
}

EquivVerdict rel_equiv(const RelContext& ctx, const RelTerm& a,
                       const RelTerm& b, long budget) {
  return equiv(translate(ctx, a), translate(ctx, b), budget);
}

CheckReport check_prelsub(const RelContext& ctx, const RelTerm& b,
                          const VarName& v, const RelTerm& c, long budget) {
  CheckReport r;
  r.axiom = "prelsub";
  r.instance = "b=" + print_rel_term(b) + " v=" + v +
               " c=" + print_rel_term(c);
  Term lhs = translate(ctx, rel_substitute(ctx, b, v, c));
  Term rhs = substitute(translate(ctx, b), v, translate(ctx, c));
  EquivVerdict vd = equiv(lhs, rhs, budget);
  r.proved = vd.proved;
  r.budget_used = vd.budget_used;
  if (vd.proved) r.proofs.push_back({lhs, rhs, std::move(vd.trace)});
  return r;
}

namespace {

// Relative variable names usable under this context (clash-free with the
// base's free variables).
std::vector<VarName> rel_var_pool(const RelContext& ctx) {
  std::vector<VarName> pool;
  VarSet taken = ctx.base.free_vars();
  for (const char* c : {"u", "v", "w", "p", "q"}) {
    if (!taken.contains(c)) pool.emplace_back(c);
  }
  while (pool.size() < 3) {
    VarName f = fresh_var(taken, "u");
    taken.insert(f);
    pool.push_back(std::move(f));
  }
  return pool;
}

CheckReport rel_check_pair(const RelContext& ctx, const std::string& label,
                           const RelTerm& lhs, const RelTerm& rhs,
                           long budget) {
  CheckReport r;
  r.axiom = label;
  r.instance = print_rel_term(lhs) + " ~ " + print_rel_term(rhs);
  Term tl = translate(ctx, lhs);
  Term trr = translate(ctx, rhs);
  EquivVerdict v = equiv(tl, trr, budget);
  r.proved = v.proved;
  r.budget_used = v.budget_used;
  if (v.proved) r.proofs.push_back({tl, trr, std::move(v.trace)});
  return r;
}

// Fresh relative binder that keeps the instance well-formed in ctx.
VarName fresh_rel(const RelContext& ctx, const VarSet& extra,
                  const VarName& hint) {
  VarSet avoid = ctx.base.free_vars();
  avoid.insert(extra.begin(), extra.end());
  return fresh_var(avoid, hint);
}

}  // namespace

std::vector<CheckReport> check_scaled_calculus(const RelContext& ctx,
                                               std::uint64_t seed, int count,
                                               long budget, int depth) {
  TermGen g(seed);
  std::vector<VarName> pool = rel_var_pool(ctx);
  std::vector<CheckReport> out;

  // (beta*)  (x \ C) {m} B  ~  (y \ C[x := B]) {m} B, x free in C, y fresh
  for (int i = 0; i < count; ++i) {
    VarName x = g.pick(pool);
    RelTerm c = g.random_rel_term(depth, pool);
    if (!rel_free_vars(c).contains(x))
      c = RelTerm::scaled(c, g.random_scale({"e", "m"}, -2, 2),
                          RelTerm::var(x));
    RelTerm b = g.random_rel_term(depth, pool);
    Scale m = g.random_scale({"e", "m"}, -2, 2);
    RelTerm sub = rel_substitute(ctx, c, x, b);
    VarSet extra = rel_all_vars(sub);
    VarSet bv = rel_all_vars(b);
    extra.insert(bv.begin(), bv.end());
    VarName y = fresh_rel(ctx, extra, "y");
    out.push_back(rel_check_pair(ctx, "rel_beta*",
                                 RelTerm::scaled(RelTerm::abs(x, c), m, b),
                                 RelTerm::scaled(RelTerm::abs(y, sub), m, b),
                                 budget));
  }

  // (R1)  (x \ B) {m} B  ~  B, x not free in B
  for (int i = 0; i < count; ++i) {
    RelTerm b = g.random_rel_term(depth, pool);
    VarName x = fresh_rel(ctx, rel_free_vars(b), g.pick(pool));
    Scale m = g.random_scale({"e", "m"}, -2, 2);
    out.push_back(rel_check_pair(
        ctx, "rel_R1", RelTerm::scaled(RelTerm::abs(x, b), m, b), b, budget));
  }

  // (R2)  (x \ (B {m} x)) {n} A  ~  B {n*m} A, x not free in B
  for (int i = 0; i < count; ++i) {
    RelTerm b = g.random_rel_term(depth, pool);
    RelTerm a = g.random_rel_term(depth, pool);
    VarName x = fresh_rel(ctx, rel_free_vars(b), g.pick(pool));
    Scale m = g.random_scale({"e", "m"}, -2, 2);
    Scale n = g.random_scale({"e", "m"}, -2, 2);
    RelTerm lhs = RelTerm::scaled(
        RelTerm::abs(x, RelTerm::scaled(b, m, RelTerm::var(x))), n, a);
    out.push_back(rel_check_pair(ctx, "rel_R2", lhs,
                                 RelTerm::scaled(b, n.mul(m), a), budget));
  }

  // (ext1)  x \ (B {1} x)  ~  B, x not free in B
  for (int i = 0; i < count; ++i) {
    RelTerm b = g.random_rel_term(depth, pool);
    VarName x = fresh_rel(ctx, rel_free_vars(b), g.pick(pool));
    RelTerm lhs =
        RelTerm::abs(x, RelTerm::scaled(b, Scale::one(), RelTerm::var(x)));
    out.push_back(rel_check_pair(ctx, "rel_ext1", lhs, b, budget));
  }

  // (ext2)  (x \ B) {1} C  ~  B, x not free in B
  for (int i = 0; i < count; ++i) {
    RelTerm b = g.random_rel_term(depth, pool);
    RelTerm c = g.random_rel_term(depth, pool);
    VarName x = fresh_rel(ctx, rel_free_vars(b), g.pick(pool));
    RelTerm lhs = RelTerm::scaled(RelTerm::abs(x, b), Scale::one(), c);
    out.push_back(rel_check_pair(ctx, "rel_ext2", lhs, b, budget));
  }

  return out;
}

}  // namespace lsc
