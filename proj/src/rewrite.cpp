#include "lsc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "lsc/errors.hpp"
#include "lsc/trace_check.hpp"

namespace lsc {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::beta_star: return "beta*";
    case Rule::r1: return "R1";
    case Rule::r2: return "R2";
    case Rule::ext1: return "ext1";
    case Rule::ext2: return "ext2";
  }
  return "?";
}

const char* direction_name(Direction d) {
  return d == Direction::forward ? "forward" : "backward";
}

const char* normal_status_name(NormalStatus s) {
  return s == NormalStatus::normal ? "normal" : "budget-exhausted";
}

std::string Trace::serialize() const {
  std::string out;
  for (const RewriteStep& s : steps) {
    out += rule_name(s.rule);
    out += ' ';
    out += direction_name(s.dir);
    out += " @ ";
    out += s.at.str();
    out += " : ";
    out += print_term(s.before);
    out += " ==> ";
    out += print_term(s.after);
    out += '\n';
  }
  return out;
}

namespace {

std::optional<Term> match_beta_star(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  const VarName& x = lam.binder();
  Term a = lam.body();
  Term b = s.right();
  // Vacuous redexes are left to ext2/R1; stepping them would only rename.
  if (!a.free_vars().contains(x)) return std::nullopt;
  Term sub = substitute(a, x, b);
  VarSet avoid = b.free_vars();
  avoid.insert(sub.free_vars().begin(), sub.free_vars().end());
  avoid.insert(x);
  return Term::scaled(Term::abs(fresh_var(avoid, x), sub), s.scale(), b);
}

std::optional<Term> match_r1(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  if (lam.body().free_vars().contains(lam.binder())) return std::nullopt;
  if (!alpha_eq(lam.body(), s.right())) return std::nullopt;
  return lam.body();
}

std::optional<Term> match_r2(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  Term inner = lam.body();
  if (!inner.is_scaled()) return std::nullopt;
  if (!inner.right().is_var() || inner.right().var_name() != lam.binder())
    return std::nullopt;
  if (inner.left().free_vars().contains(lam.binder())) return std::nullopt;
  return Term::scaled(inner.left(), s.scale().mul(inner.scale()), s.right());
}

std::optional<Term> match_ext1(const Term& s) {
  if (!s.is_abs()) return std::nullopt;
  Term inner = s.body();
  if (!inner.is_scaled() || !inner.scale().is_one()) return std::nullopt;
  if (!inner.right().is_var() || inner.right().var_name() != s.binder())
    return std::nullopt;
  if (inner.left().free_vars().contains(s.binder())) return std::nullopt;
  return inner.left();
}

std::optional<Term> match_ext2(const Term& s) {
  if (!s.is_scaled() || !s.scale().is_one() || !s.left().is_abs())
    return std::nullopt;
  Term lam = s.left();
  if (lam.body().free_vars().contains(lam.binder())) return std::nullopt;
  return lam.body();
}

// Shrinking rules first, the duplicating beta* last.
constexpr Rule k_priority[] = {Rule::ext2, Rule::r2, Rule::r1, Rule::ext1,
                               Rule::beta_star};

struct Redex {
  Position at;
  Rule rule;
  Term replacement;
};

bool find_redex_rec(const Term& t, std::vector<PathStep>& path,
                    std::optional<Redex>& out) {
  for (Rule r : k_priority) {
    if (std::optional<Term> m = match_rule(r, t)) {
      out.emplace(Redex{Position(path), r, std::move(*m)});
      return true;
    }
  }
  switch (t.kind()) {
    case Term::Kind::var:
      return false;
    case Term::Kind::abs: {
      path.push_back(PathStep::body);
      bool found = find_redex_rec(t.body(), path, out);
      path.pop_back();
      return found;
    }
    case Term::Kind::scaled: {
      path.push_back(PathStep::left);
      bool found = find_redex_rec(t.left(), path, out);
      path.pop_back();
      if (found) return true;
      path.push_back(PathStep::right);
      found = find_redex_rec(t.right(), path, out);
      path.pop_back();
      return found;
    }
  }
  return false;
}

std::optional<Redex> find_redex(const Term& t) {
  std::optional<Redex> out;
  std::vector<PathStep> path;
  find_redex_rec(t, path, out);
  return out;
}

}  // namespace

std::optional<Term> match_rule(Rule r, const Term& subterm) {
  switch (r) {
    case Rule::beta_star: return match_beta_star(subterm);
    case Rule::r1: return match_r1(subterm);
    case Rule::r2: return match_r2(subterm);
    case Rule::ext1: return match_ext1(subterm);
    case Rule::ext2: return match_ext2(subterm);
  }
  return std::nullopt;
}

Term apply_rule(Rule r, const Term& t, const Position& at) {
  Term sub = subterm_at(t, at);
  std::optional<Term> m = match_rule(r, sub);
  if (!m)
    throw Error(ErrorCode::rule_not_applicable,
                std::string(rule_name(r)) + " does not apply at " + at.str() +
                    " in " + print_term(t));
  return replace_at(t, at, *m);
}

Term step_beta_star(const Term& t, const Position& at) {
  return apply_rule(Rule::beta_star, t, at);
}
Term step_r1(const Term& t, const Position& at) {
  return apply_rule(Rule::r1, t, at);
}
Term step_r2(const Term& t, const Position& at) {
  return apply_rule(Rule::r2, t, at);
}
Term step_ext1(const Term& t, const Position& at) {
  return apply_rule(Rule::ext1, t, at);
}
Term step_ext2(const Term& t, const Position& at) {
  return apply_rule(Rule::ext2, t, at);
}

bool has_forward_redex(const Term& t) { return find_redex(t).has_value(); }

NormalizeOutcome normalize(const Term& t, long budget) {
  if (budget < 0)
    throw Error(ErrorCode::bad_argument, "budget must be nonnegative");
  Term cur = t;
  Trace trace;
  for (;;) {
    std::optional<Redex> red = find_redex(cur);
    if (!red) return {cur, std::move(trace), NormalStatus::normal};
    if (static_cast<long>(trace.steps.size()) >= budget)
      return {cur, std::move(trace), NormalStatus::budget_exhausted};
    Term next = replace_at(cur, red->at, red->replacement);
    trace.steps.push_back(
        {red->rule, Direction::forward, red->at, cur, next});
    cur = next;
  }
}

// ---------------------------------------------------------------------------
// Equivalence search.
// ---------------------------------------------------------------------------

namespace {

// Terms over this size are not worth keeping in the search: legitimate
// equivalences at desk scale stay far below it, and self-applying terms can
// otherwise eat the node budget with exponentially growing junk.
constexpr std::size_t k_search_size_cap = 1 << 14;
constexpr std::size_t k_simplify_size_cap = 1 << 16;
// How many single-occurrence beta* preimages to try per position.
constexpr std::size_t k_max_single_preimages = 4;

struct Succ {
  Term term;
  std::vector<RewriteStep> steps;  // whole-term steps leading there
};

std::vector<RewriteStep> flip_reverse(std::vector<RewriteStep> steps) {
  std::reverse(steps.begin(), steps.end());
  for (RewriteStep& s : steps) {
    std::swap(s.before, s.after);
    s.dir = s.dir == Direction::forward ? Direction::backward
                                        : Direction::forward;
  }
  return steps;
}

// The "compose" composite: (y \ (L {m} Q)) {e} Q'  ~~>  L {e*m} Q' when y is
// not free in the body and Q =α Q'. Not a rule of its own: it is recorded as
// a backward beta* (abstracting Q' out of the body as a fresh variable)
// followed by a forward R2. Collapses one dilation-conjugation shell.
struct ComposeParts {
  Term preimage_sub;
  Term final_sub;
};

std::optional<ComposeParts> match_compose(const Term& s) {
  if (!s.is_scaled() || !s.left().is_abs()) return std::nullopt;
  Term lam = s.left();
  Term body = lam.body();
  if (!body.is_scaled()) return std::nullopt;
  if (body.free_vars().contains(lam.binder())) return std::nullopt;
  if (!alpha_eq(body.right(), s.right())) return std::nullopt;
  VarName x = fresh_var(all_vars(s), "x");
  Term preimage = Term::scaled(
      Term::abs(x, Term::scaled(body.left(), body.scale(), Term::var(x))),
      s.scale(), s.right());
  Term final_sub =
      Term::scaled(body.left(), s.scale().mul(body.scale()), s.right());
  return ComposeParts{std::move(preimage), std::move(final_sub)};
}

// One deterministic simplification step: leftmost-outermost position,
// shrinking rules, then the compose composite, then beta*.
std::optional<Succ> extended_step_rec(const Term& whole, const Term& t,
                                      std::vector<PathStep>& path) {
  for (Rule r : {Rule::ext2, Rule::r2, Rule::r1, Rule::ext1}) {
    if (std::optional<Term> m = match_rule(r, t)) {
      Position at{path};
      Term next = replace_at(whole, at, *m);
      return Succ{next, {{r, Direction::forward, at, whole, next}}};
    }
  }
  if (std::optional<ComposeParts> c = match_compose(t)) {
    Position at{path};
    Term mid = replace_at(whole, at, c->preimage_sub);
    Term next = replace_at(whole, at, c->final_sub);
    return Succ{next,
                {{Rule::beta_star, Direction::backward, at, whole, mid},
                 {Rule::r2, Direction::forward, at, mid, next}}};
  }
  if (std::optional<Term> m = match_beta_star(t)) {
    Position at{path};
    Term next = replace_at(whole, at, *m);
    return Succ{next,
                {{Rule::beta_star, Direction::forward, at, whole, next}}};
  }
  switch (t.kind()) {
    case Term::Kind::var:
      return std::nullopt;
    case Term::Kind::abs: {
      path.push_back(PathStep::body);
      std::optional<Succ> r = extended_step_rec(whole, t.body(), path);
      path.pop_back();
      return r;
    }
    case Term::Kind::scaled: {
      path.push_back(PathStep::left);
      std::optional<Succ> r = extended_step_rec(whole, t.left(), path);
      path.pop_back();
      if (r) return r;
      path.push_back(PathStep::right);
      r = extended_step_rec(whole, t.right(), path);
      path.pop_back();
      return r;
    }
  }
  return std::nullopt;
}

// Greedy reduction by extended steps; stops at a fixed point, the step
// budget, or runaway growth.
std::pair<Term, std::vector<RewriteStep>> extended_simplify(Term cur,
                                                            long max_steps) {
  std::vector<RewriteStep> steps;
  while (static_cast<long>(steps.size()) < max_steps &&
         cur.node_count() <= k_simplify_size_cap) {
    std::vector<PathStep> path;
    std::optional<Succ> s = extended_step_rec(cur, cur, path);
    if (!s) break;
    steps.insert(steps.end(), s->steps.begin(), s->steps.end());
    cur = s->term;
  }
  return {std::move(cur), std::move(steps)};
}

// All positions of t in preorder, paired with their subterms.
void positions_rec(const Term& t, std::vector<PathStep>& path,
                   std::vector<std::pair<Position, Term>>& out) {
  out.emplace_back(Position(path), t);
  switch (t.kind()) {
    case Term::Kind::var:
      return;
    case Term::Kind::abs:
      path.push_back(PathStep::body);
      positions_rec(t.body(), path, out);
      path.pop_back();
      return;
    case Term::Kind::scaled:
      path.push_back(PathStep::left);
      positions_rec(t.left(), path, out);
      path.pop_back();
      path.push_back(PathStep::right);
      positions_rec(t.right(), path, out);
      path.pop_back();
      return;
  }
}

std::vector<std::pair<Position, Term>> positions_of(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  std::vector<PathStep> path;
  positions_rec(t, path, out);
  return out;
}

// Positions q inside c whose subterm is alpha-equal to target. Matches cannot
// nest (a term is never alpha-equal to its own proper subterm), so they are
// pairwise disjoint.
std::vector<Position> occurrences_of(const Term& c, const Term& target) {
  std::vector<Position> out;
  for (auto& [pos, sub] : positions_of(c))
    if (sub.node_count() == target.node_count() && alpha_eq(sub, target))
      out.push_back(pos);
  return out;
}

// Backward beta* candidates at one subterm s = (y \ C) {e} B with y not free
// in C: abstract occurrences of B inside C by a fresh variable x, keeping
// only candidates whose substitution round-trip really recovers C (this
// rejects occurrences whose free variables are captured inside C).
void beta_star_preimages(const Term& whole, const Position& at, const Term& s,
                         std::vector<Succ>& out) {
  if (!s.is_scaled() || !s.left().is_abs()) return;
  Term lam = s.left();
  Term c = lam.body();
  Term b = s.right();
  if (c.free_vars().contains(lam.binder())) return;
  std::vector<Position> occ = occurrences_of(c, b);
  if (occ.empty()) return;
  VarSet avoid = all_vars(s);
  VarName x = fresh_var(avoid, "x");
  Term xvar = Term::var(x);

  std::vector<std::vector<Position>> choices;
  std::size_t singles = std::min(occ.size(), k_max_single_preimages);
  for (std::size_t i = 0; i < singles; ++i)
    choices.push_back({occ[i]});
  if (occ.size() > 1) choices.push_back(occ);  // abstract all occurrences

  for (const auto& subset : choices) {
    Term a = c;
    for (const Position& q : subset) a = replace_at(a, q, xvar);
    if (!alpha_eq(substitute(a, x, b), c)) continue;
    Term preimage = Term::scaled(Term::abs(x, a), s.scale(), b);
    Term next = replace_at(whole, at, preimage);
    out.push_back(
        {next, {{Rule::beta_star, Direction::backward, Position(at), whole,
                 next}}});
  }
}

// Every successor of one term for the bidirectional search: forward rules and
// the compose composite at every position, plus backward beta* preimages.
std::vector<Succ> successors(const Term& whole) {
  std::vector<Succ> out;
  for (auto& [at, sub] : positions_of(whole)) {
    for (Rule r : k_priority) {
      if (std::optional<Term> m = match_rule(r, sub)) {
        Term next = replace_at(whole, at, *m);
        out.push_back({next, {{r, Direction::forward, at, whole, next}}});
      }
    }
    if (std::optional<ComposeParts> c = match_compose(sub)) {
      Term mid = replace_at(whole, at, c->preimage_sub);
      Term next = replace_at(whole, at, c->final_sub);
      out.push_back({next,
                     {{Rule::beta_star, Direction::backward, at, whole, mid},
                      {Rule::r2, Direction::forward, at, mid, next}}});
    }
    beta_star_preimages(whole, at, sub, out);
  }
  return out;
}

struct SearchNode {
  Term term;
  int parent;                      // -1 for the side's origin
  std::vector<RewriteStep> steps;  // from parent to this node
};

struct SearchSide {
  std::vector<SearchNode> nodes;
  std::map<std::string, int> visited;  // alpha_key -> node index
  std::deque<int> frontier;

  // Returns the node index for this term, adding it if new and capacity
  // remains; -1 when over budget or over the size cap.
  int add(const std::string& key, Term t, int parent,
          std::vector<RewriteStep> steps, long budget) {
    auto it = visited.find(key);
    if (it != visited.end()) return it->second;
    if (static_cast<long>(visited.size()) >= budget) return -1;
    if (t.node_count() > k_search_size_cap) return -1;
    int idx = static_cast<int>(nodes.size());
    nodes.push_back({std::move(t), parent, std::move(steps)});
    visited.emplace(key, idx);
    frontier.push_back(idx);
    return idx;
  }

  std::vector<RewriteStep> path_to(int idx) const {
    std::vector<const std::vector<RewriteStep>*> segs;
    for (int i = idx; i >= 0; i = nodes[i].parent) segs.push_back(&nodes[i].steps);
    std::vector<RewriteStep> out;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
      out.insert(out.end(), (*it)->begin(), (*it)->end());
    return out;
  }
};

EquivVerdict proved_verdict(const Term& a, const Term& b,
                            std::vector<RewriteStep> steps, long used) {
  Trace trace{std::move(steps)};
  std::string why;
  if (!validate_trace(a, b, trace, &why))
    throw Error(ErrorCode::internal,
                "equivalence trace failed validation: " + why);
  return {true, std::move(trace), used};
}

}  // namespace

EquivVerdict equiv(const Term& a, const Term& b, long budget) {
  if (budget < 0)
    throw Error(ErrorCode::bad_argument, "budget must be nonnegative");
  if (alpha_eq(a, b)) return proved_verdict(a, b, {}, 0);
  if (budget == 0) return {false, {}, 0};

  long step_budget = std::min(budget, default_normalize_budget);

  // Deterministic chain for one side: forward normalization (kept only when
  // it terminates), then the greedy extended simplification.
  auto build_chain = [&](const Term& start) {
    std::vector<RewriteStep> steps;
    Term end = start;
    NormalizeOutcome n = normalize(start, step_budget);
    if (n.status == NormalStatus::normal) {
      steps = std::move(n.trace.steps);
      end = n.result;
    }
    auto [g, more] = extended_simplify(end, step_budget);
    steps.insert(steps.end(), more.begin(), more.end());
    return std::make_pair(std::move(g), std::move(steps));
  };

  auto [enda, chain_a] = build_chain(a);
  auto [endb, chain_b] = build_chain(b);
  (void)enda;
  (void)endb;

  SearchSide sa, sb;
  auto seed = [&](SearchSide& side, const Term& origin,
                  const std::vector<RewriteStep>& chain) {
    int last = side.add(alpha_key(origin), origin, -1, {}, budget);
    for (const RewriteStep& s : chain) {
      if (last < 0) break;
      last = side.add(alpha_key(s.after), s.after, last, {s}, budget);
    }
  };
  seed(sa, a, chain_a);
  seed(sb, b, chain_b);

  auto used = [&]() {
    return static_cast<long>(sa.visited.size() + sb.visited.size());
  };

  // The chains themselves may already meet (including at their endpoints).
  for (const auto& [key, bi] : sb.visited) {
    auto it = sa.visited.find(key);
    if (it == sa.visited.end()) continue;
    std::vector<RewriteStep> steps = sa.path_to(it->second);
    std::vector<RewriteStep> back = flip_reverse(sb.path_to(bi));
    steps.insert(steps.end(), back.begin(), back.end());
    return proved_verdict(a, b, std::move(steps), used());
  }

  // Bidirectional search, expanding the smaller side first.
  while (!sa.frontier.empty() || !sb.frontier.empty()) {
    bool expand_a =
        !sa.frontier.empty() &&
        (sb.frontier.empty() || sa.visited.size() <= sb.visited.size());
    SearchSide& own = expand_a ? sa : sb;
    SearchSide& other = expand_a ? sb : sa;
    int node = own.frontier.front();
    own.frontier.pop_front();
    Term cur = own.nodes[node].term;
    for (Succ& s : successors(cur)) {
      std::string key = alpha_key(s.term);
      auto hit = other.visited.find(key);
      if (hit != other.visited.end()) {
        std::vector<RewriteStep> own_path = own.path_to(node);
        own_path.insert(own_path.end(), s.steps.begin(), s.steps.end());
        std::vector<RewriteStep> other_path = other.path_to(hit->second);
        std::vector<RewriteStep> total;
        if (expand_a) {
          total = std::move(own_path);
          std::vector<RewriteStep> back = flip_reverse(std::move(other_path));
          total.insert(total.end(), back.begin(), back.end());
        } else {
          total = std::move(other_path);
          std::vector<RewriteStep> back = flip_reverse(std::move(own_path));
          total.insert(total.end(), back.begin(), back.end());
        }
        return proved_verdict(a, b, std::move(total), used());
      }
      own.add(key, std::move(s.term), node, std::move(s.steps), budget);
    }
  }
  return {false, {}, used()};
}

}  // namespace lsc
