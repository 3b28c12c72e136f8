#include "lambdascale.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "lsc/checks.hpp"
#include "lsc/dot.hpp"
#include "lsc/emergent.hpp"
#include "lsc/errors.hpp"
#include "lsc/parse.hpp"
#include "lsc/relative.hpp"
#include "lsc/rewrite.hpp"
#include "lsc/term.hpp"

struct lsc_term {
  lsc::Term value;
};

namespace {

thread_local std::string g_last_error;

lsc_status status_of(lsc::ErrorCode code) {
  switch (code) {
    case lsc::ErrorCode::syntax_error: return LSC_ERR_SYNTAX;
    case lsc::ErrorCode::unbalanced_parens: return LSC_ERR_UNBALANCED;
    case lsc::ErrorCode::bad_scale_literal: return LSC_ERR_BAD_SCALE;
    case lsc::ErrorCode::position_invalid: return LSC_ERR_POSITION;
    case lsc::ErrorCode::rule_not_applicable: return LSC_ERR_RULE;
    case lsc::ErrorCode::variable_clash: return LSC_ERR_VARIABLE_CLASH;
    case lsc::ErrorCode::not_t1_term: return LSC_ERR_NOT_T1;
    case lsc::ErrorCode::overflow: return LSC_ERR_OVERFLOW;
    case lsc::ErrorCode::bad_argument: return LSC_ERR_BAD_ARGUMENT;
    case lsc::ErrorCode::internal: return LSC_ERR_INTERNAL;
  }
  return LSC_ERR_INTERNAL;
}

lsc_status fail(lsc_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Runs body() inside the uniform exception-to-status mapping.
template <typename F>
lsc_status guarded(F&& body) {
  try {
    return body();
  } catch (const lsc::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(LSC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LSC_ERR_INTERNAL, "unknown exception");
  }
}

// malloc-backed copy so the C caller can free() via lsc_string_free.
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lsc_status put_string(const std::string& s, char** out) {
  char* copy = dup_string(s);
  if (copy == nullptr) return fail(LSC_ERR_INTERNAL, "out of memory");
  *out = copy;
  return LSC_OK;
}

}  // namespace

extern "C" {

const char* lsc_version(void) { return "1.0.0"; }

const char* lsc_status_name(lsc_status s) {
  switch (s) {
    case LSC_OK: return "ok";
    case LSC_ERR_SYNTAX: return lsc::error_code_name(lsc::ErrorCode::syntax_error);
    case LSC_ERR_UNBALANCED: return lsc::error_code_name(lsc::ErrorCode::unbalanced_parens);
    case LSC_ERR_BAD_SCALE: return lsc::error_code_name(lsc::ErrorCode::bad_scale_literal);
    case LSC_ERR_POSITION: return lsc::error_code_name(lsc::ErrorCode::position_invalid);
    case LSC_ERR_RULE: return lsc::error_code_name(lsc::ErrorCode::rule_not_applicable);
    case LSC_ERR_VARIABLE_CLASH: return lsc::error_code_name(lsc::ErrorCode::variable_clash);
    case LSC_ERR_NOT_T1: return lsc::error_code_name(lsc::ErrorCode::not_t1_term);
    case LSC_ERR_OVERFLOW: return lsc::error_code_name(lsc::ErrorCode::overflow);
    case LSC_ERR_BAD_ARGUMENT: return lsc::error_code_name(lsc::ErrorCode::bad_argument);
    case LSC_ERR_INTERNAL: return lsc::error_code_name(lsc::ErrorCode::internal);
  }
  return "unknown";
}

const char* lsc_last_error(void) { return g_last_error.c_str(); }

void lsc_string_free(char* s) { std::free(s); }

lsc_status lsc_term_parse(const char* src, lsc_term** out) {
  if (src == nullptr || out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] {
    lsc::Term t = lsc::parse_term(src);
    *out = new lsc_term{std::move(t)};
    return LSC_OK;
  });
}

void lsc_term_free(lsc_term* t) { delete t; }

lsc_status lsc_term_print(const lsc_term* t, char** out) {
  if (t == nullptr || out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] { return put_string(lsc::print_term(t->value), out); });
}

lsc_status lsc_term_to_dot(const lsc_term* t, char** out) {
  if (t == nullptr || out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] { return put_string(lsc::to_dot(t->value), out); });
}

lsc_status lsc_term_alpha_eq(const lsc_term* a, const lsc_term* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = lsc::alpha_eq(a->value, b->value) ? 1 : 0;
    return LSC_OK;
  });
}

lsc_status lsc_scale_canonical(const char* src, char** out) {
  if (src == nullptr || out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded(
      [&] { return put_string(lsc::parse_scale(src).str(), out); });
}

lsc_status lsc_normalize(const lsc_term* t, long budget, lsc_term** result,
                         char** trace, int* normal) {
  if (t == nullptr || result == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] {
    long b = budget < 0 ? lsc::default_normalize_budget : budget;
    lsc::NormalizeOutcome o = lsc::normalize(t->value, b);
    if (trace != nullptr) {
      lsc_status s = put_string(o.trace.serialize(), trace);
      if (s != LSC_OK) return s;
    }
    if (normal != nullptr)
      *normal = o.status == lsc::NormalStatus::normal ? 1 : 0;
    *result = new lsc_term{std::move(o.result)};
    return LSC_OK;
  });
}

lsc_status lsc_equiv(const lsc_term* a, const lsc_term* b, long budget,
                     int* verdict, char** trace) {
  if (a == nullptr || b == nullptr || verdict == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] {
    long bud = budget < 0 ? lsc::default_equiv_budget : budget;
    lsc::EquivVerdict v = lsc::equiv(a->value, b->value, bud);
    if (trace != nullptr) {
      lsc_status s = put_string(v.proved ? v.trace.serialize() : "", trace);
      if (s != LSC_OK) return s;
    }
    *verdict = v.proved ? 0 : 1;
    return LSC_OK;
  });
}

lsc_status lsc_translate(const char* base, const char* scale,
                         const char* rel_src, int simplified, char** out) {
  if (base == nullptr || scale == nullptr || rel_src == nullptr ||
      out == nullptr)
    return fail(LSC_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&] {
    lsc::RelContext ctx{lsc::parse_term(base), lsc::parse_scale(scale)};
    lsc::RelTerm rel = lsc::parse_rel_term(rel_src);
    lsc::Term result =
        simplified == 0
            ? lsc::translate(ctx, rel)
            : (rel.is_abs()
                   ? lsc::translate_simplified(ctx, rel.binder(), rel.body())
                   : throw lsc::Error(
                         lsc::ErrorCode::bad_argument,
                         "simplified translation needs an abstraction"));
    return put_string(lsc::print_term(result), out);
  });
}

lsc_status lsc_check(const char* kind, const char* base, const char* scale,
                     uint64_t seed, int count, int depth, long budget,
                     char** report, int* all_proved) {
  if (kind == nullptr) return fail(LSC_ERR_BAD_ARGUMENT, "NULL kind");
  if (count < 0 || depth < 0)
    return fail(LSC_ERR_BAD_ARGUMENT, "negative count or depth");
  return guarded([&] {
    long b = budget < 0 ? lsc::default_equiv_budget : budget;
    std::string k = kind;
    lsc::CheckBatchResult batch;
    if (k == "irq") {
      batch = lsc::run_irq_checks(seed, count, depth, b);
      lsc::CheckBatchResult props = lsc::run_prop_checks(seed, count, depth, b);
      for (lsc::CheckReport& r : props.reports)
        batch.reports.push_back(std::move(r));
    } else if (k == "lambda") {
      batch = lsc::run_lambda_checks(b);
    } else if (k == "relative") {
      lsc::RelContext ctx{lsc::parse_term(base == nullptr ? "a" : base),
                          lsc::parse_scale(scale == nullptr ? "e" : scale)};
      batch = lsc::run_relative_checks(ctx, seed, count, depth, b);
    } else {
      return fail(LSC_ERR_BAD_ARGUMENT,
                  "kind must be \"irq\", \"lambda\" or \"relative\"");
    }
    if (report != nullptr) {
      lsc_status s = put_string(batch.serialize(), report);
      if (s != LSC_OK) return s;
    }
    if (all_proved != nullptr) *all_proved = batch.all_proved() ? 1 : 0;
    return LSC_OK;
  });
}

}  // extern "C"
