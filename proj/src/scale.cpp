#include "lsc/scale.hpp"

#include <cctype>

#include "lsc/errors.hpp"

namespace lsc {

// Stable snake_case tokens: part of the public interface (lsc_status_name
// exposes them), so C callers can compare against fixed strings.
const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::unbalanced_parens: return "unbalanced_parens";
    case ErrorCode::bad_scale_literal: return "bad_scale_literal";
    case ErrorCode::position_invalid: return "position_invalid";
    case ErrorCode::rule_not_applicable: return "rule_not_applicable";
    case ErrorCode::variable_clash: return "variable_clash";
    case ErrorCode::not_t1_term: return "not_t1_term";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::bad_argument: return "bad_argument";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

namespace {

bool valid_generator_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::overflow, "scale exponent overflow");
  return r;
}

}  // namespace

Scale Scale::generator(const std::string& name, std::int64_t exp) {
  return from_exponents({{name, exp}});
}

Scale Scale::from_exponents(
    const std::vector<std::pair<std::string, std::int64_t>>& exps) {
  Scale s;
  for (const auto& [name, exp] : exps) {
    if (!valid_generator_name(name))
      throw Error(ErrorCode::bad_argument,
                  "invalid scale generator name '" + name + "'");
    if (exp == 0) continue;
    auto it = s.exps_.find(name);
    if (it == s.exps_.end()) {
      s.exps_.emplace(name, exp);
    } else {
      it->second = checked_add(it->second, exp);
      if (it->second == 0) s.exps_.erase(it);
    }
  }
  return s;
}

Scale Scale::mul(const Scale& other) const {
  Scale r = *this;
  for (const auto& [name, exp] : other.exps_) {
    auto it = r.exps_.find(name);
    if (it == r.exps_.end()) {
      r.exps_.emplace(name, exp);
    } else {
      it->second = checked_add(it->second, exp);
      if (it->second == 0) r.exps_.erase(it);
    }
  }
  return r;
}

Scale Scale::inverse() const {
  Scale r;
  for (const auto& [name, exp] : exps_) {
    // exponents can never be INT64_MIN (parse and arithmetic both check), so
    // negation is safe; keep a guard anyway.
    if (exp == INT64_MIN)
      throw Error(ErrorCode::overflow, "scale exponent overflow");
    r.exps_.emplace(name, -exp);
  }
  return r;
}

std::string Scale::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [name, exp] : exps_) {
    if (!first) out += '*';
    first = false;
    out += name;
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
  }
  return out;
}

}  // namespace lsc
