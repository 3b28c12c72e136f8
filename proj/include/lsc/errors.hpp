#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsc {

enum class ErrorCode {
  syntax_error,
  unbalanced_parens,
  bad_scale_literal,
  position_invalid,
  rule_not_applicable,
  variable_clash,
  not_t1_term,
  overflow,
  bad_argument,
  internal,
};

const char* error_code_name(ErrorCode code);

// Base error for the whole library. Everything thrown on a public entry point
// is an lsc::Error (or a subclass) so the C layer can map it to a status code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Half-open byte range [start, end) into the source text of a parse.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const SourceSpan&) const = default;
};

class ParseError : public Error {
public:
  ParseError(ErrorCode code, SourceSpan span, const std::string& msg)
      : Error(code, msg), span_(span) {}

  SourceSpan span() const noexcept { return span_; }

private:
  SourceSpan span_;
};

}  // namespace lsc
