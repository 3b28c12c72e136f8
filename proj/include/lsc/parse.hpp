#pragma once

#include <string_view>

#include "lsc/errors.hpp"
#include "lsc/scale.hpp"
#include "lsc/term.hpp"

namespace lsc {

// Surface grammar (whitespace insignificant):
//
//   term  := IDENT
//          | '(' IDENT '\' term ')'            abstraction
//          | '(' term '{' scale '}' term ')'   scaled pairing
//          | '(' term term ')'                 application, sugar for {1}
//          | 'dil' '{' scale '}' '(' term ',' term ')'
//   scale := '1' | factor ('*' factor)*
//   factor:= IDENT ('^' '-'? DIGITS)? | '1'
//
// dil{s}(B, A) builds the dilation of A with coefficient s based at B.
// Failures throw ParseError with a byte-offset SourceSpan.
Term parse_term(std::string_view src);

Scale parse_scale(std::string_view src);

}  // namespace lsc
