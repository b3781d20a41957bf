#pragma once

#include <string_view>

#include "deo/exppoly.hpp"

namespace deo {

// Grammar (whitespace insignificant):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 't' ('^' uint)? | fn '(' [rational ['*']] 't' ')' | '(' expr ')'
//   fn       := 'exp' | 'cos' | 'sin'
//   rational := ['-'] uint ('/' uint)?
// Throws ParseError carrying the byte offset and the expected-token set.
ExpPoly parse_expr(std::string_view src);

}  // namespace deo
