#ifndef BRAIDCAT_EXPR_HPP
#define BRAIDCAT_EXPR_HPP

#include <string_view>

#include "braidcat/ratfunc.hpp"

namespace braidcat {

// Grammar: integer literals; variables q, z1..z9, u, v, w, t; operators
// + - * / ^ with ^ taking a non-negative integer literal; parentheses;
// precedence ^ > unary - > * / > + -.  Whitespace is insignificant.
RatFunc parse_expr(std::string_view text);

}  // namespace braidcat

#endif
