#ifndef HAMCHECK_PARSER_HPP
#define HAMCHECK_PARSER_HPP

#include <string_view>

#include "hamcheck/expression.hpp"

namespace hamcheck {

// Recursive-descent parser for the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' integer)?
//   base   := number | identifier | '(' expr ')'
// Identifiers are [A-Za-z][A-Za-z0-9_]* and must be declared in ctx.
// Numbers are integer or decimal literals, read exactly.
Expression parse_expression(std::string_view text, VariableContext::Ptr ctx);

}  // namespace hamcheck

#endif
