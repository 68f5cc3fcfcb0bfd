#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rdu/polynomial.hpp"

namespace rdu {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division by constants only
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
// `line` is only used for error reporting.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, std::size_t line = 1);

}  // namespace rdu
