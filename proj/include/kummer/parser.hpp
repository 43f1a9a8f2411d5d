#pragma once

// Input grammar for rational functions of one variable:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' integer)?
//   base   := number | ident | '(' expr ')' | '-' factor
// Numbers are integers or integer/integer.

#include "kummer/ratfunc.hpp"

#include <memory>
#include <optional>
#include <string>

namespace kummer {

struct ExprAST {
    enum class Kind { Integer, Rational, Variable, Negate, Add, Subtract, Multiply, Divide, Power };

    Kind kind = Kind::Integer;
    /// Offset of the node's operator or first character in the source text.
    std::size_t position = 0;
    Rat value;              // Integer, Rational
    std::string name;       // Variable
    long exponent = 0;      // Power
    std::unique_ptr<ExprAST> lhs;
    std::unique_ptr<ExprAST> rhs;
};

struct ParsedExpression {
    std::unique_ptr<ExprAST> ast;
    /// The single identifier of the input, if any.
    std::optional<std::string> variable;
};

/// Throws ParseError with the byte offset of the problem.
ParsedExpression parse_expression(const std::string& text);

/// Exact value of the tree; throws ParseError on division by zero.
RatFunc evaluate(const ExprAST& ast);

RatFunc parse_ratfunc(const std::string& text);

/// As parse_ratfunc, additionally requiring the identifier (if any) to be `variable`.
RatFunc parse_ratfunc(const std::string& text, const std::string& variable);

} // namespace kummer
