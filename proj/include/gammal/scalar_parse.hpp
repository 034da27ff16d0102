#pragma once

#include <string>
#include <string_view>

#include "gammal/errors.hpp"
#include "gammal/scalar.hpp"

namespace gammal {

/// Parse failure with a source position (1-based line and column).
class ParseError : public error {
public:
    ParseError(unsigned line, unsigned column, const std::string& message)
        : error(errc::parse_error,
                "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " +
                    message),
          line_(line), column_(column) {}

    unsigned line() const noexcept { return line_; }
    unsigned column() const noexcept { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

/// Evaluate a scalar expression over Q(zeta_m)(t).
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-')* power
///   power  := atom ('^' ('-')? integer)*
///   atom   := integer | 'z' | 't' | '(' expr ')'
/// '^' binds tightest, then '*' '/', then '+' '-'. 'z' is zeta_m; 't' is the
/// transcendental and is only legal when allow_t is set.
///
/// line/column give the position of the expression's first character inside
/// the enclosing file, so diagnostics point at the real source location.
Scalar parse_scalar(std::string_view text, const CycloCtxPtr& ctx, bool allow_t,
                    unsigned line = 1, unsigned column = 1);

} // namespace gammal
