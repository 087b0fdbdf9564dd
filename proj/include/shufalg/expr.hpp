#pragma once

#include "shufalg/shuffle.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace shufalg {

class ParseError : public std::invalid_argument {
public:
    ParseError(size_t pos, const std::string& expected, const std::string& found);
    size_t position() const { return pos_; }
    const std::string& expected() const { return expected_; }

private:
    size_t pos_;
    std::string expected_;
};

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' ['-'] integer)?
// atom   := integer | 'v' | 'hbar' | ('e' | 'x') '[' int ',' int ']'
//         | 'comm' '(' expr ',' expr [';' expr] ')' | '(' expr ')'
// v is the trigonometric parameter and hbar the rational one; divisors must be nonzero scalars.
FreeElement parse_expression(const ShuffleContext& ctx, std::string_view src);

}  // namespace shufalg
