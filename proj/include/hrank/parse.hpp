#pragma once

// Expression text for polynomials and jet recipes.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' ['-'] integer)?
//   atom    := number | variable | '~' variable | 'i' | 'r'S
//            | 'exp' '(' expr ')' | '(' expr ')'
//   number  := digits ['/' digits] ['i' | 'r'S | 'ir'S]
//   variable:= 'z'k (1 <= k < n) | 'w' | 'z'n (same as w)
//
// A number such as 3/4 is a single token, so "3/4+1/2i" is the Gaussian
// rational 3/4 + i/2.  Radical tokens need a field with that radicand.

#include "hrank/jets.hpp"
#include "hrank/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace hrank {

/// Q(i), or Q(i)(sqrt s) when radicand is nonzero.
struct Field {
    int radicand = 0;

    /// "qi" or "qi-sqrtS"; throws std::invalid_argument otherwise.
    static Field parse(std::string_view name);
    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Polynomial parse_poly(std::string_view text, int n, Field field = {});
/// Polynomials plus 1/(...), exp(...), negative powers and their products.
JetRecipe parse_jet(std::string_view text, int n, Field field = {});
/// Comma-separated coordinates of a diagonal point, e.g. "1/2,0,i".
Point parse_point(std::string_view text, int n, Field field = {});

}  // namespace hrank
