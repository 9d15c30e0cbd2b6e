#pragma once

#include "gca/laurent.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gca {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Default labels x1, …, xN.
std::vector<std::string> default_names(std::size_t n);

/// Prints terms in descending lexicographic order, e.g. `x2*x3^-1 + x3^-1`,
/// `-3/2*x1^2 + 1`. The zero polynomial prints as `0`.
std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names);

/// Parses sums of products of rationals, variables, integer powers and
/// parenthesized subexpressions. `/` is exact division (must divide).
/// Inverse of to_string on canonical output.
LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

}  // namespace gca
