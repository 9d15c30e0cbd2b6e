#pragma once

#include "gca/laurent.hpp"

#include <string>
#include <vector>

namespace gca {

/// Element of the rational function field of the initial cluster, stored as
/// numerator / denominator in lowest terms.
///
/// The denominator is a canonical polynomial (no monomial factor, coprime
/// integer coefficients, positive leading coefficient); monomials and
/// constants are absorbed into the Laurent numerator. The expression is a
/// Laurent polynomial exactly when the denominator is 1.
class RationalExpression {
public:
    RationalExpression() : den_(LaurentPolynomial::constant(0, 1)) {}
    explicit RationalExpression(LaurentPolynomial p);
    /// Reduces num / den. Throws DivisionByZero when den is zero.
    static RationalExpression fraction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    std::size_t arity() const { return num_.arity(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalExpression inverse() const;
    RationalExpression pow(std::int64_t k) const;

    friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator-(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator/(const RationalExpression& a, const RationalExpression& b);

    friend bool operator==(const RationalExpression& a, const RationalExpression& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RationalExpression& a, const RationalExpression& b) {
        if (a.den_ != b.den_)
            return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    /// "x2*x1^-1 + x1^-1" or "(x2 + 1)/(x1 + 1)".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// Substitutes values[k] for variable k of f (values.size() == f.arity()).
RationalExpression evaluate(const LaurentPolynomial& f, const std::vector<RationalExpression>& values);

}  // namespace gca
