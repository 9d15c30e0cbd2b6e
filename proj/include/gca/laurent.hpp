#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent of each variable in a Laurent monomial. Entries may be negative.
using ExponentVector = std::vector<std::int64_t>;

class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact multivariate Laurent polynomial over the rationals.
///
/// Terms are kept in a map keyed by exponent vector, so iteration runs in
/// ascending lexicographic order and the leading term is the last entry.
/// Zero coefficients are never stored.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}

    static LaurentPolynomial constant(std::size_t arity, const Rational& c);
    static LaurentPolynomial monomial(const ExponentVector& e, const Rational& c = 1);
    static LaurentPolynomial variable(std::size_t arity, std::size_t index, std::int64_t power = 1);
    /// Builds from terms given in strictly descending lex order with nonzero coefficients.
    static LaurentPolynomial from_descending_terms(std::size_t arity,
                                                   std::vector<std::pair<ExponentVector, Rational>> terms);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// True for a single term c·x^a with c ≠ 0.
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when no exponent is negative.
    bool is_polynomial() const;

    /// Adds c·x^e in place.
    void add_term(const ExponentVector& e, const Rational& c);

    const ExponentVector& leading_exponent() const;
    const Rational& leading_coefficient() const;
    Rational constant_term() const;
    Rational coefficient(const ExponentVector& e) const;

    bool involves(std::size_t var) const;
    std::int64_t max_degree(std::size_t var) const;
    std::int64_t min_degree(std::size_t var) const;
    /// Componentwise minimum of the exponent vectors (zero polynomial: all zeros).
    ExponentVector min_exponents() const;
    std::int64_t total_degree() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const Rational& c);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }
    /// Total order on canonical forms, used for sorting and sets.
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Raises to a non-negative power; negative powers are only valid for monomials.
    LaurentPolynomial pow(std::int64_t k) const;

    /// Multiplies by the monomial x^shift.
    LaurentPolynomial shifted(const ExponentVector& shift) const;

    /// Substitutes `value` for variable `var` (value must share the arity).
    /// Negative powers of `var` require `value` to be a monomial.
    LaurentPolynomial substitute(std::size_t var, const LaurentPolynomial& value) const;

    /// Sets variable `var` to zero. Returns nullopt when `var` occurs with a negative power.
    std::optional<LaurentPolynomial> evaluate_at_zero(std::size_t var) const;

    /// Reinterprets in a larger ambient ring by appending zero exponents.
    LaurentPolynomial extended(std::size_t new_arity) const;
    /// Drops trailing variables; they must not occur.
    LaurentPolynomial truncated(std::size_t new_arity) const;
    /// Relabels variables: variable v becomes perm[v].
    LaurentPolynomial permuted(const std::vector<std::size_t>& perm) const;

    /// Splits off the monomial part: *this = x^shift · rest, rest a polynomial
    /// not divisible by any variable.
    std::pair<ExponentVector, LaurentPolynomial> split_monomial() const;

    /// Rational c > 0 such that *this / c has coprime integer coefficients,
    /// signed so that the leading coefficient becomes positive.
    Rational content() const;

    /// Canonical associate: monomial part removed, integer coprime
    /// coefficients, positive leading coefficient.
    LaurentPolynomial normalized() const;

    /// Canonical associate up to rational constants only (monomial part kept).
    LaurentPolynomial primitive() const;

private:
    std::size_t arity_ = 0;
    TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
/// Throws DivisionByZero when b is zero.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Greatest common divisor up to units of the Laurent ring (monomials and
/// rational constants). The result is normalized; gcd(0, 0) throws.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// True when a and b differ by a unit (a rational constant times a monomial).
bool associated(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace gca
