#pragma once

#include "gca/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gca {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree. The zero polynomial has no coefficients.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs);
    UnivariatePolynomial(std::initializer_list<long> coeffs);

    static UnivariatePolynomial monomial(std::size_t degree, const Rational& c = 1);
    /// Reads a polynomial in one variable of the given Laurent polynomial.
    /// Every term must depend on `var` only and have a non-negative exponent.
    static UnivariatePolynomial from_laurent(const LaurentPolynomial& p, std::size_t var = 0);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading_coefficient() const { return coeffs_.back(); }

    UnivariatePolynomial operator-() const;
    friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a);
    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return !(a == b); }
    friend bool operator<(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

    UnivariatePolynomial pow(unsigned k) const;
    UnivariatePolynomial derivative() const;
    Rational evaluate(const Rational& x) const;
    /// p(y^e).
    UnivariatePolynomial inflate(unsigned e) const;
    /// y^deg · p(1/y).
    UnivariatePolynomial reversed() const;
    /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
    UnivariatePolynomial primitive() const;
    UnivariatePolynomial monic() const;

    /// Embeds as a polynomial in variable `var` of an `arity`-variate ring.
    LaurentPolynomial to_laurent(std::size_t arity = 1, std::size_t var = 0) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division over the rationals.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
/// Monic gcd over the rationals (zero when both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

struct FactorPower {
    UnivariatePolynomial factor;
    unsigned multiplicity = 1;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// g = unit · ∏ factor^multiplicity.
struct Factorization {
    Rational unit;
    std::vector<FactorPower> factors;
};

class ConstantPolynomial : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Squarefree decomposition (Yun). Factors are primitive integer polynomials
/// with positive leading coefficient, pairwise coprime and squarefree, listed by
/// increasing multiplicity. Throws ConstantPolynomial on constant input.
Factorization squarefree_decompose(const UnivariatePolynomial& g);

/// Complete factorization into irreducibles over the rationals. Factors are
/// primitive integer polynomials with positive leading coefficient, sorted by
/// (degree, coefficients). Throws ConstantPolynomial on constant input.
Factorization factor_univariate(const UnivariatePolynomial& g);

/// Expands a factorization back into a polynomial.
UnivariatePolynomial expand(const Factorization& f);

}  // namespace gca
