#include "gca/expression.hpp"

#include "gca/text.hpp"

#include <map>
#include <utility>

namespace gca {

namespace {

ExponentVector negated(ExponentVector e) {
    for (auto& v : e)
        v = -v;
    return e;
}

// Writes den = unit * rest with rest canonical and returns the Laurent unit.
LaurentPolynomial split_unit(const LaurentPolynomial& den, LaurentPolynomial& rest) {
    auto [shift, poly] = den.split_monomial();
    const Rational c = poly.content();
    rest = poly * Rational(1 / c);
    return LaurentPolynomial::monomial(shift, c);
}

}  // namespace

RationalExpression::RationalExpression(LaurentPolynomial p)
    : num_(std::move(p)), den_(LaurentPolynomial::constant(num_.arity(), 1)) {}

RationalExpression RationalExpression::fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero())
        throw DivisionByZero("rational expression with zero denominator");
    if (num.arity() != den.arity())
        throw ArityMismatch("numerator and denominator differ in arity");
    RationalExpression out;
    out.den_ = LaurentPolynomial::constant(den.arity(), 1);
    if (num.is_zero()) {
        out.num_ = num;
        return out;
    }
    LaurentPolynomial P;
    const LaurentPolynomial unit = split_unit(den, P);
    LaurentPolynomial N = num * LaurentPolynomial::monomial(negated(unit.leading_exponent()),
                                                              Rational(1 / unit.leading_coefficient()));
    if (P.is_one()) {
        out.num_ = std::move(N);
        return out;
    }
    if (auto q = divide_exact(N, P)) {
        out.num_ = std::move(*q);
        return out;
    }
    const LaurentPolynomial g = gca::gcd(N, P);
    if (!g.is_constant()) {
        N = *divide_exact(N, g);
        P = *divide_exact(P, g);
        LaurentPolynomial rest;
        const LaurentPolynomial u = split_unit(P, rest);
        N = N * LaurentPolynomial::monomial(negated(u.leading_exponent()), Rational(1 / u.leading_coefficient()));
        P = std::move(rest);
    }
    out.num_ = std::move(N);
    out.den_ = std::move(P);
    return out;
}

RationalExpression RationalExpression::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    return fraction(den_, num_);
}

RationalExpression RationalExpression::pow(std::int64_t k) const {
    if (k < 0)
        return inverse().pow(-k);
    if (is_laurent())
        return RationalExpression(num_.pow(k));
    RationalExpression out;
    out.num_ = num_.pow(k);
    out.den_ = den_.pow(k);  // coprime factors stay coprime
    return out;
}

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) {
    if (a.den_ == b.den_) {
        if (a.is_laurent())
            return RationalExpression(a.num_ + b.num_);
        return RationalExpression::fraction(a.num_ + b.num_, a.den_);
    }
    return RationalExpression::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpression operator-(const RationalExpression& a, const RationalExpression& b) {
    return a + b * RationalExpression(LaurentPolynomial::constant(b.arity(), -1));
}

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b) {
    if (a.is_laurent() && b.is_laurent())
        return RationalExpression(a.num_ * b.num_);
    return RationalExpression::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpression operator/(const RationalExpression& a, const RationalExpression& b) {
    if (b.is_zero())
        throw DivisionByZero("division by zero expression");
    return RationalExpression::fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalExpression::to_string(const std::vector<std::string>& names) const {
    if (is_laurent())
        return gca::to_string(num_, names);
    auto wrap = [&](const LaurentPolynomial& p) {
        std::string s = gca::to_string(p, names);
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

RationalExpression evaluate(const LaurentPolynomial& f, const std::vector<RationalExpression>& values) {
    if (values.size() != f.arity())
        throw ArityMismatch("evaluate: one value per variable required");
    const std::size_t target = values.empty() ? 0 : values.front().arity();
    std::map<std::pair<std::size_t, std::int64_t>, RationalExpression> powers;
    auto power = [&](std::size_t k, std::int64_t e) -> const RationalExpression& {
        auto it = powers.find({k, e});
        if (it == powers.end())
            it = powers.emplace(std::make_pair(k, e), values[k].pow(e)).first;
        return it->second;
    };
    RationalExpression sum{LaurentPolynomial(target)};
    for (const auto& [e, c] : f.terms()) {
        RationalExpression term(LaurentPolynomial::constant(target, c));
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0)
                term = term * power(k, e[k]);
        sum = sum + term;
    }
    return sum;
}

}  // namespace gca
