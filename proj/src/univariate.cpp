#include "gca/univariate.hpp"

#include <algorithm>
#include <sstream>

namespace gca {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> cs(degree + 1, Rational(0));
    cs[degree] = c;
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial UnivariatePolynomial::from_laurent(const LaurentPolynomial& p, std::size_t var) {
    std::vector<Rational> cs;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in the requested variable");
        if (e[var] < 0)
            throw std::invalid_argument("negative exponent in univariate conversion");
        auto k = static_cast<std::size_t>(e[var]);
        if (cs.size() <= k)
            cs.resize(k + 1, Rational(0));
        cs[k] = c;
    }
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        cs[i] += b.coeffs_[i];
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a + (-b);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a) {
    std::vector<Rational> cs = a.coeffs_;
    for (auto& v : cs)
        v *= c;
    return UnivariatePolynomial(std::move(cs));
}

bool operator<(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned k) const {
    UnivariatePolynomial r({1L});
    UnivariatePolynomial base = *this;
    while (k > 0) {
        if (k & 1U)
            r = r * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return r;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        cs[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UnivariatePolynomial(std::move(cs));
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = r * x + coeffs_[i];
    return r;
}

UnivariatePolynomial UnivariatePolynomial::inflate(unsigned e) const {
    if (e == 0)
        throw std::invalid_argument("inflation by zero");
    if (coeffs_.empty())
        return {};
    std::vector<Rational> cs((coeffs_.size() - 1) * e + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        cs[i * e] = coeffs_[i];
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial UnivariatePolynomial::reversed() const {
    std::vector<Rational> cs(coeffs_.rbegin(), coeffs_.rend());
    return UnivariatePolynomial(std::move(cs));
}

UnivariatePolynomial UnivariatePolynomial::primitive() const {
    if (coeffs_.empty())
        return {};
    Integer num = 0;
    Integer den = 1;
    for (const auto& c : coeffs_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (coeffs_.back() < 0)
        scale = -scale;
    return scale * *this;
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (coeffs_.empty())
        return {};
    return Rational(1 / coeffs_.back()) * *this;
}

LaurentPolynomial UnivariatePolynomial::to_laurent(std::size_t arity, std::size_t var) const {
    LaurentPolynomial p(arity);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        ExponentVector e(arity, 0);
        e[var] = static_cast<std::int64_t>(i);
        p.add_term(e, coeffs_[i]);
    }
    return p;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool coef_shown = (a != 1 || i == 0);
        if (coef_shown)
            os << a.get_str();
        if (i > 0) {
            if (coef_shown)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
    if (b.is_zero())
        throw DivisionByZero("univariate division by zero");
    std::vector<Rational> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size())
        return {UnivariatePolynomial{}, a};
    std::vector<Rational> q(r.size() - db, Rational(0));
    for (std::size_t k = r.size(); k-- > db;) {
        Rational c = r[k] / bc.back();
        q[k - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j)
                r[k - db + j] -= c * bc[j];
    }
    r.resize(db);
    return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial x = a;
    UnivariatePolynomial y = b;
    while (!y.is_zero()) {
        UnivariatePolynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic();
}

Factorization squarefree_decompose(const UnivariatePolynomial& g) {
    if (g.degree() < 1)
        throw ConstantPolynomial("squarefree decomposition of a constant");
    Factorization out;
    UnivariatePolynomial a = g.primitive();
    UnivariatePolynomial da = a.derivative();
    UnivariatePolynomial c = gcd(a, da);
    UnivariatePolynomial w = divmod(a, c).first;
    UnivariatePolynomial y = divmod(da, c).first;
    UnivariatePolynomial z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        UnivariatePolynomial h = gcd(w, z);
        w = divmod(w, h).first;
        y = divmod(z, h).first;
        z = y - w.derivative();
        if (h.degree() > 0)
            out.factors.push_back({h.primitive(), i});
        ++i;
    }
    Rational lc = 1;
    for (const auto& f : out.factors)
        for (unsigned k = 0; k < f.multiplicity; ++k)
            lc *= f.factor.leading_coefficient();
    out.unit = g.leading_coefficient() / lc;
    return out;
}

UnivariatePolynomial expand(const Factorization& f) {
    UnivariatePolynomial r({1L});
    for (const auto& fp : f.factors)
        r = r * fp.factor.pow(fp.multiplicity);
    return f.unit * r;
}

}  // namespace gca
