#include "gca/segment.hpp"

#include <numeric>

namespace gca {

LaurentPolynomial SegmentForm::lift(const UnivariatePolynomial& h) const {
    LaurentPolynomial r(direction.size());
    const auto& cs = h.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        ExponentVector e(direction.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = direction[i] * static_cast<std::int64_t>(k);
        r.add_term(e, cs[k]);
    }
    return r;
}

LaurentPolynomial SegmentForm::reconstruct() const {
    return lift(inflated_profile()).shifted(unit_monomial);
}

std::optional<SegmentForm> segment_decompose(const LaurentPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("segment decomposition of the zero polynomial");
    const std::size_t n = f.arity();
    SegmentForm out;
    const auto& terms = f.terms();
    out.unit_monomial = terms.begin()->first;
    out.direction.assign(n, 0);
    if (n > 0)
        out.direction[0] = 1;
    if (terms.size() == 1) {
        out.profile = UnivariatePolynomial(std::vector<Rational>{terms.begin()->second});
        return out;
    }

    const ExponentVector& base = out.unit_monomial;
    ExponentVector first_diff(n);
    const ExponentVector& second = std::next(terms.begin())->first;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        first_diff[i] = second[i] - base[i];
        g = std::gcd(g, first_diff[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        out.direction[i] = first_diff[i] / g;
    std::size_t pivot = 0;
    while (out.direction[pivot] == 0)
        ++pivot;

    std::vector<std::pair<std::int64_t, Rational>> steps;
    std::int64_t stretch = 0;
    for (const auto& [e, c] : terms) {
        const std::int64_t t = (e[pivot] - base[pivot]) / out.direction[pivot];
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] - base[i] != t * out.direction[i])
                return std::nullopt;
        steps.emplace_back(t, c);
        stretch = std::gcd(stretch, t);
    }
    out.stretch = stretch;
    std::vector<Rational> profile(static_cast<std::size_t>(steps.back().first / stretch) + 1, Rational(0));
    for (const auto& [t, c] : steps)
        profile[static_cast<std::size_t>(t / stretch)] = c;
    out.profile = UnivariatePolynomial(std::move(profile));
    return out;
}

}  // namespace gca
