#pragma once

#include "gca/laurent.hpp"
#include "gca/text.hpp"

#include <random>
#include <string>

namespace gca::testing {

inline LaurentPolynomial poly(const std::string& text, std::size_t arity = 3) {
    return parse_polynomial(text, default_names(arity));
}

inline std::string str(const LaurentPolynomial& p) {
    return to_string(p, default_names(p.arity()));
}

inline long uniform(std::mt19937& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random Laurent polynomial with up to `max_terms` terms.
inline LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t arity, int max_terms, long min_exp,
                                        long max_exp, long max_coeff = 5) {
    LaurentPolynomial p(arity);
    const long terms = uniform(rng, 1, max_terms);
    for (long t = 0; t < terms; ++t) {
        ExponentVector e(arity);
        for (auto& v : e)
            v = uniform(rng, min_exp, max_exp);
        long num = uniform(rng, -max_coeff, max_coeff);
        long den = uniform(rng, 1, 3);
        Rational c(num, den);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

inline LaurentPolynomial random_nonzero(std::mt19937& rng, std::size_t arity, int max_terms, long min_exp,
                                        long max_exp) {
    for (;;) {
        auto p = random_laurent(rng, arity, max_terms, min_exp, max_exp);
        if (!p.is_zero())
            return p;
    }
}

}  // namespace gca::testing
