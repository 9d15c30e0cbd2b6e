#pragma once

#include "gca/laurent.hpp"
#include "gca/univariate.hpp"

#include <optional>

namespace gca {

/// A Laurent polynomial whose Newton polytope is a line segment, written as
/// x^unit_monomial · profile((x^direction)^stretch).
///
/// `direction` is primitive and lexicographically positive, `unit_monomial` is
/// the lexicographically smallest exponent of the source, and the profile has a
/// non-zero constant term. A single monomial is the degenerate segment with
/// direction e_1, stretch 1 and a constant profile.
struct SegmentForm {
    ExponentVector unit_monomial;
    ExponentVector direction;
    std::int64_t stretch = 1;
    UnivariatePolynomial profile;

    /// profile(y^stretch): the profile in the primitive coordinate t = x^direction.
    UnivariatePolynomial inflated_profile() const { return profile.inflate(static_cast<unsigned>(stretch)); }
    LaurentPolynomial reconstruct() const;
    /// h(x^direction) for a univariate h.
    LaurentPolynomial lift(const UnivariatePolynomial& h) const;
};

/// Returns nullopt when the exponents are not collinear. Throws on zero input.
std::optional<SegmentForm> segment_decompose(const LaurentPolynomial& f);

}  // namespace gca
