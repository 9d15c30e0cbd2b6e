#include "gca/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace gca {

namespace {

std::vector<Rational> binomial_row(std::int64_t n) {
    std::vector<Rational> row{1};
    Integer c = 1;
    for (std::int64_t r = 1; r <= n; ++r) {
        c = c * (n - r + 1) / r;
        row.emplace_back(c);
    }
    return row;
}

}  // namespace

AbelianGroupSpec AbelianGroupSpec::normalized() const {
    AbelianGroupSpec out{free_rank, {}};
    for (auto t : torsion) {
        if (t < 1)
            throw std::invalid_argument("torsion entries must be positive");
        if (t > 1)
            out.torsion.push_back(t);
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

GeneralizedSeed realize_seed(const AbelianGroupSpec& spec) {
    const AbelianGroupSpec g = spec.normalized();
    const std::size_t k = g.torsion.size();
    const auto ring = GroundRing::AlgebraicClosure;

    if (g.free_rank == 0 && k == 0)
        return GeneralizedSeed::classical({{0}, {1}}, 1, ring);

    if (k == 0) {
        const auto m = static_cast<std::int64_t>(g.free_rank) + 1;
        return GeneralizedSeed::classical({{0, m}, {-1, 0}}, 2, ring);
    }

    // f_i lives in column i; the torsion block pairs x_i with x_{N-i+1}
    const std::size_t shift = g.free_rank > 0 ? 1 : 0;
    const std::size_t N = 2 * k + 2 * shift;
    ExchangeMatrix B(N, N);
    std::vector<std::vector<Rational>> strings(N, {1, 1});
    for (std::size_t i = shift; i < N; ++i) {
        const std::size_t partner = N - 1 - i;
        if (i < shift + k) {
            B(partner, i) = g.torsion[i - shift];
            strings[i] = binomial_row(g.torsion[i - shift]);
        } else {
            B(partner, i) = -1;
        }
    }
    if (shift)
        B(N - 1, 0) = static_cast<std::int64_t>(g.free_rank) + 1;
    return GeneralizedSeed::with_strings(B, N, strings, ring);
}

std::vector<Integer> invariant_factors(const AbelianGroupSpec& g) {
    const auto t = g.normalized().torsion;
    IntegerMatrix D(t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        D(i, i) = static_cast<long>(t[i]);
    return smith_normal_form(D).torsion;
}

bool verify_realization(const AbelianGroupSpec& g) {
    const GeneralizedSeed s = realize_seed(g);
    const ClassGroupResult c = class_group(s, FieldMode::AlgebraicallyClosed);
    return c.free_rank == g.free_rank && c.torsion == invariant_factors(g);
}

}  // namespace gca
