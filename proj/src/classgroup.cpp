#include "gca/classgroup.hpp"

#include "gca/segment.hpp"

#include <stdexcept>

namespace gca {

namespace {

struct SegmentData {
    SegmentForm form;
    UnivariatePolynomial G;  // profile in the primitive coordinate
};

std::vector<std::optional<SegmentData>> segments(const GeneralizedSeed& s) {
    std::vector<std::optional<SegmentData>> out;
    for (const auto& f : exchange_polynomials(s)) {
        auto form = segment_decompose(f);
        if (!form)
            throw PreconditionError("segment", "exchange polynomial is not supported on a segment; "
                                               "class groups need scalar coefficient strings");
        if (form->profile.degree() <= 0) {
            out.emplace_back();  // a constant: x_i is a unit
            continue;
        }
        UnivariatePolynomial G = form->inflated_profile();
        out.push_back(SegmentData{std::move(*form), std::move(G)});
    }
    return out;
}

}  // namespace

FieldMode default_mode(GroundRing ring) {
    return ring == GroundRing::AlgebraicClosure ? FieldMode::AlgebraicallyClosed : FieldMode::Rational;
}

void require_class_group_hypotheses(const GeneralizedSeed& s, ClassGroupOptions options) {
    require_valid(s);
    if (!options.allow_cyclic && !is_acyclic(s))
        throw PreconditionError("acyclic", "the directed graph of the seed has a directed cycle");
    if (!is_coprime(s))
        throw PreconditionError("coprime", "the exchange polynomials are not pairwise coprime");
}

std::vector<PrimeDivisor> height_one_primes(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options) {
    require_class_group_hypotheses(s, options);
    std::vector<PrimeDivisor> primes;
    const auto segs = segments(s);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (!segs[i])
            continue;
        const auto& [form, G] = *segs[i];
        if (mode == FieldMode::Rational) {
            for (const auto& [factor, mult] : factor_univariate(G).factors) {
                PrimeDivisor p;
                p.source = i;
                p.multiplicity = mult;
                p.factor = form.lift(factor).normalized();
                primes.push_back(std::move(p));
            }
        } else {
            for (const auto& [block, mult] : squarefree_decompose(G).factors) {
                const auto degree = static_cast<std::size_t>(block.degree());
                for (std::size_t root = 0; root < degree; ++root) {
                    PrimeDivisor p;
                    p.source = i;
                    p.multiplicity = mult;
                    p.closed = ClosedWitness{form.direction, form.stretch, block, degree, root};
                    primes.push_back(std::move(p));
                }
            }
        }
    }
    // coprimality makes a shared factor between sources impossible
    if (mode == FieldMode::Rational)
        for (std::size_t a = 0; a < primes.size(); ++a)
            for (std::size_t b = a + 1; b < primes.size(); ++b)
                if (primes[a].source != primes[b].source && *primes[a].factor == *primes[b].factor)
                    throw std::logic_error("prime shared by two exchange polynomials of a coprime seed");
    return primes;
}

IntegerMatrix valuation_matrix(const std::vector<PrimeDivisor>& primes, const GeneralizedSeed& s) {
    IntegerMatrix V(s.n, primes.size());
    for (std::size_t j = 0; j < primes.size(); ++j) {
        if (primes[j].source >= s.n)
            throw std::out_of_range("prime sourced outside the exchangeable variables");
        V(primes[j].source, j) = static_cast<unsigned long>(primes[j].multiplicity);
    }
    return V;
}

ClassGroupResult class_group(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options) {
    ClassGroupResult out;
    out.primes = height_one_primes(s, mode, options);
    out.r = out.primes.size();
    out.valuation = valuation_matrix(out.primes, s);
    const SmithDecomposition snf = smith_decomposition(out.valuation);
    out.free_rank = snf.result.free_rank;
    out.torsion = snf.result.torsion;
    const std::size_t rank = snf.result.rank;
    for (std::size_t j = 0; j < out.r; ++j) {
        std::vector<Integer> image;
        for (std::size_t c = 0; c < rank; ++c) {
            const Integer& d = snf.diagonal[c];
            if (d == 1)
                continue;
            Integer v = snf.column_transform(j, c) % d;
            if (v < 0)
                v += d;
            image.push_back(v);
        }
        for (std::size_t c = rank; c < out.r; ++c)
            image.push_back(snf.column_transform(j, c));
        out.images.push_back(std::move(image));
    }
    return out;
}

bool is_factorial(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options) {
    const ClassGroupResult g = class_group(s, mode, options);
    const bool trivial = g.free_rank == 0 && g.torsion.empty();
    bool irreducible = true;
    for (const auto& seg : segments(s)) {
        if (!seg)
            continue;
        if (mode == FieldMode::Rational) {
            const auto f = factor_univariate(seg->G);
            irreducible = irreducible && f.factors.size() == 1 && f.factors[0].multiplicity == 1;
        } else {
            irreducible = irreducible && seg->G.degree() == 1;
        }
    }
    if (trivial != irreducible)
        throw std::logic_error("class group triviality disagrees with irreducibility of the exchange polynomials");
    return trivial;
}

bool classical_consistency(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options) {
    for (auto d : s.d)
        if (d != 1)
            throw PreconditionError("classical", "all column divisors must be 1");
    for (const auto& f : exchange_polynomials(s))
        if (f.is_monomial())
            throw PreconditionError("classical", "an exchange polynomial is a unit");
    const ClassGroupResult g = class_group(s, mode, options);
    return g.torsion.empty() && g.r >= s.n && g.free_rank == g.r - s.n;
}

}  // namespace gca
