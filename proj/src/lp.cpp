#include "gca/lp.hpp"

#include "gca/errors.hpp"
#include "gca/segment.hpp"
#include "gca/text.hpp"
#include "gca/univariate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gca {

namespace {

std::string toggled(std::string name) {
    if (!name.empty() && name.back() == '\'')
        name.pop_back();
    else
        name.push_back('\'');
    return name;
}

bool integral(const LaurentPolynomial& f) {
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second.get_den() == 1; });
}

std::optional<bool> segment_irreducible(const LaurentPolynomial& f, GroundRing ring) {
    const auto seg = segment_decompose(f);
    if (!seg)
        return std::nullopt;
    const auto G = seg->inflated_profile();
    if (ring == GroundRing::AlgebraicClosure)
        return G.degree() == 1;
    const auto factors = factor_univariate(G).factors;
    return factors.size() == 1 && factors[0].multiplicity == 1;
}

LaurentPolynomial largest_power_quotient(LaurentPolynomial p, const LaurentPolynomial& f, std::int64_t& power) {
    power = 0;
    while (auto q = divide_exact(p, f)) {
        p = std::move(*q);
        ++power;
    }
    return p;
}

}  // namespace

LPSeed LPSeed::from_polynomials(std::vector<LaurentPolynomial> F, GroundRing ring) {
    LPSeed s;
    s.ring = ring;
    s.n = F.size();
    s.names = default_names(s.n);
    s.F = std::move(F);
    return s;
}

LPValidation validate_lp_seed(const LPSeed& s) {
    LPValidation out;
    auto violate = [&](std::string code, std::string message) {
        out.violations.push_back({std::move(code), std::move(message)});
    };
    if (s.F.size() != s.n || s.names.size() != s.n) {
        violate("shape", "expected " + std::to_string(s.n) + " polynomials and names");
        return out;
    }
    for (std::size_t i = 0; i < s.n; ++i) {
        const auto& f = s.F[i];
        const std::string label = "F_" + std::to_string(i + 1);
        if (f.arity() != s.n) {
            violate("shape", label + " has arity " + std::to_string(f.arity()));
            continue;
        }
        if (!f.is_polynomial())
            violate("not-polynomial", label + " has a negative exponent");
        if (s.ring == GroundRing::Integers && !integral(f))
            violate("integer-coefficients", label + " has a non-integer coefficient");
        if (f.is_constant()) {
            violate("constant", label + " is constant");
            continue;
        }
        if (f.involves(i))
            violate("self-dependence", label + " depends on " + s.names[i]);
        for (std::size_t j = 0; j < s.n; ++j)
            if (f.min_degree(j) > 0)
                violate("variable-divisor", s.names[j] + " divides " + label);
    }
    if (!out.violations.empty())
        return out;
    for (std::size_t i = 0; i < s.n; ++i) {
        const std::string label = "F_" + std::to_string(i + 1);
        if (s.ring == GroundRing::Integers && s.F[i].content() != 1)
            violate("reducible", label + " has a non-unit content");
        const auto irreducible = segment_irreducible(s.F[i], s.ring);
        if (irreducible && !*irreducible)
            violate("reducible", label + " factors");
        out.irreducibility.push_back(irreducible ? Irreducibility::Verified : Irreducibility::AcceptedUnverified);
    }
    return out;
}

void require_valid(const LPSeed& s) {
    const auto v = validate_lp_seed(s);
    if (v.ok())
        return;
    std::string message;
    for (const auto& x : v.violations)
        message += (message.empty() ? "" : "; ") + x.message;
    throw PreconditionError("valid-lp-seed", message);
}

ExchangeLaurent exchange_laurent(const LPSeed& s) {
    require_valid(s);
    const std::size_t n = s.n;
    // fresh symbol at index n stands for 1/x in F_j|_{x_k <- F_k/x}
    const auto fresh = LaurentPolynomial::variable(n + 1, n);
    ExchangeLaurent out;
    for (std::size_t j = 0; j < n; ++j) {
        const auto Fj = s.F[j].extended(n + 1);
        ExponentVector a(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j)
                continue;
            const auto Fk = s.F[k].extended(n + 1);
            largest_power_quotient(Fj.substitute(k, Fk * fresh), Fk, a[k]);
        }
        ExponentVector shift(n);
        for (std::size_t k = 0; k < n; ++k)
            shift[k] = -a[k];
        out.Fhat.push_back(s.F[j].shifted(shift));
        out.exponents.push_back(std::move(a));
    }
    return out;
}

LPSeed canonical(const LPSeed& s) {
    LPSeed out = s;
    for (auto& f : out.F) {
        if (f.is_zero())
            continue;
        if (s.ring == GroundRing::Integers)
            f *= Rational(f.leading_coefficient() > 0 ? 1 : -1);
        else
            f = f.primitive();
    }
    return out;
}

LPSeed lp_mutate(const LPSeed& input, std::size_t k) {
    if (k >= input.n)
        throw std::out_of_range("mutation direction out of range");
    LPSeed s = input;
    require_valid(s);
    for (auto& f : s.F)
        f = f.normalized();
    const auto Fhat = exchange_laurent(s).Fhat;
    const auto inverse_new = LaurentPolynomial::variable(s.n, k, -1);
    LPSeed out = s;
    out.names[k] = toggled(s.names[k]);
    for (std::size_t i = 0; i < s.n; ++i) {
        if (i == k || !s.F[i].involves(k))
            continue;
        const auto at_zero = Fhat[k].evaluate_at_zero(i);
        if (!at_zero || at_zero->is_zero())
            throw PreconditionError("substitution", "F^_" + std::to_string(k + 1) + " at " + s.names[i] +
                                                        " = 0 is undefined or zero");
        LaurentPolynomial H = s.F[i].substitute(k, *at_zero * inverse_new);
        for (;;) {
            const auto g = gcd(H, *at_zero);
            if (g.is_constant())
                break;
            H = *divide_exact(H, g);
        }
        out.F[i] = H.normalized();
    }
    return out;
}

RationalExpression lp_exchange(const LPSeed& s, std::size_t k, const std::vector<RationalExpression>& cluster) {
    if (k >= s.n)
        throw std::out_of_range("mutation direction out of range");
    LPSeed normal = s;
    for (auto& f : normal.F)
        f = f.normalized();
    return evaluate(exchange_laurent(normal).Fhat[k], cluster) / cluster[k];
}

bool seeds_equivalent(const LPSeed& a, const LPSeed& b) {
    if (a.n != b.n)
        return false;
    const GroundRing ring = a.ring == GroundRing::Integers || b.ring == GroundRing::Integers ? GroundRing::Integers
                                                                                            : GroundRing::Rationals;
    LPSeed x = a, y = b;
    x.ring = y.ring = ring;
    return canonical(x).F == canonical(y).F;
}

bool is_sign_skew_symmetric(const LPSeed& s) {
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j)
            if (s.F[j].involves(i) != s.F[i].involves(j))
                return false;
    return true;
}

LPSeed lp_seed_from_classical(const GeneralizedSeed& s) {
    if (s.m != 0 || std::any_of(s.d.begin(), s.d.end(), [](auto d) { return d != 1; }))
        throw PreconditionError("classical", "expected a classical seed without frozen variables");
    LPSeed out;
    out.ring = s.ring;
    out.n = s.n;
    out.names = s.names;
    out.F = exchange_polynomials(s);
    return out;
}

LPEnumeration enumerate_lp_cluster_variables(const LPSeed& s0, std::size_t depth) {
    require_valid(s0);
    struct Node {
        LPSeed seed;
        std::vector<RationalExpression> cluster;
    };
    std::vector<RationalExpression> initial;
    for (std::size_t i = 0; i < s0.n; ++i)
        initial.emplace_back(LaurentPolynomial::variable(s0.n, i));

    LPEnumeration out;
    std::set<RationalExpression> variables(initial.begin(), initial.end());
    std::set<std::pair<std::vector<RationalExpression>, std::vector<LaurentPolynomial>>> seen;
    std::vector<Node> frontier{{canonical(s0), initial}};
    seen.insert({initial, frontier[0].seed.F});

    auto note = [&](const LPSeed& s) {
        ++out.seeds_visited;
        auto Fhat = exchange_laurent(s).Fhat;
        std::sort(Fhat.begin(), Fhat.end());
        if (std::adjacent_find(Fhat.begin(), Fhat.end()) != Fhat.end())
            ++out.repeated_exchange_laurent;
    };
    note(frontier[0].seed);

    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (std::size_t k = 0; k < s0.n; ++k) {
                Node child{lp_mutate(node.seed, k), node.cluster};
                child.cluster[k] = lp_exchange(node.seed, k, node.cluster);
                if (!child.cluster[k].is_laurent())
                    throw std::logic_error("LP cluster variable is not a Laurent polynomial");
                if (!seen.insert({child.cluster, child.seed.F}).second)
                    continue;
                variables.insert(child.cluster[k]);
                note(child.seed);
                next.push_back(std::move(child));
            }
        frontier = std::move(next);
    }
    out.variables.assign(variables.begin(), variables.end());
    return out;
}

}  // namespace gca
