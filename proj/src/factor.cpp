// Univariate factorization over the rationals: squarefree decomposition,
// then Cantor-Zassenhaus modulo a prime above twice the Mignotte bound, then
// recombination of modular factors by increasing subset size.

#include "gca/univariate.hpp"

#include <algorithm>
#include <functional>

namespace gca {

namespace {

using ModPoly = std::vector<Integer>;  // ascending, trimmed, entries in [0, p)

class PrimeField {
public:
    explicit PrimeField(Integer p) : p_(std::move(p)) {}
    const Integer& modulus() const { return p_; }

    Integer reduce(const Integer& a) const {
        Integer r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Integer inverse(const Integer& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible element modulo p");
        return r;
    }

    static void trim(ModPoly& a) {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    static long degree(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] = reduce(r[i] - b[i]);
        trim(r);
        return r;
    }

    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty())
            return {};
        ModPoly r(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        for (auto& c : r)
            c = reduce(c);
        trim(r);
        return r;
    }

    std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
        ModPoly r = a;
        if (r.size() < b.size())
            return {{}, r};
        const std::size_t db = b.size() - 1;
        const Integer inv = inverse(b.back());
        ModPoly q(r.size() - db, Integer(0));
        for (std::size_t k = r.size(); k-- > db;) {
            Integer c = reduce(r[k] * inv);
            q[k - db] = c;
            if (c != 0)
                for (std::size_t j = 0; j <= db; ++j)
                    r[k - db + j] = reduce(r[k - db + j] - c * b[j]);
        }
        r.resize(db);
        trim(r);
        trim(q);
        return {q, r};
    }

    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

    ModPoly monic(const ModPoly& a) const {
        if (a.empty())
            return a;
        const Integer inv = inverse(a.back());
        ModPoly r = a;
        for (auto& c : r)
            c = reduce(c * inv);
        return r;
    }

    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
        ModPoly result{Integer(1)};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                result = rem(mul(result, base), m);
            e >>= 1;
            if (e > 0)
                base = rem(mul(base, base), m);
        }
        return result;
    }

    ModPoly derivative(const ModPoly& a) const {
        if (a.size() <= 1)
            return {};
        ModPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i)
            r[i - 1] = reduce(a[i] * static_cast<unsigned long>(i));
        trim(r);
        return r;
    }

private:
    Integer p_;
};

std::vector<Integer> integer_coefficients(const UnivariatePolynomial& f) {
    std::vector<Integer> out;
    for (const auto& c : f.coefficients()) {
        if (c.get_den() != 1)
            throw std::logic_error("expected integer coefficients");
        out.push_back(c.get_num());
    }
    return out;
}

ModPoly to_mod(const std::vector<Integer>& f, const PrimeField& field) {
    ModPoly r;
    for (const auto& c : f)
        r.push_back(field.reduce(c));
    PrimeField::trim(r);
    return r;
}

// Lift a residue polynomial to the symmetric range (-p/2, p/2].
UnivariatePolynomial symmetric_lift(const ModPoly& a, const Integer& p) {
    const Integer half = p / 2;
    std::vector<Rational> cs;
    for (const auto& c : a)
        cs.emplace_back(c > half ? Integer(c - p) : c);
    return UnivariatePolynomial(std::move(cs));
}

std::vector<ModPoly> distinct_degree(ModPoly f, const PrimeField& field, std::vector<long>& degrees) {
    std::vector<ModPoly> out;
    const ModPoly x{Integer(0), Integer(1)};
    ModPoly h = x;
    for (long d = 1; 2 * d <= PrimeField::degree(f); ++d) {
        h = field.powmod(h, field.modulus(), f);
        ModPoly g = field.gcd(field.sub(h, x), f);
        if (PrimeField::degree(g) > 0) {
            out.push_back(g);
            degrees.push_back(d);
            f = field.divmod(f, g).first;
            h = field.rem(h, f);
        }
    }
    if (PrimeField::degree(f) > 0) {
        degrees.push_back(PrimeField::degree(f));
        out.push_back(field.monic(f));
    }
    return out;
}

void equal_degree(const ModPoly& g, long d, const PrimeField& field, gmp_randclass& rng,
                  std::vector<ModPoly>& out) {
    const long n = PrimeField::degree(g);
    if (n == d) {
        out.push_back(field.monic(g));
        return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), field.modulus().get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        ModPoly a(static_cast<std::size_t>(n));
        for (auto& c : a)
            c = rng.get_z_range(field.modulus());
        PrimeField::trim(a);
        if (PrimeField::degree(a) < 1)
            continue;
        ModPoly b = field.sub(field.powmod(a, e, g), ModPoly{Integer(1)});
        ModPoly c = field.gcd(b, g);
        const long dc = PrimeField::degree(c);
        if (dc > 0 && dc < n) {
            equal_degree(c, d, field, rng, out);
            equal_degree(field.divmod(g, c).first, d, field, rng, out);
            return;
        }
    }
}

bool exact_divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b, UnivariatePolynomial& q) {
    auto [quot, r] = divmod(a, b);
    if (!r.is_zero())
        return false;
    q = std::move(quot);
    return true;
}

// f primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<UnivariatePolynomial> factor_squarefree(const UnivariatePolynomial& f) {
    if (f.degree() == 1)
        return {f};
    const std::vector<Integer> fz = integer_coefficients(f);
    const unsigned long n = static_cast<unsigned long>(f.degree());

    Integer max_abs = 0;
    for (const auto& c : fz)
        max_abs = std::max(max_abs, Integer(abs(c)));
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
    const Integer lc = abs(fz.back());
    Integer bound = lc * binom * Integer(n + 1) * max_abs;

    Integer p = 2 * bound + 1;
    PrimeField field(0);
    ModPoly fp;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p == 2)
            continue;
        field = PrimeField(p);
        if (field.reduce(fz.back()) == 0)
            continue;
        fp = to_mod(fz, field);
        if (PrimeField::degree(field.gcd(fp, field.derivative(fp))) == 0)
            break;
    }

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    std::vector<long> degrees;
    std::vector<ModPoly> blocks = distinct_degree(field.monic(fp), field, degrees);
    std::vector<ModPoly> modular;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        equal_degree(blocks[i], degrees[i], field, rng, modular);
    if (modular.size() == 1)
        return {f};

    std::vector<UnivariatePolynomial> found;
    UnivariatePolynomial rest = f;
    std::vector<std::size_t> remaining(modular.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
        remaining[i] = i;

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> pick(s);
        // enumerate s-subsets of `remaining` in lexicographic order
        std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
            if (depth == s) {
                const Integer lc_rest = rest.leading_coefficient().get_num();
                ModPoly prod{field.reduce(lc_rest)};
                for (auto idx : pick)
                    prod = field.mul(prod, modular[remaining[idx]]);
                UnivariatePolynomial candidate = symmetric_lift(prod, p).primitive();
                UnivariatePolynomial quotient;
                if (candidate.degree() > 0 && exact_divide(rest, candidate, quotient)) {
                    found.push_back(candidate);
                    rest = quotient.primitive();
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0; i < remaining.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            keep.push_back(remaining[i]);
                    remaining = std::move(keep);
                    return true;
                }
                return false;
            }
            for (std::size_t i = start; i < remaining.size(); ++i) {
                pick[depth] = i;
                if (search(i + 1, depth + 1))
                    return true;
            }
            return false;
        };
        hit = search(0, 0);
        if (!hit)
            ++s;
    }
    if (rest.degree() > 0)
        found.push_back(rest.primitive());
    return found;
}

}  // namespace

Factorization factor_univariate(const UnivariatePolynomial& g) {
    if (g.degree() < 1)
        throw ConstantPolynomial("factorization of a constant");
    Factorization sqf = squarefree_decompose(g);
    Factorization out;
    for (const auto& block : sqf.factors)
        for (auto& irreducible : factor_squarefree(block.factor))
            out.factors.push_back({std::move(irreducible), block.multiplicity});
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor != b.factor)
            return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    Rational lc = 1;
    for (const auto& f : out.factors)
        for (unsigned k = 0; k < f.multiplicity; ++k)
            lc *= f.factor.leading_coefficient();
    out.unit = g.leading_coefficient() / lc;
    return out;
}

}  // namespace gca
