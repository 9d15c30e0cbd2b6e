#pragma once

// Independent reference computations used only by the test suites. Nothing
// here shares code paths with the library routines under test beyond the
// basic polynomial containers.

#include "gca/smith.hpp"
#include "gca/univariate.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace gca::oracle {

inline std::vector<Integer> positive_divisors(Integer v) {
    v = abs(v);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v)
                large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Lagrange interpolation through (xs[i], ys[i]).
inline UnivariatePolynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    UnivariatePolynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UnivariatePolynomial basis({1L});
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j)
                continue;
            basis = basis * UnivariatePolynomial(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        result = result + Rational(Rational(ys[i]) / denom) * basis;
    }
    return result;
}

inline bool has_integer_coefficients(const UnivariatePolynomial& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

/// Kronecker's method: a non-trivial factor of the primitive integer
/// polynomial f, or nullopt when f is irreducible over the rationals.
inline std::optional<UnivariatePolynomial> kronecker_factor(const UnivariatePolynomial& f) {
    const long n = f.degree();
    if (n <= 1)
        return std::nullopt;
    // candidate evaluation points, ordered by how few divisors the value has
    std::vector<std::pair<std::size_t, Integer>> points;
    for (long a = -12; a <= 12; ++a) {
        Rational v = f.evaluate(Rational(a));
        if (v == 0)
            return UnivariatePolynomial(std::vector<Rational>{Rational(-a), Rational(1)});
        points.emplace_back(positive_divisors(v.get_num()).size(), Integer(a));
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (long d = 1; 2 * d <= n; ++d) {
        std::vector<Integer> xs;
        std::vector<std::vector<Integer>> choices;
        for (long i = 0; i <= d; ++i) {
            const Integer& a = points[static_cast<std::size_t>(i)].second;
            xs.push_back(a);
            Integer v = f.evaluate(Rational(a)).get_num();
            std::vector<Integer> divs = positive_divisors(v);
            std::vector<Integer> signed_divs;
            for (const auto& q : divs) {
                signed_divs.push_back(q);
                if (i > 0)
                    signed_divs.push_back(-q);
            }
            choices.push_back(std::move(signed_divs));
        }
        std::vector<Integer> ys(xs.size());
        std::optional<UnivariatePolynomial> hit;
        std::function<void(std::size_t)> walk = [&](std::size_t k) {
            if (hit)
                return;
            if (k == xs.size()) {
                UnivariatePolynomial h = interpolate(xs, ys);
                if (h.degree() != d || !has_integer_coefficients(h))
                    return;
                auto [q, r] = divmod(f, h);
                if (r.is_zero() && has_integer_coefficients(q))
                    hit = h.primitive();
                return;
            }
            for (const auto& c : choices[k]) {
                ys[k] = c;
                walk(k + 1);
                if (hit)
                    return;
            }
        };
        walk(0);
        if (hit)
            return hit;
    }
    return std::nullopt;
}

inline bool kronecker_irreducible(const UnivariatePolynomial& f) {
    return f.degree() >= 1 && !kronecker_factor(f.primitive());
}

/// Complete factorization by repeated Kronecker splitting; irreducible
/// factors primitive with positive leading coefficient, with multiplicity,
/// sorted like factor_univariate.
inline std::vector<FactorPower> kronecker_factorization(const UnivariatePolynomial& g) {
    std::vector<UnivariatePolynomial> stack{g.primitive()};
    std::vector<UnivariatePolynomial> irreducibles;
    while (!stack.empty()) {
        UnivariatePolynomial f = stack.back();
        stack.pop_back();
        if (f.degree() < 1)
            continue;
        if (auto h = kronecker_factor(f)) {
            stack.push_back(h->primitive());
            stack.push_back(divmod(f, *h).first.primitive());
        } else {
            irreducibles.push_back(f.primitive());
        }
    }
    std::sort(irreducibles.begin(), irreducibles.end());
    std::vector<FactorPower> out;
    for (const auto& f : irreducibles) {
        if (!out.empty() && out.back().factor == f)
            ++out.back().multiplicity;
        else
            out.push_back({f, 1});
    }
    return out;
}

inline Integer determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

/// Invariant factors as ratios of determinantal divisors (gcd of k×k minors).
inline std::vector<Integer> determinantal_invariants(const IntegerMatrix& m) {
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs;
        std::vector<std::vector<std::size_t>> cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = m(r[i], c[j]);
                Integer det = determinant(minor);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

}  // namespace gca::oracle
