#include "gca/seed.hpp"

#include "gca/smith.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gca {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exchange matrix entry overflows 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exchange matrix entry overflows 64 bits");
    return r;
}

std::int64_t pos(std::int64_t t) { return t > 0 ? t : 0; }

// "b_12" for small indices, "b_{10,2}" otherwise; indices printed one-based.
std::string entry_name(const char* symbol, std::size_t r, std::size_t c) {
    std::ostringstream out;
    out << symbol << '_';
    if (r < 9 && c < 9)
        out << r + 1 << c + 1;
    else
        out << '{' << r + 1 << ',' << c + 1 << '}';
    return out.str();
}

std::vector<Violation> check_skew_symmetrizable(const GeneralizedSeed& s) {
    std::vector<Violation> out;
    const auto& B = s.B;
    for (std::size_t i = 0; i < s.n; ++i) {
        if (B(i, i) != 0)
            out.push_back({"skew-symmetrizable", entry_name("b", i, i) + " = " + std::to_string(B(i, i)) + " is not zero"});
        for (std::size_t j = i + 1; j < s.n; ++j) {
            const auto a = B(i, j), b = B(j, i);
            if ((a == 0) != (b == 0) || (a > 0 && b > 0) || (a < 0 && b < 0))
                out.push_back({"skew-symmetrizable", entry_name("b", i, j) + " and " + entry_name("b", j, i) +
                                                         " violate the sign pattern"});
        }
    }
    if (!out.empty())
        return out;

    // multipliers along a spanning forest, then every entry re-checked
    std::vector<std::optional<Rational>> D(s.n);
    for (std::size_t root = 0; root < s.n; ++root) {
        if (D[root])
            continue;
        D[root] = Rational(1);
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop();
            for (std::size_t j = 0; j < s.n; ++j) {
                if (B(i, j) == 0 || D[j])
                    continue;
                Rational v = -*D[i] * Rational(B(i, j)) / Rational(B(j, i));
                D[j] = v;
                queue.push(j);
            }
        }
    }
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j)
            if (*D[i] * B(i, j) != -*D[j] * B(j, i))
                out.push_back({"skew-symmetrizable", "no positive diagonal multiplier is consistent with " +
                                                         entry_name("b", i, j) + " and " + entry_name("b", j, i)});
    return out;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged exchange matrix");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

std::vector<std::int64_t> ExchangeMatrix::column(std::size_t c) const {
    std::vector<std::int64_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

GeneralizedSeed GeneralizedSeed::classical(const ExchangeMatrix& b, std::size_t n, GroundRing ring) {
    return with_strings(b, n, std::vector<std::vector<Rational>>(n, {1, 1}), ring);
}

GeneralizedSeed GeneralizedSeed::with_strings(const ExchangeMatrix& b, std::size_t n,
                                              const std::vector<std::vector<Rational>>& strings, GroundRing ring) {
    if (b.cols() != n || b.rows() < n || strings.size() != n)
        throw std::invalid_argument("seed shape mismatch");
    GeneralizedSeed s;
    s.ring = ring;
    s.n = n;
    s.m = b.rows() - n;
    for (std::size_t k = 0; k < b.rows(); ++k)
        s.names.push_back("x" + std::to_string(k + 1));
    s.B = b;
    for (const auto& str : strings) {
        if (str.empty())
            throw std::invalid_argument("empty coefficient string");
        s.d.push_back(static_cast<std::int64_t>(str.size()) - 1);
        std::vector<LaurentPolynomial> row;
        for (const auto& c : str)
            row.push_back(LaurentPolynomial::constant(b.rows(), c));
        s.rho.push_back(std::move(row));
    }
    return s;
}

std::vector<Violation> validate_seed(const GeneralizedSeed& s) {
    std::vector<Violation> out;
    const std::size_t N = s.n + s.m;
    if (s.B.rows() != N || s.B.cols() != s.n)
        out.push_back({"shape", "B must have " + std::to_string(N) + " rows and " + std::to_string(s.n) + " columns"});
    if (s.names.size() != N)
        out.push_back({"shape", "expected " + std::to_string(N) + " variable names"});
    if (s.d.size() != s.n)
        out.push_back({"shape", "expected " + std::to_string(s.n) + " column divisors"});
    if (s.rho.size() != s.n)
        out.push_back({"shape", "expected " + std::to_string(s.n) + " coefficient strings"});
    if (!out.empty())
        return out;

    for (std::size_t k = 0; k < N; ++k) {
        if (s.names[k].empty())
            out.push_back({"names", "variable " + std::to_string(k + 1) + " has an empty name"});
        for (std::size_t l = k + 1; l < N; ++l)
            if (s.names[k] == s.names[l])
                out.push_back({"names", "duplicate variable name " + s.names[k]});
    }

    for (auto& v : check_skew_symmetrizable(s))
        out.push_back(std::move(v));

    for (std::size_t i = 0; i < s.n; ++i) {
        const std::string di = "d_" + std::to_string(i + 1);
        if (s.d[i] <= 0) {
            out.push_back({"divisor", di + " = " + std::to_string(s.d[i]) + " is not positive"});
            continue;
        }
        for (std::size_t j = 0; j < N; ++j)
            if (s.B(j, i) % s.d[i] != 0)
                out.push_back({"divisibility", di + " ∤ " + entry_name("b", j, i) + " (" + std::to_string(s.d[i]) +
                                                   " does not divide " + std::to_string(s.B(j, i)) + ")"});

        const auto& str = s.rho[i];
        const std::string ri = "rho_" + std::to_string(i + 1);
        if (str.size() != static_cast<std::size_t>(s.d[i]) + 1) {
            out.push_back({"string-length", ri + " has " + std::to_string(str.size()) + " entries, expected " +
                                                std::to_string(s.d[i] + 1)});
            continue;
        }
        for (std::size_t j = 0; j < str.size(); ++j) {
            const std::string rij = "rho_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}";
            const auto& c = str[j];
            if (c.arity() != N) {
                out.push_back({"string-monomial", rij + " has the wrong number of variables"});
                continue;
            }
            if (!c.is_monomial()) {
                out.push_back({"string-monomial", rij + " is not a nonzero monomial"});
                continue;
            }
            for (std::size_t k = 0; k < s.n; ++k)
                if (c.involves(k)) {
                    out.push_back({"string-frozen", rij + " involves the exchangeable variable " + s.names[k]});
                    break;
                }
        }
        if (!str.front().is_one() || !str.back().is_one())
            out.push_back({"string-endpoint", ri + " must start and end with 1"});
    }
    if (out.empty())
        for (std::size_t i = 0; i < s.n; ++i)
            if (exchange_polynomial(s, i).is_zero())
                out.push_back({"exchange-polynomial-zero", "f_" + std::to_string(i + 1) + " vanishes identically"});
    return out;
}

void require_valid(const GeneralizedSeed& s) {
    auto violations = validate_seed(s);
    if (violations.empty())
        return;
    std::string message = "invalid seed:";
    for (const auto& v : violations)
        message += " " + v.message + ";";
    message.pop_back();
    throw PreconditionError("valid-seed", message);
}

LaurentPolynomial exchange_polynomial(const GeneralizedSeed& s, std::size_t i) {
    if (i >= s.n)
        throw std::out_of_range("direction out of range");
    const std::size_t N = s.n + s.m;
    const std::int64_t d = s.d[i];
    LaurentPolynomial f(N);
    for (std::int64_t j = 0; j <= d; ++j) {
        ExponentVector e(N);
        for (std::size_t k = 0; k < N; ++k) {
            const std::int64_t beta = s.B(k, i) / d;
            e[k] = checked_add(checked_mul(j, pos(beta)), checked_mul(d - j, pos(-beta)));
        }
        f += s.rho[i][static_cast<std::size_t>(j)] * LaurentPolynomial::monomial(e);
    }
    return f;
}

std::vector<LaurentPolynomial> exchange_polynomials(const GeneralizedSeed& s) {
    require_valid(s);
    std::vector<LaurentPolynomial> out;
    for (std::size_t i = 0; i < s.n; ++i)
        out.push_back(exchange_polynomial(s, i));
    return out;
}

GeneralizedSeed mutate(const GeneralizedSeed& s, std::size_t i) {
    if (i >= s.n)
        throw std::out_of_range("direction " + std::to_string(i + 1) + " out of range [1," + std::to_string(s.n) + "]");
    GeneralizedSeed t = s;
    const std::size_t N = s.n + s.m;
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < s.n; ++l) {
            if (k == i || l == i) {
                t.B(k, l) = checked_mul(-1, s.B(k, l));
                continue;
            }
            const std::int64_t bil = s.B(i, l), bki = s.B(k, i);
            t.B(k, l) = checked_add(s.B(k, l), checked_add(checked_mul(pos(bil), bki), checked_mul(bil, pos(-bki))));
        }
    std::reverse(t.rho[i].begin(), t.rho[i].end());
    auto& name = t.names[i];
    if (!name.empty() && name.back() == '\'')
        name.pop_back();
    else
        name.push_back('\'');
    return t;
}

DirectedGraph digraph(const GeneralizedSeed& s) {
    DirectedGraph g;
    g.vertices = s.n + s.m;
    for (std::size_t i = 0; i < s.B.rows(); ++i)
        for (std::size_t j = 0; j < s.B.cols(); ++j)
            if (s.B(i, j) > 0)
                g.edges.emplace_back(i, j);
    return g;
}

bool is_acyclic(const GeneralizedSeed& s) {
    const DirectedGraph g = digraph(s);
    std::vector<std::size_t> indegree(g.vertices, 0);
    std::vector<std::vector<std::size_t>> out(g.vertices);
    for (const auto& [a, b] : g.edges) {
        out[a].push_back(b);
        ++indegree[b];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < g.vertices; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto w : out[v])
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return seen == g.vertices;
}

bool is_coprime(const GeneralizedSeed& s) {
    const auto f = exchange_polynomials(s);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!gca::gcd(f[i], f[j]).is_constant())
                return false;
            if (s.ring == GroundRing::Integers && f[i].is_constant() && f[j].is_constant()) {
                // over Z the constants themselves must be coprime integers
                Integer a = f[i].constant_term().get_num(), b = f[j].constant_term().get_num();
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1)
                    return false;
            }
        }
    return true;
}

CoprimalityCriteria coprimality_criteria(const GeneralizedSeed& s) {
    require_valid(s);
    CoprimalityCriteria c;
    IntegerMatrix M(s.B.rows(), s.B.cols());
    for (std::size_t r = 0; r < s.B.rows(); ++r)
        for (std::size_t k = 0; k < s.B.cols(); ++k)
            M(r, k) = Integer(static_cast<long>(s.B(r, k)));
    c.full_rank = rational_rank(M) == s.n;
    c.no_proportional_columns = true;
    for (std::size_t i = 0; i < s.n && c.no_proportional_columns; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j) {
            bool proportional = true;
            for (std::size_t r = 0; r < s.B.rows() && proportional; ++r)
                for (std::size_t q = r + 1; q < s.B.rows(); ++q) {
                    const __int128 lhs = static_cast<__int128>(s.B(r, i)) * s.B(q, j);
                    const __int128 rhs = static_cast<__int128>(s.B(q, i)) * s.B(r, j);
                    if (lhs != rhs) {
                        proportional = false;
                        break;
                    }
                }
            if (proportional) {
                c.no_proportional_columns = false;
                break;
            }
        }
    return c;
}

bool rank_two_exchange_identities(const GeneralizedSeed& seed) {
    require_valid(seed);
    if (seed.n != 2)
        throw PreconditionError("rank-two", "the exchange identities are stated for seeds with two exchangeable variables");
    GeneralizedSeed s = seed;
    if (s.B(0, 1) == 0)
        throw PreconditionError("sign", "b_12 = 0, so no labeling makes b_12 positive");
    if (s.B(0, 1) < 0) {
        // relabel 1 <-> 2
        GeneralizedSeed t = s;
        const std::size_t N = s.n + s.m;
        std::vector<std::size_t> perm(N);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[1]);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                t.B(perm[r], perm[c]) = s.B(r, c);
        std::swap(t.d[0], t.d[1]);
        std::swap(t.rho[0], t.rho[1]);
        std::swap(t.names[0], t.names[1]);
        s = t;
    }
    const GeneralizedSeed sp = mutate(s, 0);
    const std::size_t N = s.n + s.m;
    const std::int64_t b = s.B(0, 1);
    const std::int64_t d2 = s.d[1];
    const std::int64_t beta12 = b / d2;

    auto frozen_product = [&](auto exponent) {
        ExponentVector e(N, 0);
        for (std::size_t j = 2; j < N; ++j)
            e[j] = exponent(j);
        return LaurentPolynomial::monomial(e);
    };
    const auto r1 = frozen_product([&](std::size_t j) { return pos(s.B(j, 0)); });
    const auto q2 = frozen_product([&](std::size_t j) { return pos(s.B(j, 1)); });
    const auto r2 = frozen_product([&](std::size_t j) { return pos(-s.B(j, 1)); });
    const auto q3 = frozen_product([&](std::size_t j) { return pos(-sp.B(j, 1)); });
    const auto r3 = frozen_product([&](std::size_t j) { return pos(sp.B(j, 1)); });

    if (r2 * r3 != q2 * q3 * r1.pow(b))
        return false;
    for (std::int64_t k = 1; k < d2; ++k) {
        const auto& rho = s.rho[1][static_cast<std::size_t>(k)];
        const auto g = rho * frozen_product([&](std::size_t j) {
            const std::int64_t beta = s.B(j, 1) / d2;
            return k * pos(beta) + (d2 - k) * pos(-beta);
        });
        const auto h = rho * frozen_product([&](std::size_t j) {
            const std::int64_t beta = sp.B(j, 1) / d2;
            return k * pos(beta) + (d2 - k) * pos(-beta);
        });
        if (h * r2 != g * q3 * r1.pow(k * beta12))
            return false;
    }
    return true;
}

}  // namespace gca
