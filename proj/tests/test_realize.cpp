#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gca/realize.hpp"
#include "test_support.hpp"

#include <chrono>
#include <map>

using namespace gca;
using namespace gca::testing;

namespace {

std::vector<std::vector<std::int64_t>> matrix(const ExchangeMatrix& B) {
    std::vector<std::vector<std::int64_t>> out(B.rows());
    for (std::size_t r = 0; r < B.rows(); ++r)
        for (std::size_t c = 0; c < B.cols(); ++c)
            out[r].push_back(B(r, c));
    return out;
}

std::vector<std::string> exchange_strings(const GeneralizedSeed& s) {
    std::vector<std::string> out;
    for (const auto& f : exchange_polynomials(s))
        out.push_back(to_string(f, s.names));
    return out;
}

// invariant factors through elementary divisors: group prime powers by prime,
// then multiply the largest powers together, the next largest, and so on
std::vector<Integer> invariant_factors_oracle(const std::vector<std::int64_t>& torsion) {
    std::map<std::int64_t, std::vector<std::int64_t>> powers;
    for (auto t : torsion) {
        for (std::int64_t p = 2; t > 1; ++p) {
            std::int64_t q = 1;
            while (t % p == 0) {
                t /= p;
                q *= p;
            }
            if (q > 1)
                powers[p].push_back(q);
        }
    }
    std::size_t length = 0;
    for (auto& [p, qs] : powers) {
        std::sort(qs.rbegin(), qs.rend());
        length = std::max(length, qs.size());
    }
    std::vector<Integer> out(length, 1);
    for (const auto& [p, qs] : powers)
        for (std::size_t i = 0; i < qs.size(); ++i)
            out[length - 1 - i] *= qs[i];
    return out;
}

std::vector<AbelianGroupSpec> sweep() {
    std::vector<AbelianGroupSpec> out;
    for (std::size_t free = 0; free <= 3; ++free) {
        out.push_back({free, {}});
        for (std::int64_t a = 2; a <= 6; ++a) {
            out.push_back({free, {a}});
            for (std::int64_t b = a; b <= 6; ++b) {
                out.push_back({free, {a, b}});
                for (std::int64_t c = b; c <= 6; ++c)
                    out.push_back({free, {a, b, c}});
            }
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("AbelianGroupSpec") {
    TEST_CASE("normalization strips ones and sorts") {
        CHECK(AbelianGroupSpec{1, {4, 1, 2}}.normalized() == AbelianGroupSpec{1, {2, 4}});
        CHECK(AbelianGroupSpec{0, {1, 1}}.trivial());
        CHECK_FALSE(AbelianGroupSpec{0, {2}}.trivial());
        CHECK_THROWS_AS((AbelianGroupSpec{0, {0}}.normalized()), std::invalid_argument);
    }

    TEST_CASE("invariant factors against elementary divisors") {
        for (const auto& g : sweep())
            CHECK(invariant_factors(g) == invariant_factors_oracle(g.torsion));
        CHECK(invariant_factors({0, {2, 3}}) == std::vector<Integer>{6});
        CHECK(invariant_factors({0, {4, 6}}) == std::vector<Integer>{2, 12});
    }
}

TEST_SUITE("realize_seed") {
    TEST_CASE("Z/2 is the pure torsion construction with k = 1") {
        const auto s = realize_seed({0, {2}});
        CHECK(matrix(s.B) == std::vector<std::vector<std::int64_t>>{{0, -1}, {2, 0}});
        CHECK(s.d == std::vector<std::int64_t>{2, 1});
        REQUIRE(s.rho[0].size() == 3);
        CHECK(str(s.rho[0][1]) == "2");
        CHECK(exchange_strings(s) == std::vector<std::string>{"x2^2 + 2*x2 + 1", "x1 + 1"});
        CHECK(s.ring == GroundRing::AlgebraicClosure);
    }

    TEST_CASE("Z^2 is the classical rank-2 seed with m = 3") {
        const auto s = realize_seed({2, {}});
        CHECK(matrix(s.B) == std::vector<std::vector<std::int64_t>>{{0, 3}, {-1, 0}});
        CHECK(exchange_strings(s) == std::vector<std::string>{"x2 + 1", "x1^3 + 1"});
    }

    TEST_CASE("Z^2 + Z/3 is the mixed construction") {
        const auto s = realize_seed({2, {3}});
        CHECK(s.n == 4);
        CHECK(s.m == 0);
        CHECK(exchange_strings(s) ==
              std::vector<std::string>{"x4^3 + 1", "x3^3 + 3*x3^2 + 3*x3 + 1", "x2 + 1", "x1 + 1"});
        CHECK(s.d == std::vector<std::int64_t>{1, 3, 1, 1});
    }

    TEST_CASE("trivial group gives one irreducible exchange polynomial") {
        const auto s = realize_seed({0, {1}});
        CHECK(s.n == 1);
        CHECK(exchange_strings(s) == std::vector<std::string>{"x2 + 1"});
        CHECK(is_factorial(s, FieldMode::AlgebraicallyClosed));
    }

    TEST_CASE("torsion exchange polynomials are binomial powers") {
        for (const auto& g : sweep()) {
            const auto s = realize_seed(g);
            const auto k = g.torsion.size();
            if (k == 0)
                continue;
            const std::size_t shift = g.free_rank > 0 ? 1 : 0;
            const std::size_t N = s.n;
            const auto f = exchange_polynomials(s);
            for (std::size_t i = 0; i < N; ++i) {
                if (shift && i == 0)
                    continue;
                ExponentVector e(N, 0);
                e[N - 1 - i] = 1;
                const auto g_i = LaurentPolynomial::monomial(e, 1) + LaurentPolynomial::constant(N, 1);
                const std::int64_t power = i >= shift && i < shift + k ? g.torsion[i - shift] : 1;
                CHECK(f[i] == g_i.pow(power));
            }
        }
    }

    TEST_CASE("realized seeds are valid, acyclic, coprime and of full rank") {
        for (const auto& g : sweep()) {
            const auto s = realize_seed(g);
            CHECK(validate_seed(s).empty());
            CHECK(is_acyclic(s));
            CHECK(is_coprime(s));
            const auto c = coprimality_criteria(s);
            CHECK(c.full_rank);
        }
    }
}

TEST_SUITE("verify_realization") {
    TEST_CASE("Z/2") {
        CHECK(verify_realization({0, {2}}));
        const auto c = class_group(realize_seed({0, {2}}), FieldMode::AlgebraicallyClosed);
        REQUIRE(c.valuation.rows() == 2);
        CHECK(c.valuation(0, 0) == 2);
        CHECK(c.valuation(1, 1) == 1);
    }

    TEST_CASE("torsion entries of one are stripped") {
        CHECK(verify_realization({1, {1, 3}}));
        CHECK(realize_seed({1, {1, 3}}) == realize_seed({1, {3}}));
    }

    TEST_CASE("sweep of free rank 3, three torsion entries up to 6") {
        const auto start = std::chrono::steady_clock::now();
        for (const auto& g : sweep()) {
            INFO("free rank " << g.free_rank << ", " << g.torsion.size() << " torsion entries");
            CHECK(verify_realization(g));
            const auto c = class_group(realize_seed(g), FieldMode::AlgebraicallyClosed);
            CHECK(c.free_rank == g.free_rank);
            CHECK(c.torsion == invariant_factors_oracle(g.torsion));
        }
        CHECK(std::chrono::steady_clock::now() - start < std::chrono::minutes(1));
    }
}
