#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gca/errors.hpp"
#include "gca/lp.hpp"
#include "test_support.hpp"

#include <set>

using namespace gca;
using namespace gca::testing;

namespace {

LPSeed lp(const std::vector<std::string>& F, GroundRing ring = GroundRing::Rationals) {
    std::vector<LaurentPolynomial> polys;
    for (const auto& f : F)
        polys.push_back(poly(f, F.size()));
    return LPSeed::from_polynomials(std::move(polys), ring);
}

LPSeed a3() { return lp({"x2 + 1", "x1 + x3", "x2 + 1"}); }
LPSeed markov() { return lp({"x2^2 + x3^2", "x1^2 + x3^2", "x1^2 + x2^2"}); }

std::vector<std::string> strings(const std::vector<LaurentPolynomial>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs)
        out.push_back(str(f));
    return out;
}

bool has_code(const LPValidation& v, const std::string& code) {
    for (const auto& x : v.violations)
        if (x.code == code)
            return true;
    return false;
}

// a·x_j + b with a, b coprime in the remaining variable: irreducible, degree 1 in x_j
LaurentPolynomial random_linear(std::mt19937& rng, std::size_t i) {
    const std::size_t j = (i + 1 + static_cast<std::size_t>(uniform(rng, 0, 1))) % 3;
    const std::size_t other = 3 - i - j;
    auto part = [&] {
        LaurentPolynomial p(3);
        const long terms = uniform(rng, 1, 2);
        for (long t = 0; t < terms; ++t) {
            ExponentVector e(3, 0);
            e[other] = uniform(rng, 0, 2);
            p.add_term(e, Rational(uniform(rng, 1, 3)));
        }
        return p;
    };
    for (;;) {
        const auto a = part(), b = part();
        if (!gcd(a, b).is_constant())
            continue;
        const auto f = (a * LaurentPolynomial::variable(3, j) + b).normalized();
        if (f.min_exponents() == ExponentVector(3, 0) && f.size() > 1)
            return f;
    }
}

LPSeed random_lp_seed(std::mt19937& rng) {
    for (;;) {
        std::vector<LaurentPolynomial> F;
        for (std::size_t i = 0; i < 3; ++i)
            F.push_back(random_linear(rng, i));
        auto s = LPSeed::from_polynomials(F);
        if (validate_lp_seed(s).ok())
            return s;
    }
}

std::vector<std::string> variable_strings(const LPEnumeration& e) {
    std::vector<std::string> out;
    for (const auto& v : e.variables)
        out.push_back(v.to_string(default_names(3)));
    std::sort(out.begin(), out.end());
    return out;
}

std::string expr(const std::string& num, const std::string& den) {
    return RationalExpression::fraction(poly(num), poly(den)).to_string(default_names(3));
}

}  // namespace

TEST_SUITE("validate_lp_seed") {
    TEST_CASE("A3 seed is valid and its polynomials are verified irreducible") {
        const auto v = validate_lp_seed(a3());
        CHECK(v.ok());
        CHECK(v.irreducibility == std::vector<Irreducibility>(3, Irreducibility::Verified));
    }

    TEST_CASE("self-dependence") {
        CHECK(has_code(validate_lp_seed(lp({"x1 + x2", "x1 + 1", "x1 + 1"})), "self-dependence"));
    }

    TEST_CASE("Markov seed is valid; x^2+y^2 is a segment, so its irreducibility is decided") {
        const auto v = validate_lp_seed(markov());
        CHECK(v.ok());
        CHECK(v.irreducibility == std::vector<Irreducibility>(3, Irreducibility::Verified));
        auto closed = markov();
        closed.ring = GroundRing::AlgebraicClosure;
        CHECK(has_code(validate_lp_seed(closed), "reducible"));
    }

    TEST_CASE("polynomials off a segment are accepted unverified") {
        const auto v = validate_lp_seed(lp({"x2*x3 + x2 + 1", "x1 + 1", "x1 + 1"}));
        CHECK(v.ok());
        CHECK(v.irreducibility[0] == Irreducibility::AcceptedUnverified);
    }

    TEST_CASE("other violations") {
        CHECK(has_code(validate_lp_seed(lp({"x2^2 + 2*x2 + 1", "x1 + 1", "x1 + 1"})), "reducible"));
        CHECK(has_code(validate_lp_seed(lp({"x2*x3 + x2", "x1 + 1", "x1 + 1"})), "variable-divisor"));
        CHECK(has_code(validate_lp_seed(lp({"2", "x1 + 1", "x1 + 1"})), "constant"));
        CHECK(has_code(validate_lp_seed(lp({"x2^-1 + 1", "x1 + 1", "x1 + 1"})), "not-polynomial"));
        CHECK(has_code(validate_lp_seed(lp({"2*x2 + 2", "x1 + 1", "x1 + 1"}, GroundRing::Integers)), "reducible"));
        CHECK(validate_lp_seed(lp({"2*x2 + 2", "x1 + 1", "x1 + 1"})).ok());
        CHECK(has_code(validate_lp_seed(lp({"1/2*x2 + 1", "x1 + 1", "x1 + 1"}, GroundRing::Integers)),
                       "integer-coefficients"));
        LPSeed s = a3();
        s.F.pop_back();
        CHECK(has_code(validate_lp_seed(s), "shape"));
    }
}

TEST_SUITE("exchange_laurent") {
    TEST_CASE("A3") {
        const auto e = exchange_laurent(a3());
        CHECK(e.Fhat[0] == poly("x2*x3^-1 + x3^-1"));
        CHECK(e.Fhat[1] == poly("x1 + x3"));
        CHECK(e.Fhat[2] == poly("x1^-1*x2 + x1^-1"));
        CHECK(e.exponents[0] == ExponentVector{0, 0, 1});
    }

    TEST_CASE("Markov exchange Laurent polynomials equal F") {
        const auto s = markov();
        CHECK(exchange_laurent(s).Fhat == s.F);
    }

    TEST_CASE("no divisibility gives all a_k = 0") {
        const auto s = lp({"x2 + 2", "x3 + 3", "x1 + 5"});
        CHECK(exchange_laurent(s).Fhat == s.F);
    }

    TEST_CASE("reconstruction holds exactly") {
        std::mt19937 rng(2);
        for (int t = 0; t < 30; ++t) {
            const auto s = random_lp_seed(rng);
            const auto e = exchange_laurent(s);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(e.Fhat[j].shifted(e.exponents[j]) == s.F[j]);
                CHECK(e.exponents[j][j] == 0);
            }
        }
    }

    TEST_CASE("invalid seeds are rejected") {
        CHECK_THROWS_AS(exchange_laurent(lp({"x1 + x2", "x1 + 1", "x1 + 1"})), PreconditionError);
    }
}

TEST_SUITE("lp_mutate") {
    TEST_CASE("A3 in direction 1") {
        const auto s = a3();
        const auto t = lp_mutate(s, 0);
        CHECK(strings(t.F) == std::vector<std::string>{"x2 + 1", "x1*x3^2 + 1", "x2 + 1"});
        CHECK(t.names[0] == "x1'");
        std::vector<RationalExpression> cluster;
        for (std::size_t i = 0; i < 3; ++i)
            cluster.emplace_back(LaurentPolynomial::variable(3, i));
        CHECK(lp_exchange(s, 0, cluster).to_string(default_names(3)) == expr("x2 + 1", "x1*x3"));
    }

    TEST_CASE("involution on the A3 and Markov seeds") {
        for (const auto& s : {a3(), markov()})
            for (std::size_t k = 0; k < 3; ++k) {
                const auto back = lp_mutate(lp_mutate(s, k), k);
                CHECK(seeds_equivalent(back, s));
                CHECK(back.names == s.names);
            }
    }

    TEST_CASE("Markov polynomials keep the form y_a^2 + y_b^2") {
        auto s = markov();
        std::mt19937 rng(4);
        for (int step = 0; step < 12; ++step) {
            s = lp_mutate(s, static_cast<std::size_t>(uniform(rng, 0, 2)));
            CHECK(s.F == markov().F);
        }
    }

    TEST_CASE("involution on random rank-3 seeds") {
        std::mt19937 rng(7);
        int tested = 0, undefined = 0;
        while (tested < 20) {
            const auto s = random_lp_seed(rng);
            for (std::size_t k = 0; k < 3; ++k) {
                try {
                    const auto t = lp_mutate(s, k);
                    CHECK(validate_lp_seed(t).ok());
                    CHECK(seeds_equivalent(lp_mutate(t, k), s));
                } catch (const PreconditionError& e) {
                    CHECK(e.name() == "substitution");
                    ++undefined;
                }
            }
            ++tested;
        }
        CHECK(undefined < 20);
    }

    TEST_CASE("bad direction") { CHECK_THROWS_AS(lp_mutate(a3(), 3), std::out_of_range); }

    TEST_CASE("agrees with classical mutation for full-rank primitive seeds") {
        const std::vector<GeneralizedSeed> seeds{
            GeneralizedSeed::classical({{0, 1}, {-1, 0}}, 2),
            GeneralizedSeed::classical({{0, -1}, {1, 0}}, 2),
            GeneralizedSeed::classical({{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}}, 4),
        };
        std::mt19937 rng(9);
        for (const auto& s0 : seeds) {
            auto classical = s0;
            auto seed = lp_seed_from_classical(s0);
            for (int step = 0; step < 10; ++step) {
                const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s0.n) - 1));
                classical = mutate(classical, k);
                seed = lp_mutate(seed, k);
                CHECK(seeds_equivalent(seed, lp_seed_from_classical(classical)));
            }
        }
    }
}

TEST_SUITE("seeds_equivalent") {
    TEST_CASE("unit rescaling") {
        auto scaled = a3();
        scaled.F[1] *= Rational(3);
        CHECK(seeds_equivalent(a3(), scaled));
        auto z = a3(), zscaled = scaled;
        z.ring = zscaled.ring = GroundRing::Integers;
        CHECK_FALSE(seeds_equivalent(z, zscaled));
        auto negated = z;
        negated.F[1] *= Rational(-1);
        CHECK(seeds_equivalent(z, negated));
        CHECK_FALSE(seeds_equivalent(a3(), markov()));
    }
}

TEST_SUITE("is_sign_skew_symmetric") {
    TEST_CASE("examples") {
        CHECK(is_sign_skew_symmetric(a3()));
        CHECK(is_sign_skew_symmetric(markov()));
        CHECK_FALSE(is_sign_skew_symmetric(lp({"x2 + 1", "x3 + 1", "x1 + 1"})));
    }
}

TEST_SUITE("enumerate_lp_cluster_variables") {
    TEST_CASE("A3 at depth 4 gives the seven listed variables") {
        const auto e = enumerate_lp_cluster_variables(a3(), 4);
        std::vector<std::string> expected{
            "x1", "x2", "x3",
            expr("1 + x2", "x1*x3"),
            expr("x1 + x3", "x2"),
            expr("x1 + x3 + x2*x3", "x1*x2"),
            expr("x1 + x3 + x1*x2", "x2*x3"),
        };
        std::sort(expected.begin(), expected.end());
        CHECK(variable_strings(e) == expected);
        CHECK(e.repeated_exchange_laurent == 0);
        // the orbit closes before depth 4
        CHECK(enumerate_lp_cluster_variables(a3(), 8).variables == e.variables);
    }

    TEST_CASE("depth 0 is the initial cluster") {
        const auto e = enumerate_lp_cluster_variables(a3(), 0);
        CHECK(variable_strings(e) == std::vector<std::string>{"x1", "x2", "x3"});
    }

    TEST_CASE("Markov orbit grows with depth") {
        std::size_t previous = 0;
        for (std::size_t depth = 0; depth <= 3; ++depth) {
            const auto e = enumerate_lp_cluster_variables(markov(), depth);
            CHECK(e.variables.size() > previous);
            previous = e.variables.size();
            std::set<RationalExpression> unique(e.variables.begin(), e.variables.end());
            CHECK(unique.size() == e.variables.size());
            for (const auto& v : e.variables)
                CHECK(v.is_laurent());
        }
        // 3 initial, 3 at depth 1, 6 at depth 2, 12 at depth 3
        CHECK(previous == 24);
    }

    TEST_CASE("sign-skew symmetry is preserved along the A3, Markov and classical orbits") {
        std::vector<LPSeed> starts{a3(), markov(),
                                   lp_seed_from_classical(GeneralizedSeed::classical(
                                       {{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}}, 4))};
        std::mt19937 rng(13);
        for (const auto& s0 : starts) {
            REQUIRE(is_sign_skew_symmetric(s0));
            for (int walk = 0; walk < 10; ++walk) {
                auto s = s0;
                for (int step = 0; step < 6; ++step) {
                    s = lp_mutate(s, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.n) - 1)));
                    CHECK(is_sign_skew_symmetric(s));
                }
            }
        }
    }

    TEST_CASE("a sign-skew symmetric seed whose mutation is not") {
        const auto t = lp({"x2^2 + 5*x3", "x1*x3 + x1 + 5*x3^2", "3*x1 + x2^2"});
        REQUIRE(validate_lp_seed(t).ok());
        CHECK(is_sign_skew_symmetric(t));
        const auto u = lp_mutate(t, 0);
        CHECK(strings(u.F) == std::vector<std::string>{"x2^2 + 5*x3", "x1*x3 + x3 + 1", "x1 + 3"});
        // x3 occurs in F2 while x2 does not occur in F3
        CHECK_FALSE(is_sign_skew_symmetric(u));
        CHECK(seeds_equivalent(lp_mutate(u, 0), t));
    }
}
