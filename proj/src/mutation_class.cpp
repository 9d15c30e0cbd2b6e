#include "gca/mutation_class.hpp"

#include "gca/text.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace gca {

namespace {

std::vector<RationalExpression> initial_expressions(std::size_t arity) {
    std::vector<RationalExpression> x;
    for (std::size_t k = 0; k < arity; ++k)
        x.emplace_back(LaurentPolynomial::variable(arity, k));
    return x;
}

// Upper bound on the terms of f evaluated at x. A k-th power of an
// expression with t terms has at most C(k+t-1, t-1) terms; for Laurent
// values the exponents also stay inside the k-fold exponent box.
double predicted_terms(const LaurentPolynomial& f, const std::vector<RationalExpression>& x) {
    auto multisets = [](double t, std::int64_t k) {
        double r = 1;
        for (std::int64_t j = 1; j <= k; ++j)
            r = r * (t - 1 + static_cast<double>(j)) / static_cast<double>(j);
        return r;
    };
    const std::size_t n = x.empty() ? 0 : x.front().arity();
    double total = 0;
    for (const auto& [e, c] : f.terms()) {
        double by_count = 1;
        bool laurent = true;
        std::vector<double> width(n, 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            const auto& num = x[k].numerator();
            const double t = static_cast<double>(std::max(num.size(), x[k].denominator().size()));
            if (t > 1)
                by_count *= multisets(t, std::abs(e[k]));
            laurent = laurent && x[k].is_laurent();
            for (std::size_t v = 0; v < n && laurent; ++v)
                width[v] += static_cast<double>(std::abs(e[k])) * static_cast<double>(num.max_degree(v) - num.min_degree(v));
        }
        double by_box = 1;
        for (auto w : width)
            by_box *= w + 1;
        total += laurent ? std::min(by_count, by_box) : by_count;
    }
    return total;
}

void step(const GeneralizedSeed& s, std::size_t i, std::vector<RationalExpression>& x, ExpansionLimits limits = {}) {
    if (limits.max_terms > 0) {
        const double predicted = predicted_terms(exchange_polynomial(s, i), x);
        if (predicted > limits.max_terms)
            throw ResourceLimitExceeded("mutation in direction " + std::to_string(i + 1) + " may produce " +
                                        std::to_string(predicted) + " terms");
    }
    const RationalExpression value = evaluate(exchange_polynomial(s, i), x);
    x[i] = value / x[i];
}

std::string seed_key(const GeneralizedSeed& s, const std::vector<RationalExpression>& x,
                     const std::vector<std::string>& names) {
    std::vector<std::size_t> order(s.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<std::size_t> rows(order);
    for (std::size_t k = s.n; k < s.n + s.m; ++k)
        rows.push_back(k);

    std::string key;
    for (auto p : order)
        key += x[p].to_string(names) + ";";
    key += "|";
    for (auto r : rows)
        for (auto c : order)
            key += std::to_string(s.B(r, c)) + ",";
    key += "|";
    for (auto p : order) {
        key += std::to_string(s.d[p]) + ":";
        for (const auto& c : s.rho[p])
            key += to_string(c, names) + ",";
        key += ";";
    }
    return key;
}

}  // namespace

std::vector<RationalExpression> expand_in_initial(const GeneralizedSeed& s0, const std::vector<std::size_t>& sequence,
                                                  const MutationRule& rule, ExpansionLimits limits) {
    require_valid(s0);
    for (auto i : sequence)
        if (i >= s0.n)
            throw std::out_of_range("direction " + std::to_string(i + 1) + " out of range");
    GeneralizedSeed s = s0;
    auto x = initial_expressions(s0.arity());
    for (auto i : sequence) {
        step(s, i, x, limits);
        s = rule(s, i);
    }
    return x;
}

bool verify_laurent(const GeneralizedSeed& s0, const std::vector<std::size_t>& sequence, const MutationRule& rule,
                    ExpansionLimits limits) {
    const auto x = expand_in_initial(s0, sequence, rule, limits);
    return std::all_of(x.begin(), x.end(), [](const RationalExpression& e) { return e.is_laurent(); });
}

ExplorationResult explore_mutation_class(const GeneralizedSeed& s0, std::size_t max_seeds) {
    require_valid(s0);
    if (max_seeds == 0)
        throw std::invalid_argument("max_seeds must be positive");
    const auto names = default_names(s0.arity());
    struct Node {
        GeneralizedSeed seed;
        std::vector<RationalExpression> x;
    };
    std::deque<Node> queue;
    std::unordered_set<std::string> seen;
    queue.push_back({s0, initial_expressions(s0.arity())});
    seen.insert(seed_key(s0, queue.front().x, names));
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < s0.n; ++i) {
            Node child{mutate(node.seed, i), node.x};
            step(node.seed, i, child.x);
            std::string key = seed_key(child.seed, child.x, names);
            if (seen.count(key))
                continue;
            if (seen.size() == max_seeds)
                return {max_seeds, false};
            seen.insert(std::move(key));
            queue.push_back(std::move(child));
        }
    }
    return {seen.size(), true};
}

}  // namespace gca
