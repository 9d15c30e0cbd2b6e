#pragma once

#include "gca/expression.hpp"
#include "gca/seed.hpp"

#include <functional>
#include <vector>

namespace gca {

using MutationRule = std::function<GeneralizedSeed(const GeneralizedSeed&, std::size_t)>;

/// Caps the work of an expansion. Before each step an upper bound on the
/// number of terms produced by evaluating the exchange polynomial is
/// computed; exceeding max_terms throws ResourceLimitExceeded. Zero means
/// unlimited.
struct ExpansionLimits {
    double max_terms = 0;
};

/// Cluster variables of the seed reached by `sequence` (zero-based directions),
/// written in the initial cluster: one expression per variable, frozen ones
/// included. Each step evaluates the current exchange polynomial at the
/// current expressions and divides by the expression being replaced; `rule`
/// produces the next seed and defaults to `mutate`.
std::vector<RationalExpression> expand_in_initial(const GeneralizedSeed& s0, const std::vector<std::size_t>& sequence,
                                                  const MutationRule& rule = mutate, ExpansionLimits limits = {});

/// True when every expression from expand_in_initial is a Laurent polynomial.
bool verify_laurent(const GeneralizedSeed& s0, const std::vector<std::size_t>& sequence,
                    const MutationRule& rule = mutate, ExpansionLimits limits = {});

struct ExplorationResult {
    std::size_t seeds_found = 0;
    bool exhausted = false;
};

/// Breadth-first search of the mutation class. Two seeds are identified when
/// their clusters agree as sets of expressions in the initial cluster and
/// (B, d, rho) agree after the induced relabeling. Stops when a new seed
/// would exceed `max_seeds`.
ExplorationResult explore_mutation_class(const GeneralizedSeed& s0, std::size_t max_seeds);

}  // namespace gca
