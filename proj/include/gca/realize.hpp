#pragma once

#include "gca/classgroup.hpp"
#include "gca/seed.hpp"

#include <cstdint>
#include <vector>

namespace gca {

/// Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k, torsion sorted ascending with no 1s.
/// Repeated entries are allowed.
struct AbelianGroupSpec {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;

    /// Strips 1s and sorts. Throws std::invalid_argument on entries < 1.
    AbelianGroupSpec normalized() const;
    bool trivial() const { return free_rank == 0 && normalized().torsion.empty(); }

    friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;
};

/// Seed over the algebraic closure whose cluster algebra has class group g.
/// Pure torsion uses 2k variables, pure free rank a classical rank-2 seed, and
/// the mixed case 2k+2 variables. The trivial group gives x1 with one frozen
/// variable and f_1 = x2 + 1.
GeneralizedSeed realize_seed(const AbelianGroupSpec& g);

/// Invariant factors of the torsion part (> 1, each dividing the next).
std::vector<Integer> invariant_factors(const AbelianGroupSpec& g);

/// realize_seed, then class_group over the algebraic closure, compared by
/// free rank and invariant factors.
bool verify_realization(const AbelianGroupSpec& g);

}  // namespace gca
