#pragma once

#include "gca/seed.hpp"
#include "gca/smith.hpp"
#include "gca/univariate.hpp"

#include <optional>
#include <vector>

namespace gca {

/// Rational: primes are irreducible factors over Q. AlgebraicallyClosed:
/// primes are counted from squarefree blocks without computing roots.
enum class FieldMode { Rational, AlgebraicallyClosed };

/// Default mode for a ground ring: the algebraic closure counts roots, the
/// integers and rationals factor over Q.
FieldMode default_mode(GroundRing ring);

/// Witness of a prime over the algebraic closure: the `root`-th root c of the
/// squarefree block, giving the prime x^direction - c.
struct ClosedWitness {
    ExponentVector direction;
    std::int64_t stretch = 1;
    UnivariatePolynomial block;
    std::size_t block_degree = 0;
    std::size_t root = 0;
};

struct PrimeDivisor {
    std::size_t source = 0;
    std::size_t multiplicity = 1;
    /// Rational mode: irreducible factor of f_source, canonical.
    std::optional<LaurentPolynomial> factor;
    /// AlgebraicallyClosed mode.
    std::optional<ClosedWitness> closed;
};

struct ClassGroupOptions {
    /// Accept coprime seeds with directed cycles (upper cluster algebra
    /// equal to the upper bound). Off by default.
    bool allow_cyclic = false;
};

/// Throws PreconditionError naming "acyclic" or "coprime" when the seed is
/// outside the hypotheses, and "segment" when an exchange polynomial is not a
/// segment (frozen monomials inside the strings).
void require_class_group_hypotheses(const GeneralizedSeed& s, ClassGroupOptions options = {});

/// Height-1 primes containing some x_i, grouped by source variable.
std::vector<PrimeDivisor> height_one_primes(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options = {});

/// n × r matrix with a_ij the multiplicity of prime j in f_i (zero unless
/// prime j is sourced at i).
IntegerMatrix valuation_matrix(const std::vector<PrimeDivisor>& primes, const GeneralizedSeed& s);

struct ClassGroupResult {
    std::size_t r = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<PrimeDivisor> primes;
    IntegerMatrix valuation;
    /// images[j] = class of prime j in Z/t_1 ⊕ … ⊕ Z/t_k ⊕ Z^free_rank
    /// (torsion coordinates reduced, then free coordinates).
    std::vector<std::vector<Integer>> images;
};

ClassGroupResult class_group(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options = {});

/// Class group trivial. Throws std::logic_error if that disagrees with the
/// direct test (every f_i irreducible or a unit).
bool is_factorial(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options = {});

/// For a classical seed (all d_i = 1, no f_i a unit): class group free of
/// rank r - n.
bool classical_consistency(const GeneralizedSeed& s, FieldMode mode, ClassGroupOptions options = {});

}  // namespace gca
