#pragma once

#include "gca/errors.hpp"
#include "gca/laurent.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gca {

/// Ground ring R. Arithmetic is always over the rationals; the ring only
/// decides which constants are units and the default class-group mode.
enum class GroundRing { Integers, Rationals, AlgebraicClosure };

/// Dense (n+m)×n integer matrix; rows are indexed by all variables, columns
/// by exchangeable ones.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    ExchangeMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    ExchangeMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<std::int64_t> column(std::size_t c) const;

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
    friend auto operator<=>(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Generalized seed: n exchangeable and m frozen variables, exchange matrix,
/// column divisors d and coefficient strings rho.
///
/// Indices are zero-based throughout the library. rho[i] holds d[i]+1
/// monomials in the frozen variables (as Laurent polynomials of arity n+m)
/// with rho[i].front() = rho[i].back() = 1.
struct GeneralizedSeed {
    GroundRing ring = GroundRing::Rationals;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::string> names;
    ExchangeMatrix B;
    std::vector<std::int64_t> d;
    std::vector<std::vector<LaurentPolynomial>> rho;

    std::size_t arity() const { return n + m; }

    /// Seed with trivial strings (d_i = 1) and default variable names.
    static GeneralizedSeed classical(const ExchangeMatrix& b, std::size_t n,
                                     GroundRing ring = GroundRing::Rationals);
    /// Seed with default names and scalar strings given per direction:
    /// strings[i] lists rho_{i,0..d_i} as rationals.
    static GeneralizedSeed with_strings(const ExchangeMatrix& b, std::size_t n,
                                        const std::vector<std::vector<Rational>>& strings,
                                        GroundRing ring = GroundRing::Rationals);

    friend bool operator==(const GeneralizedSeed&, const GeneralizedSeed&) = default;
};

struct Violation {
    std::string code;
    std::string message;
};

/// Every violated seed invariant; empty when the seed is valid.
std::vector<Violation> validate_seed(const GeneralizedSeed& s);

/// Throws PreconditionError("valid-seed") listing the violations.
void require_valid(const GeneralizedSeed& s);

/// f_i = Σ_j rho_{i,j} ∏_k x_k^{j[β_ki]_+ + (d_i-j)[-β_ki]_+}.
LaurentPolynomial exchange_polynomial(const GeneralizedSeed& s, std::size_t i);
std::vector<LaurentPolynomial> exchange_polynomials(const GeneralizedSeed& s);

/// Mutation in direction i: relabels x_i as x_i' (toggling a trailing prime),
/// reverses rho_i and mutates B. Throws std::out_of_range for a bad direction.
GeneralizedSeed mutate(const GeneralizedSeed& s, std::size_t i);

struct DirectedGraph {
    std::size_t vertices = 0;
    /// i → j for b_ij > 0.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

DirectedGraph digraph(const GeneralizedSeed& s);
bool is_acyclic(const GeneralizedSeed& s);

/// Exchange polynomials pairwise coprime.
bool is_coprime(const GeneralizedSeed& s);

struct CoprimalityCriteria {
    bool full_rank = false;
    bool no_proportional_columns = false;
};

CoprimalityCriteria coprimality_criteria(const GeneralizedSeed& s);

/// Symbolic check of the two monomial identities relating the exchange
/// relations of x_2 in the seeds s and μ_1(s) for a rank-2 seed with frozen
/// variables: r2·r3 = q2·q3·r1^b and h_k·r2 = g_k·q3·r1^{kβ12} for
/// 1 ≤ k < d_2. The seed is relabeled so that b_12 > 0; b_12 = 0 violates
/// the sign precondition.
bool rank_two_exchange_identities(const GeneralizedSeed& s);

}  // namespace gca
