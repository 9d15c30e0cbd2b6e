#pragma once

#include "gca/laurent.hpp"

#include <cstddef>
#include <vector>

namespace gca {

/// Rectangular matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Cokernel of the row span: Z^cols / ⟨rows⟩ ≅ Z^free_rank ⊕ ⊕ Z/t for t in torsion.
struct SmithResult {
    /// Non-zero diagonal entries d_1 | d_2 | … of the Smith form, all positive.
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
    std::size_t free_rank = 0;
    /// The invariant factors greater than one.
    std::vector<Integer> torsion;
};

SmithResult smith_normal_form(const IntegerMatrix& m);

/// Smith form with the unimodular column transform: U·M·V = D for some
/// unimodular U. `column_transform` holds V; its row j gives the coordinates of
/// e_j in the diagonal basis of the cokernel.
struct SmithDecomposition {
    SmithResult result;
    std::vector<Integer> diagonal;  // min(rows, cols) entries
    IntegerMatrix column_transform;
};

SmithDecomposition smith_decomposition(const IntegerMatrix& m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rational_rank(const IntegerMatrix& m);

}  // namespace gca
