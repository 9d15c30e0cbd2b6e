#include "gca/smith.hpp"

#include <algorithm>

namespace gca {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    r(i, j) += a(i, k) * b(k, j);
    return r;
}

namespace {

class Reducer {
public:
    explicit Reducer(const IntegerMatrix& m) : a_(m), v_(IntegerMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a_.cols(); ++c)
            std::swap(a_(i, c), a_(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a_.rows(); ++r)
            std::swap(a_(r, i), a_(r, j));
        for (std::size_t r = 0; r < v_.rows(); ++r)
            std::swap(v_(r, i), v_(r, j));
    }
    // row_i -= q * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) -= q * a_(j, c);
    }
    // col_i -= q * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            a_(r, i) -= q * a_(r, j);
        for (std::size_t r = 0; r < v_.rows(); ++r)
            v_(r, i) -= q * v_(r, j);
    }

    // Moves the smallest non-zero entry of the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t bi = t;
        std::size_t bj = t;
        Integer best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j)
                if (a_(i, j) != 0 && (!found || abs(a_(i, j)) < best)) {
                    found = true;
                    best = abs(a_(i, j));
                    bi = i;
                    bj = j;
                }
        if (found) {
            swap_rows(t, bi);
            swap_cols(t, bj);
        }
        return found;
    }

    void run() {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            if (!place_pivot(t))
                break;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                    if (a_(i, t) == 0)
                        continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                    add_row(i, t, q);
                    if (a_(i, t) != 0)
                        clean = false;
                }
                for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                    if (a_(t, j) == 0)
                        continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                    add_col(j, t, q);
                    if (a_(t, j) != 0)
                        clean = false;
                }
                if (!clean) {
                    place_pivot_in_cross(t);
                    continue;
                }
                // divisibility of the trailing block by the pivot
                bool divisible = true;
                for (std::size_t i = t + 1; i < a_.rows() && divisible; ++i)
                    for (std::size_t j = t + 1; j < a_.cols(); ++j)
                        if (a_(i, j) % a_(t, t) != 0) {
                            add_row(t, i, Integer(-1));
                            divisible = false;
                            break;
                        }
                if (divisible)
                    break;
            }
            if (a_(t, t) < 0)
                for (std::size_t c = 0; c < a_.cols(); ++c)
                    a_(t, c) = -a_(t, c);
        }
    }

    const IntegerMatrix& reduced() const { return a_; }
    const IntegerMatrix& transform() const { return v_; }

private:
    // After a reduction pass leaves remainders in row/column t, bring the
    // smallest one to the pivot.
    void place_pivot_in_cross(std::size_t t) {
        std::size_t bi = t;
        std::size_t bj = t;
        Integer best = abs(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_(i, t) != 0 && abs(a_(i, t)) < best) {
                best = abs(a_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_(t, j) != 0 && abs(a_(t, j)) < best) {
                best = abs(a_(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    IntegerMatrix a_;
    IntegerMatrix v_;
};

}  // namespace

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
    Reducer red(m);
    red.run();
    SmithDecomposition out;
    const std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < limit; ++i) {
        const Integer& d = red.reduced()(i, i);
        out.diagonal.push_back(d);
        if (d != 0) {
            out.result.invariant_factors.push_back(d);
            if (d > 1)
                out.result.torsion.push_back(d);
        }
    }
    out.result.rank = out.result.invariant_factors.size();
    out.result.free_rank = m.cols() - out.result.rank;
    out.column_transform = red.transform();
    return out;
}

SmithResult smith_normal_form(const IntegerMatrix& m) {
    return smith_decomposition(m).result;
}

std::size_t rational_rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, c) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        for (std::size_t k = 0; k < a.cols(); ++k)
            std::swap(a(rank, k), a(pivot, k));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            Integer f = a(i, c);
            Integer p = a(rank, c);
            for (std::size_t k = 0; k < a.cols(); ++k)
                a(i, k) = a(i, k) * p - a(rank, k) * f;
        }
        ++rank;
    }
    return rank;
}

}  // namespace gca
