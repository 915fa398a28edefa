#pragma once

// Dense matrices over the exact scalar field and the elimination routines the
// rest of the library is built on.

#include "hrank/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hrank {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix conj_transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination.  Every update
///     m_ij <- (m_ij m_kk - m_ik m_kj) / prev_pivot
/// is an exact division, so entries stay bounded by the minors of the input.
std::size_t bareiss_rank(Matrix m);
/// Bareiss on the Scalar entries directly.  bareiss_rank uses it for
/// radical entries and otherwise works over Z[i].
std::size_t scalar_bareiss_rank(Matrix m);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    Matrix reduced;                   // first `pivots.size()` rows are nonzero
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};
RowEchelon rref(Matrix m);

/// Invertible U, V with U * m * V = diag(I_r, 0).
struct RankNormalForm {
    Matrix row_ops;  // U
    Matrix col_ops;  // V
    std::size_t rank = 0;
};
RankNormalForm rank_normal_form(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hrank
