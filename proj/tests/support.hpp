#pragma once

// Shared helpers for the test binaries: seeded inputs and independent oracles.

#include "hrank/coeff_matrix.hpp"
#include "hrank/matrix.hpp"
#include "hrank/parse.hpp"
#include "hrank/polynomial.hpp"
#include "hrank/random_instance.hpp"

#include <Eigen/Dense>

#include <complex>

namespace hrank::test {

inline Polynomial P(const char* text, int n, Field f = {}) { return parse_poly(text, n, f); }

/// Random polarized point with Gaussian rational coordinates (not diagonal).
inline Point random_point(RandomSource& rng, int n) {
    Point pt;
    for (int i = 0; i < n; ++i) {
        pt.p.push_back(rng.gaussian_rational());
        pt.q.push_back(rng.gaussian_rational());
    }
    return pt;
}

/// Floating rank by singular values, threshold relative to the largest one.
inline std::size_t svd_rank(const Matrix& m, double threshold = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > threshold * std::max(1.0, s(0))) ++rank;
    return rank;
}

/// Random matrix with small Gaussian integer entries and a planted rank.
inline Matrix random_integer_matrix(RandomSource& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
    Matrix u(rows, rank), v(rank, cols);
    auto gauss_int = [&] { return Scalar(Rational(rng.integer(-3, 3)), Rational(rng.integer(-3, 3))); };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rank; ++j) u(i, j) = gauss_int();
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols; ++j) v(i, j) = gauss_int();
    return rank == 0 ? Matrix(rows, cols) : u * v;
}

/// Random invertible matrix: lower unitriangular times upper triangular with
/// nonzero diagonal, then a row permutation.
inline Matrix random_invertible(RandomSource& rng, int n) {
    const auto sz = static_cast<std::size_t>(n);
    Matrix l = Matrix::identity(sz), u(sz, sz);
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < i; ++j) l(i, j) = rng.sparse_gaussian_rational(2);
        u(i, i) = rng.gaussian_rational();
        for (std::size_t j = i + 1; j < sz; ++j) u(i, j) = rng.sparse_gaussian_rational(2);
    }
    Matrix m = l * u;
    if (sz > 1) m.swap_rows(0, static_cast<std::size_t>(rng.integer(0, n - 1)));
    return m;
}

}  // namespace hrank::test
