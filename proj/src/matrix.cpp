#include "hrank/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hrank {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

namespace {

// Gaussian integer with mpz parts; Bareiss over Z[i] avoids the gcd work of
// rational arithmetic.
struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

/// (a p - f b) / prev, the division being exact.
void bareiss_step(GaussInt& a, const GaussInt& p, const GaussInt& f, const GaussInt& b, const GaussInt& prev,
                  const mpz_class& prev_norm, mpz_class& t1, mpz_class& t2) {
    mpz_class re = a.re * p.re - a.im * p.im - (f.re * b.re - f.im * b.im);
    mpz_class im = a.re * p.im + a.im * p.re - (f.re * b.im + f.im * b.re);
    // (re + im i)(prev.re - prev.im i) / |prev|^2
    t1 = re * prev.re + im * prev.im;
    t2 = im * prev.re - re * prev.im;
    mpz_divexact(a.re.get_mpz_t(), t1.get_mpz_t(), prev_norm.get_mpz_t());
    mpz_divexact(a.im.get_mpz_t(), t2.get_mpz_t(), prev_norm.get_mpz_t());
}

std::size_t gaussian_bareiss_rank(std::vector<std::vector<GaussInt>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    GaussInt prev{1, 0};
    mpz_class prev_norm = 1, t1, t2;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const GaussInt p = m[rank][col];
        const GaussInt zero{0, 0};
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const GaussInt f = m[r][col];
            const bool f_zero = f.is_zero();
            for (std::size_t c = col + 1; c < cols; ++c) {
                const bool right_zero = f_zero || m[rank][c].is_zero();
                if (m[r][c].is_zero() && right_zero) continue;
                bareiss_step(m[r][c], p, right_zero ? zero : f, m[rank][c], prev, prev_norm, t1, t2);
            }
            m[r][col] = zero;
        }
        prev = p;
        prev_norm = p.re * p.re + p.im * p.im;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t bareiss_rank(Matrix m) {
    // Zero rows and columns do not affect the rank.
    std::vector<std::size_t> live_rows, live_cols;
    std::vector<bool> col_live(m.cols(), false);
    bool radical = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool any = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            any = true;
            col_live[c] = true;
            radical = radical || m(r, c).has_radical();
        }
        if (any) live_rows.push_back(r);
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (col_live[c]) live_cols.push_back(c);
    if (live_rows.empty()) return 0;

    if (!radical) {
        // Scale each row by the lcm of its denominators.
        std::vector<std::vector<GaussInt>> g(live_rows.size(), std::vector<GaussInt>(live_cols.size()));
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            mpz_class l = 1;
            for (std::size_t c : live_cols) {
                const Scalar& x = m(live_rows[i], c);
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
            }
            for (std::size_t j = 0; j < live_cols.size(); ++j) {
                const Scalar& x = m(live_rows[i], live_cols[j]);
                g[i][j].re = x.re().get_num() * (l / x.re().get_den());
                g[i][j].im = x.im().get_num() * (l / x.im().get_den());
            }
        }
        return gaussian_bareiss_rank(std::move(g), live_cols.size());
    }
    return scalar_bareiss_rank(std::move(m));
}

std::size_t scalar_bareiss_rank(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Scalar prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!m(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == rows) continue;
        m.swap_rows(rank, piv);
        const Scalar p = m(rank, col);
        const Scalar prev_inv = prev.inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Scalar f = m(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                const bool left = m(r, c).is_zero();
                const bool right = f.is_zero() || m(rank, c).is_zero();
                if (left && right) continue;
                Scalar v = m(r, c) * p;
                if (!right) v -= f * m(rank, c);
                m(r, c) = v * prev_inv;
            }
            m(r, col) = Scalar();
        }
        prev = p;
        ++rank;
    }
    return rank;
}

RowEchelon rref(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        const Scalar inv = m(r, col).inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!m(r, c).is_zero()) m(r, c) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t c = col; c < cols; ++c)
                if (!m(r, c).is_zero()) m(i, c) -= f * m(r, c);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

RankNormalForm rank_normal_form(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Matrix work = m;
    Matrix u = Matrix::identity(rows);
    Matrix v = Matrix::identity(cols);
    std::size_t k = 0;
    while (k < rows && k < cols) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t j = k; j < cols && pr == rows; ++j)
            for (std::size_t i = k; i < rows; ++i)
                if (!work(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        work.swap_rows(k, pr);
        u.swap_rows(k, pr);
        work.swap_cols(k, pc);
        v.swap_cols(k, pc);

        const Scalar inv = work(k, k).inverse();
        for (std::size_t c = 0; c < cols; ++c) work(k, c) *= inv;
        for (std::size_t c = 0; c < rows; ++c) u(k, c) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k || work(i, k).is_zero()) continue;
            const Scalar f = work(i, k);
            for (std::size_t c = 0; c < cols; ++c) work(i, c) -= f * work(k, c);
            for (std::size_t c = 0; c < rows; ++c) u(i, c) -= f * u(k, c);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == k || work(k, j).is_zero()) continue;
            const Scalar f = work(k, j);
            for (std::size_t r = 0; r < rows; ++r) work(r, j) -= f * work(r, k);
            for (std::size_t r = 0; r < cols; ++r) v(r, j) -= f * v(r, k);
        }
        ++k;
    }
    return {std::move(u), std::move(v), k};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace hrank
