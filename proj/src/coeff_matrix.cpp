#include "hrank/coeff_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrank {

// ---------------------------------------------------------------- ordering

namespace {

void enumerate(int n, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur.push_back(e);
        enumerate(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

int total(const std::vector<int>& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

}  // namespace

bool MonomialOrder::precedes(const std::vector<int>& x, const std::vector<int>& y) {
    const int dx = total(x);
    const int dy = total(y);
    if (dx != dy) return dx < dy;
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

MonomialOrder::MonomialOrder(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw std::invalid_argument("MonomialOrder: need n >= 1, d >= 0");
    std::vector<int> cur;
    enumerate(n, d, cur, exps_);
    std::sort(exps_.begin(), exps_.end(), &MonomialOrder::precedes);
    for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(exps_[i], i);
}

std::size_t MonomialOrder::index_of(const std::vector<int>& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? exps_.size() : it->second;
}

// ---------------------------------------------------------------- matrices

Monomial CoefficientMatrix::monomial_at(std::size_t row, std::size_t col) const {
    return Monomial(order->exponents(col), order->exponents(row));
}

std::optional<std::pair<std::size_t, std::size_t>> CoefficientMatrix::position_of(
    const Monomial& m) const {
    const std::size_t col = order->index_of(m.holo_part());
    const std::size_t row = order->index_of(m.anti_part());
    if (col == order->size() || row == order->size()) return std::nullopt;
    return std::make_pair(row, col);
}

CoefficientMatrix build_matrix(const Polynomial& r, int d) {
    if (d < 0) throw std::invalid_argument("build_matrix: negative degree");
    auto order = std::make_shared<const MonomialOrder>(r.dim(), d);
    CoefficientMatrix cm{order, Matrix(order->size(), order->size())};
    for (const auto& [m, c] : r.terms()) {
        if (auto pos = cm.position_of(m)) cm.entries(pos->first, pos->second) = c;
    }
    return cm;
}

std::size_t exact_rank(const CoefficientMatrix& m) { return bareiss_rank(m.entries); }

std::size_t rank_of(const Polynomial& r) {
    if (r.is_zero()) return 0;
    return exact_rank(build_matrix(r, r.max_degree()));
}

// ---------------------------------------------------------------- factorizations

namespace {

Polynomial holomorphic_from(const MonomialOrder& order, int n,
                            const std::vector<Scalar>& coeffs) {
    Polynomial f(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        f.add_term(Monomial(order.exponents(i), std::vector<int>(static_cast<std::size_t>(n), 0)),
                   coeffs[i]);
    }
    return f;
}

}  // namespace

Polynomial hermitian_square(const Polynomial& f) { return poly_mul(f, conjugate_swap(f)); }

RankFactorization rank_factorize(const Polynomial& r) {
    const int n = r.dim();
    RankFactorization out;
    if (r.is_zero()) return out;
    const CoefficientMatrix cm = build_matrix(r, r.max_degree());
    const std::size_t side = cm.side();

    // Row-reduce the transpose: M^T = C F with C the pivot columns of M^T
    // (= rows of M) and F the nonzero reduced rows.  Then M = F^T C^T, i.e.
    // M(gamma, alpha) = sum_k F(k, gamma) * M(pivot_k, alpha).
    const RowEchelon e = rref(cm.entries.transpose());
    out.rank = e.pivots.size();
    for (std::size_t k = 0; k < out.rank; ++k) {
        std::vector<Scalar> phi(side), psi(side);
        for (std::size_t a = 0; a < side; ++a) phi[a] = cm.entries(e.pivots[k], a);
        for (std::size_t g = 0; g < side; ++g) psi[g] = e.reduced(k, g).conj();
        out.phi.push_back(holomorphic_from(*cm.order, n, phi));
        out.psi.push_back(holomorphic_from(*cm.order, n, psi));
    }
    if (!(reconstruct(out, n) == r))
        throw std::logic_error("rank_factorize: reconstruction mismatch");
    return out;
}

Polynomial reconstruct(const RankFactorization& f, int n) {
    Polynomial sum(n);
    for (std::size_t k = 0; k < f.rank; ++k) sum += poly_mul(f.phi[k], conjugate_swap(f.psi[k]));
    return sum;
}

SignatureDecomposition signature_decompose(const Polynomial& r) {
    if (!is_real_valued(r)) throw std::invalid_argument("signature_decompose: input is not real-valued");
    const int n = r.dim();
    SignatureDecomposition out;
    if (r.is_zero()) return out;
    const CoefficientMatrix cm = build_matrix(r, r.max_degree());
    const MonomialOrder& order = *cm.order;
    const std::size_t side = cm.side();
    Matrix a = cm.entries;

    auto row_poly = [&](const std::vector<Scalar>& v) {
        // v* Z = sum_alpha conj(v_alpha) z^alpha
        std::vector<Scalar> c(side);
        for (std::size_t i = 0; i < side; ++i) c[i] = v[i].conj();
        return holomorphic_from(order, n, c);
    };
    auto column = [&](std::size_t j) {
        std::vector<Scalar> v(side);
        for (std::size_t i = 0; i < side; ++i) v[i] = a(i, j);
        return v;
    };
    auto push = [&](const Scalar& w, const std::vector<Scalar>& v) {
        const int s = w.real_sign();
        WeightedSquare sq{s > 0 ? w : -w, row_poly(v)};
        (s > 0 ? out.positive : out.negative).push_back(std::move(sq));
    };

    for (;;) {
        std::size_t diag = side;
        for (std::size_t i = 0; i < side; ++i)
            if (!a(i, i).is_zero()) {
                diag = i;
                break;
            }
        if (diag < side) {
            // A <- A - v v* / a_ii, contributing |v* Z|^2 / a_ii.
            const Scalar inv = a(diag, diag).inverse();
            const std::vector<Scalar> v = column(diag);
            push(inv, v);
            for (std::size_t i = 0; i < side; ++i) {
                if (v[i].is_zero()) continue;
                const Scalar vi = v[i] * inv;
                for (std::size_t j = 0; j < side; ++j)
                    if (!v[j].is_zero()) a(i, j) -= vi * v[j].conj();
            }
            continue;
        }
        std::size_t pi = side, pj = side;
        for (std::size_t i = 0; i < side && pi == side; ++i)
            for (std::size_t j = i + 1; j < side; ++j)
                if (!a(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == side) break;
        // Zero diagonal: 2x2 block pivot.  With x = A e_i, y = A e_j / c the
        // update is x y* + y x* = 1/2 (x+y)(x+y)* - 1/2 (x-y)(x-y)*.
        const Scalar c = a(pi, pj);
        const Scalar c_inv = c.inverse();
        const std::vector<Scalar> x = column(pi);
        std::vector<Scalar> y = column(pj);
        for (auto& s : y) s *= c_inv;
        std::vector<Scalar> plus(side), minus(side);
        for (std::size_t i = 0; i < side; ++i) {
            plus[i] = x[i] + y[i];
            minus[i] = x[i] - y[i];
        }
        const Scalar half(Rational(1, 2));
        push(half, plus);
        push(-half, minus);
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t j = 0; j < side; ++j) {
                if ((x[i].is_zero() || y[j].is_zero()) && (y[i].is_zero() || x[j].is_zero())) continue;
                a(i, j) -= x[i] * y[j].conj() + y[i] * x[j].conj();
            }
    }
    if (!(reconstruct(out, n) == r))
        throw std::logic_error("signature_decompose: reconstruction mismatch");
    return out;
}

Polynomial reconstruct(const SignatureDecomposition& s, int n) {
    Polynomial sum(n);
    for (const auto& sq : s.positive) sum += hermitian_square(sq.f) * sq.weight;
    for (const auto& sq : s.negative) sum -= hermitian_square(sq.f) * sq.weight;
    return sum;
}

// ---------------------------------------------------------------- counting

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    if (n == -1) return k == 0 ? 1 : 0;  // only the C(-1, 0) corner is needed
    if (n < -1) throw std::invalid_argument("binomial: n < -1");
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!out.fits_ulong_p()) throw std::overflow_error("binomial: result exceeds 64 bits");
    return out.get_ui();
}

std::uint64_t multinomial_bound(std::int64_t r, std::int64_t d) {
    if (r < 0 || d < 0) throw std::invalid_argument("multinomial_bound: negative argument");
    return binomial(r + d - 1, d);
}

}  // namespace hrank
