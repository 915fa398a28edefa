#pragma once

// Truncated matrices of coefficients and the exact rank machinery built on
// them.  Rows are indexed by antiholomorphic monomials zeta^gamma, columns by
// holomorphic monomials z^alpha, both in graded reverse lexicographic order
// with variable order z_1 < ... < z_{n-1} < w.

#include "hrank/matrix.hpp"
#include "hrank/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace hrank {

/// Bijection between holomorphic monomials of degree <= d in n variables
/// and 0..C(n+d, d)-1.  Index 0 is the constant monomial.
class MonomialOrder {
public:
    MonomialOrder(int n, int d);

    int dim() const { return n_; }
    int degree() const { return d_; }
    std::size_t size() const { return exps_.size(); }

    const std::vector<int>& exponents(std::size_t idx) const { return exps_[idx]; }
    /// Index of an exponent vector, or size() if its degree exceeds d.
    std::size_t index_of(const std::vector<int>& e) const;

    /// Graded revlex comparison: lower degree first; within a degree, x comes
    /// first when the last nonzero entry of x - y is negative.
    static bool precedes(const std::vector<int>& x, const std::vector<int>& y);

private:
    int n_;
    int d_;
    std::vector<std::vector<int>> exps_;
    std::map<std::vector<int>, std::size_t> index_;
};

struct CoefficientMatrix {
    std::shared_ptr<const MonomialOrder> order;
    Matrix entries;  // entries(gamma, alpha) = R_{alpha gamma}

    std::size_t side() const { return entries.rows(); }
    /// The polarized monomial z^alpha zeta^gamma sitting at (row, col).
    Monomial monomial_at(std::size_t row, std::size_t col) const;
    /// (row, col) of a monomial, or nullopt if it lies outside the truncation.
    std::optional<std::pair<std::size_t, std::size_t>> position_of(const Monomial& m) const;
};

CoefficientMatrix build_matrix(const Polynomial& r, int d);
std::size_t exact_rank(const CoefficientMatrix& m);
/// Hermitian rank of a polynomial: exact rank of its full coefficient matrix.
std::size_t rank_of(const Polynomial& r);

/// R(z, zeta) = sum_k phi_k(z) * conj(psi_k)(zeta).  phi and psi are
/// holomorphic polynomials; psi is stored before conjugation.
struct RankFactorization {
    std::size_t rank = 0;
    std::vector<Polynomial> phi;
    std::vector<Polynomial> psi;
};

RankFactorization rank_factorize(const Polynomial& r);
/// sum_k phi_k(z) * conj(psi_k)(zeta), the polarization of the factorization.
Polynomial reconstruct(const RankFactorization& f, int n);

struct WeightedSquare {
    Scalar weight;  // real, positive
    Polynomial f;   // holomorphic
};

/// R = sum w+ |f|^2 - sum w- |g|^2 on the diagonal.
struct SignatureDecomposition {
    std::vector<WeightedSquare> positive;
    std::vector<WeightedSquare> negative;
    std::size_t square_count() const { return positive.size() + negative.size(); }
};

/// Hermitian congruence diagonalization of a real-valued R.  Weights are
/// rational in Q(i), and lie in Q(sqrt s) when R has radical coefficients.
/// Throws std::invalid_argument for input that is not real-valued.
SignatureDecomposition signature_decompose(const Polynomial& r);
Polynomial reconstruct(const SignatureDecomposition& s, int n);

/// Generalized binomial C(n, k) for n >= -1, k >= 0 (C(-1, 0) = 1).
std::uint64_t binomial(std::int64_t n, std::int64_t k);
/// C(r + d - 1, d): the multinomial upper bound on rank P^d for rank P = r.
std::uint64_t multinomial_bound(std::int64_t r, std::int64_t d);

/// |f|^2 polarized: f(z) * conj(f)(zeta) for holomorphic f.
Polynomial hermitian_square(const Polynomial& f);

}  // namespace hrank
