#pragma once

// Polarized polynomials R(z, w, zeta, eta) on C^n.
//
// Variables are split into a holomorphic block (z_1..z_{n-1}, w) and an
// independent antiholomorphic block (zeta_1..zeta_{n-1}, eta); the diagonal
// is zeta = conj(z), eta = conj(w).  The last coordinate of each block is w
// (resp. eta).

#include "hrank/matrix.hpp"
#include "hrank/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrank {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponents of a polarized monomial z^a w^b zeta^c eta^delta, stored as one
/// vector of length 2n: holomorphic block first, antiholomorphic second.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : n_(n), e_(static_cast<std::size_t>(2 * n), 0) {}
    Monomial(std::vector<int> holo, std::vector<int> anti);
    /// From the split data (a, b, c, delta); a and c have length n - 1.
    static Monomial from_parts(const std::vector<int>& a, int b, const std::vector<int>& c,
                               int delta);

    int dim() const { return n_; }
    int holo(int i) const { return e_[static_cast<std::size_t>(i)]; }
    int anti(int i) const { return e_[static_cast<std::size_t>(n_ + i)]; }
    int& holo(int i) { return e_[static_cast<std::size_t>(i)]; }
    int& anti(int i) { return e_[static_cast<std::size_t>(n_ + i)]; }

    // Split view used by the index-set combinatorics.
    std::vector<int> a() const;  // z exponents
    int b() const { return holo(n_ - 1); }
    std::vector<int> c() const;  // zeta exponents
    int delta() const { return anti(n_ - 1); }

    int holo_degree() const;
    int anti_degree() const;
    int z_degree() const { return holo_degree() - b(); }     // |a|
    int zeta_degree() const { return anti_degree() - delta(); }  // |c|

    std::vector<int> holo_part() const;
    std::vector<int> anti_part() const;

    bool is_one() const;
    /// Same exponents with the two blocks exchanged.
    Monomial swapped() const;

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// Display form, e.g. "z1^2*w*~z1*~w".
    std::string str() const;

private:
    int n_ = 0;
    std::vector<int> e_;
};

struct Bidegree {
    int holo = 0;
    int anti = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// A point of the polarized space: p for (z, w), q for (zeta, eta).
struct Point {
    std::vector<Scalar> p;
    std::vector<Scalar> q;

    static Point origin(int n);
    /// (p, conj p).
    static Point diagonal(std::vector<Scalar> p);
    int dim() const { return static_cast<int>(p.size()); }
    bool is_origin() const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(int n, const Scalar& c);
    static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));
    /// Holomorphic coordinate i (0-based; i == n-1 is w).
    static Polynomial holo_var(int n, int i);
    /// Antiholomorphic coordinate i (0-based; i == n-1 is eta).
    static Polynomial anti_var(int n, int i);

    int dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Monomial& m) const;
    /// Adds c to the coefficient of m, pruning a resulting zero.
    void add_term(const Monomial& m, const Scalar& c);

    /// nullopt is the distinguished verdict for the zero polynomial.
    std::optional<Bidegree> bidegree() const;
    /// max(j, k) over the bidegree; 0 for the zero polynomial.
    int max_degree() const;
    /// Drops every monomial of bidegree not <= (d, d).
    Polynomial truncated(int d) const;
    Scalar constant_term() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& s);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Expression text accepted by the parser, e.g. "w + ~w + z1*~z1".
    std::string str() const;

private:
    void require_same_dim(const Polynomial& o) const;

    int n_ = 0;
    TermMap terms_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Product truncated to bidegree (d, d).
Polynomial poly_mul_truncated(const Polynomial& a, const Polynomial& b, int d);
Polynomial poly_pow(const Polynomial& r, int d);

/// R*: coefficient at (a, b, c, delta) is conj of R's at (c, delta, a, b).
Polynomial conjugate_swap(const Polynomial& r);
bool is_real_valued(const Polynomial& r);
Scalar evaluate(const Polynomial& r, const Point& pt);

/// R(x + p0, y + q0).
Polynomial translate(const Polynomial& r, const std::vector<Scalar>& p0,
                     const std::vector<Scalar>& q0);
/// R(A x, B y); throws std::invalid_argument if A or B is singular.
Polynomial linear_change(const Polynomial& r, const Matrix& a, const Matrix& b);
/// R(A x + p0, B y + q0) without the invertibility check.
Polynomial affine_substitute(const Polynomial& r, const Matrix& a, const std::vector<Scalar>& p0,
                             const Matrix& b, const std::vector<Scalar>& q0);

std::optional<Bidegree> bidegree(const Polynomial& r);

}  // namespace hrank
