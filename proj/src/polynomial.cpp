#include "hrank/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace hrank {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> holo, std::vector<int> anti)
    : n_(static_cast<int>(holo.size())) {
    if (holo.size() != anti.size()) throw DimensionMismatch("monomial blocks differ in length");
    e_ = std::move(holo);
    e_.insert(e_.end(), anti.begin(), anti.end());
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::from_parts(const std::vector<int>& a, int b, const std::vector<int>& c,
                              int delta) {
    if (a.size() != c.size()) throw DimensionMismatch("z and zeta exponent lengths differ");
    std::vector<int> holo = a;
    holo.push_back(b);
    std::vector<int> anti = c;
    anti.push_back(delta);
    return Monomial(std::move(holo), std::move(anti));
}

std::vector<int> Monomial::a() const {
    return {e_.begin(), e_.begin() + (n_ - 1)};
}

std::vector<int> Monomial::c() const {
    return {e_.begin() + n_, e_.begin() + (2 * n_ - 1)};
}

int Monomial::holo_degree() const {
    return std::accumulate(e_.begin(), e_.begin() + n_, 0);
}

int Monomial::anti_degree() const {
    return std::accumulate(e_.begin() + n_, e_.end(), 0);
}

std::vector<int> Monomial::holo_part() const { return {e_.begin(), e_.begin() + n_}; }
std::vector<int> Monomial::anti_part() const { return {e_.begin() + n_, e_.end()}; }

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial Monomial::swapped() const {
    Monomial m(n_);
    for (int i = 0; i < n_; ++i) {
        m.holo(i) = anti(i);
        m.anti(i) = holo(i);
    }
    return m;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    if (x.n_ != y.n_) throw DimensionMismatch("monomial dimension mismatch");
    Monomial m = x;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += y.e_[i];
    return m;
}

namespace {

std::string var_name(int n, int i, bool anti) {
    std::string s = anti ? "~" : "";
    if (i == n - 1) return s + "w";
    return s + "z" + std::to_string(i + 1);
}

}  // namespace

std::string Monomial::str() const {
    std::string out;
    auto emit = [&](int i, bool anti_block) {
        const int e = anti_block ? anti(i) : holo(i);
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += var_name(n_, i, anti_block);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < n_; ++i) emit(i, false);
    for (int i = 0; i < n_; ++i) emit(i, true);
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- Point

Point Point::origin(int n) {
    return {std::vector<Scalar>(static_cast<std::size_t>(n)),
            std::vector<Scalar>(static_cast<std::size_t>(n))};
}

Point Point::diagonal(std::vector<Scalar> p) {
    Point pt;
    pt.q.reserve(p.size());
    for (const auto& x : p) pt.q.push_back(x.conj());
    pt.p = std::move(p);
    return pt;
}

bool Point::is_origin() const {
    return std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_zero(); }) &&
           std::all_of(q.begin(), q.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int n, const Scalar& c) {
    Polynomial p(n);
    p.add_term(Monomial(n), c);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::holo_var(int n, int i) {
    Monomial m(n);
    m.holo(i) = 1;
    return monomial(m);
}

Polynomial Polynomial::anti_var(int n, int i) {
    Monomial m(n);
    m.anti(i) = 1;
    return monomial(m);
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.dim() != n_) throw DimensionMismatch("term dimension does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Bidegree> Polynomial::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree bd;
    for (const auto& [m, c] : terms_) {
        bd.holo = std::max(bd.holo, m.holo_degree());
        bd.anti = std::max(bd.anti, m.anti_degree());
    }
    return bd;
}

int Polynomial::max_degree() const {
    const auto bd = bidegree();
    return bd ? std::max(bd->holo, bd->anti) : 0;
}

Polynomial Polynomial::truncated(int d) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (m.holo_degree() <= d && m.anti_degree() <= d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Scalar Polynomial::constant_term() const { return coeff(Monomial(n_)); }

void Polynomial::require_same_dim(const Polynomial& o) const {
    if (o.n_ != n_)
        throw DimensionMismatch("polynomial dimensions differ: " + std::to_string(n_) + " vs " +
                                std::to_string(o.n_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        std::string term;
        if (m.is_one()) {
            term = compound ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            term = m.str();
        } else if (cs == "-1") {
            term = "-" + m.str();
        } else {
            term = (compound ? "(" + cs + ")" : cs) + "*" + m.str();
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

// ---------------------------------------------------------------- operations

namespace {

Polynomial mul_impl(const Polynomial& a, const Polynomial& b, int trunc) {
    if (a.dim() != b.dim()) throw DimensionMismatch("poly_mul: dimension mismatch");
    Polynomial out(a.dim());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            if (trunc >= 0 && (m.holo_degree() > trunc || m.anti_degree() > trunc)) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

}  // namespace

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return mul_impl(a, b, -1); }

Polynomial poly_mul_truncated(const Polynomial& a, const Polynomial& b, int d) {
    if (d < 0) throw std::invalid_argument("negative truncation order");
    return mul_impl(a, b, d);
}

Polynomial poly_pow(const Polynomial& r, int d) {
    if (d < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Polynomial out = Polynomial::constant(r.dim(), Scalar(1));
    for (int k = 0; k < d; ++k) out = poly_mul(out, r);
    return out;
}

Polynomial conjugate_swap(const Polynomial& r) {
    Polynomial out(r.dim());
    for (const auto& [m, c] : r.terms()) out.add_term(m.swapped(), c.conj());
    return out;
}

bool is_real_valued(const Polynomial& r) { return conjugate_swap(r) == r; }

namespace {

Scalar ipow(const Scalar& x, int e) {
    Scalar out(1);
    for (int k = 0; k < e; ++k) out *= x;
    return out;
}

}  // namespace

Scalar evaluate(const Polynomial& r, const Point& pt) {
    if (pt.dim() != r.dim() || pt.q.size() != pt.p.size())
        throw DimensionMismatch("evaluate: point dimension mismatch");
    const int n = r.dim();
    Scalar total;
    for (const auto& [m, c] : r.terms()) {
        Scalar v = c;
        for (int i = 0; i < n && !v.is_zero(); ++i) {
            if (m.holo(i) > 0) v *= ipow(pt.p[static_cast<std::size_t>(i)], m.holo(i));
            if (m.anti(i) > 0) v *= ipow(pt.q[static_cast<std::size_t>(i)], m.anti(i));
        }
        total += v;
    }
    return total;
}

Polynomial affine_substitute(const Polynomial& r, const Matrix& a, const std::vector<Scalar>& p0,
                             const Matrix& b, const std::vector<Scalar>& q0) {
    const int n_old = r.dim();
    const auto n_new = static_cast<int>(a.cols());
    if (a.rows() != static_cast<std::size_t>(n_old) || b.rows() != static_cast<std::size_t>(n_old) ||
        b.cols() != a.cols() || p0.size() != static_cast<std::size_t>(n_old) ||
        q0.size() != static_cast<std::size_t>(n_old))
        throw DimensionMismatch("affine_substitute: shape mismatch");

    // Image of each old variable as a linear polynomial in the new ones.
    auto image = [&](int i, bool anti) {
        Polynomial f = Polynomial::constant(n_new, anti ? q0[static_cast<std::size_t>(i)]
                                                        : p0[static_cast<std::size_t>(i)]);
        const Matrix& mtx = anti ? b : a;
        for (int j = 0; j < n_new; ++j) {
            const Scalar& s = mtx(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (s.is_zero()) continue;
            f += (anti ? Polynomial::anti_var(n_new, j) : Polynomial::holo_var(n_new, j)) * s;
        }
        return f;
    };

    // Power caches, indexed [block * n_old + i][e].
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(2 * n_old));
    auto power = [&](int i, bool anti, int e) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>((anti ? n_old : 0) + i)];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(n_new, Scalar(1)));
            cache.push_back(image(i, anti));
        }
        while (static_cast<int>(cache.size()) <= e) cache.push_back(poly_mul(cache.back(), cache[1]));
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial out(n_new);
    for (const auto& [m, c] : r.terms()) {
        Polynomial term = Polynomial::constant(n_new, c);
        for (int i = 0; i < n_old && !term.is_zero(); ++i) {
            if (m.holo(i) > 0) term = poly_mul(term, power(i, false, m.holo(i)));
            if (m.anti(i) > 0) term = poly_mul(term, power(i, true, m.anti(i)));
        }
        out += term;
    }
    return out;
}

Polynomial translate(const Polynomial& r, const std::vector<Scalar>& p0,
                     const std::vector<Scalar>& q0) {
    const auto n = static_cast<std::size_t>(r.dim());
    if (p0.size() != n || q0.size() != n) throw DimensionMismatch("translate: shift dimension");
    const bool zero_shift =
        std::all_of(p0.begin(), p0.end(), [](const Scalar& s) { return s.is_zero(); }) &&
        std::all_of(q0.begin(), q0.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero_shift) return r;
    return affine_substitute(r, Matrix::identity(n), p0, Matrix::identity(n), q0);
}

Polynomial linear_change(const Polynomial& r, const Matrix& a, const Matrix& b) {
    const auto n = static_cast<std::size_t>(r.dim());
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
        throw DimensionMismatch("linear_change: matrix shape");
    if (!inverse(a) || !inverse(b)) throw std::invalid_argument("linear_change: singular matrix");
    return affine_substitute(r, a, std::vector<Scalar>(n), b, std::vector<Scalar>(n));
}

std::optional<Bidegree> bidegree(const Polynomial& r) { return r.bidegree(); }

}  // namespace hrank
