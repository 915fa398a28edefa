#include "hrank/normal_form.hpp"

#include "hrank/coeff_matrix.hpp"

#include <random>

namespace hrank {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

bool all_zero(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Invertible A with l^T A = e_n^T.  The last column is e_p / l_p, with p = w
/// whenever l_w != 0 so that an existing w coordinate is only rescaled.
Matrix basis_sending_to_last(const std::vector<Scalar>& l) {
    const std::size_t n = l.size();
    std::size_t p = n - 1;
    if (l[p].is_zero())
        for (p = 0; l[p].is_zero(); ++p) {
        }
    const Scalar inv = l[p].inverse();
    Matrix a(n, n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p) continue;
        a(k, col) = Scalar(1);
        a(p, col) = -l[k] * inv;
        ++col;
    }
    a(p, n - 1) = inv;
    return a;
}

/// diag(m, 1).
Matrix with_unit_corner(const Matrix& m) {
    const std::size_t n = m.rows() + 1;
    Matrix out(n, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    out(n - 1, n - 1) = Scalar(1);
    return out;
}

Matrix transposition(std::size_t n, std::size_t i, std::size_t j) {
    Matrix p = Matrix::identity(n);
    p.swap_cols(i, j);
    return p;
}

Matrix block(const Matrix& k, std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = k(i, j);
    return out;
}

bool is_unit_vector_last(const std::vector<Scalar>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!v[i].is_zero()) return false;
    return v.back() == Scalar(1);
}

/// rows x cols block of K equal to diag(I_r, 0).
bool block_is_partial_identity(const Matrix& k, std::size_t rows, std::size_t cols, int r) {
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const bool one = i == j && static_cast<int>(i) < r;
            if (!(k(i, j) == Scalar(one ? 1 : 0))) return false;
        }
    return true;
}

bool matches_form(const Polynomial& p, LinearForm form, int r) {
    const LinearData ld = linear_data(p);
    const std::size_t n = ld.l.size();
    if (!ld.c0.is_zero()) return false;
    switch (form) {
        case LinearForm::Form1:
            return is_unit_vector_last(ld.l) && is_unit_vector_last(ld.m) &&
                   block_is_partial_identity(ld.k, n - 1, n - 1, r);
        case LinearForm::Form2:
            return is_unit_vector_last(ld.l) && all_zero(ld.m) &&
                   block_is_partial_identity(ld.k, n, n - 1, r);
        case LinearForm::Form3: {
            if (!all_zero(ld.l) || !all_zero(ld.m)) return false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const bool one = (i == j) && (static_cast<int>(i) < r || i == n - 1);
                    if (!(ld.k(i, j) == Scalar(one ? 1 : 0))) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace

LinearData linear_data(const Polynomial& p) {
    const int n = p.dim();
    LinearData ld{Scalar(0), std::vector<Scalar>(sz(n)), std::vector<Scalar>(sz(n)), Matrix(sz(n), sz(n))};
    for (const auto& [m, c] : p.terms()) {
        const int hd = m.holo_degree(), ad = m.anti_degree();
        if (hd > 1 || ad > 1) throw std::invalid_argument("linear_data: bidegree exceeds (1,1)");
        int hi = -1, ai = -1;
        for (int i = 0; i < n; ++i) {
            if (m.holo(i)) hi = i;
            if (m.anti(i)) ai = i;
        }
        if (hi < 0 && ai < 0) ld.c0 = c;
        else if (ai < 0) ld.l[sz(hi)] = c;
        else if (hi < 0) ld.m[sz(ai)] = c;
        else ld.k(sz(ai), sz(hi)) = c;
    }
    return ld;
}

std::string to_string(LinearForm f) {
    switch (f) {
        case LinearForm::Form1: return "Form1";
        case LinearForm::Form2: return "Form2";
        case LinearForm::Form3: return "Form3";
    }
    return "?";
}

NormalFormReport classify_linear_form(const Polynomial& input) {
    if (input.is_zero()) throw std::invalid_argument("classify_linear_form: P is identically zero");
    LinearData ld = linear_data(input);
    if (!ld.c0.is_zero()) throw std::invalid_argument("classify_linear_form: P does not vanish at the origin");
    const std::size_t n = sz(input.dim());

    NormalFormReport rep;
    Polynomial p = input;
    auto push = [&](const ChangeStep& s) {
        p = apply_step(s, p);
        rep.trail.push(s);
    };

    if (all_zero(ld.l) && !all_zero(ld.m)) {
        push(BlockSwap{});
        ld = linear_data(p);
    }
    if (!all_zero(ld.l)) {
        const bool both = !all_zero(ld.m);
        push(AffinePairChange::linear(basis_sending_to_last(ld.l),
                                      both ? basis_sending_to_last(ld.m) : Matrix::identity(n)));
        ld = linear_data(p);
        // Form1 normalizes the z-zeta block; Form2 the whole (zeta, eta) x z
        // block, which also clears the z-eta terms.
        const std::size_t rows = both ? n - 1 : n;
        if (n > 1) {
            const RankNormalForm rnf = rank_normal_form(block(ld.k, rows, n - 1));
            const Matrix bt = rnf.row_ops.transpose();
            push(AffinePairChange::linear(with_unit_corner(rnf.col_ops), both ? with_unit_corner(bt) : bt));
            rep.r = static_cast<int>(rnf.rank);
        }
        rep.form = both ? LinearForm::Form1 : LinearForm::Form2;
    } else {
        const RankNormalForm rnf = rank_normal_form(ld.k);
        push(AffinePairChange::linear(rnf.col_ops, rnf.row_ops.transpose()));
        const std::size_t rho = rnf.rank;
        if (rho - 1 != n - 1) {
            const Matrix perm = transposition(n, rho - 1, n - 1);
            push(AffinePairChange::linear(perm, perm));
        }
        rep.form = LinearForm::Form3;
        rep.r = static_cast<int>(rho) - 1;
    }
    rep.transformed = p;
    if (!matches_form(p, rep.form, rep.r))
        throw std::logic_error("classify_linear_form: normalization did not reach " + to_string(rep.form));
    return rep;
}

bool is_full_rank_normal_form(const Polynomial& p) {
    if (p.is_zero()) return false;
    const auto bd = p.bidegree();
    if (bd->holo > 1 || bd->anti > 1) return false;
    return matches_form(p, LinearForm::Form1, p.dim() - 1);
}

FullRankReduction reduce_full_rank(const Polynomial& input, const AnalyticJet& q, int d) {
    const std::size_t rank_in = rank_of(input);
    if (rank_in <= 1) throw std::invalid_argument("reduce_full_rank: rank P <= 1");
    if (q.dim() != input.dim()) throw DimensionMismatch("reduce_full_rank: dimension mismatch");

    const NormalFormReport first = classify_linear_form(input);
    NormalFormReport rep = first;
    Polynomial p = first.transformed;
    JetRecipe qr = q.recipe.transported(first.trail);
    const std::size_t n = sz(input.dim());

    if (first.form == LinearForm::Form1) {
        const auto v = qr.value_at(Point::origin(input.dim()));
        if (!v.defined || !v.nonzero)
            throw std::invalid_argument("reduce_full_rank: Q must be defined and nonzero at the base point");
    } else {
        // Move to z_r = eps (and eta = eps for Form3), then exchange eta and
        // zeta_r: both linear terms appear and the result is Form1.
        const std::size_t zr = sz(first.r - 1);
        std::optional<AffinePairChange> shift;
        for (int k = 0; k <= 20 && !shift; ++k) {
            const Rational eps(1, mpz_class(1) << k);
            Point pt = Point::origin(input.dim());
            pt.p[zr] = Scalar(eps);
            if (first.form == LinearForm::Form3) pt.q[n - 1] = Scalar(eps);
            if (!evaluate(p, pt).is_zero()) throw std::logic_error("reduce_full_rank: shifted point is off the zero set");
            const auto v = qr.value_at(pt);
            if (v.defined && v.nonzero) {
                shift = AffinePairChange::translation(pt.p, pt.q);
                rep.epsilon = eps;
            }
        }
        if (!shift) throw NoAdmissibleShift("reduce_full_rank: Q vanishes or is undefined at every dyadic shift");
        const Matrix perm = transposition(n, zr, n - 1);
        ChangeTrail steps;
        steps.push(*shift);
        steps.push(AffinePairChange::linear(Matrix::identity(n), perm));
        p = steps.apply(p);
        qr = qr.transported(steps);
        rep.trail.append(steps);

        const NormalFormReport second = classify_linear_form(p);
        if (second.form != LinearForm::Form1)
            throw std::logic_error("reduce_full_rank: shift did not produce Form1");
        p = second.transformed;
        qr = qr.transported(second.trail);
        rep.trail.append(second.trail);
        rep.r = second.r;
    }

    if (rep.r < static_cast<int>(n) - 1) {
        DropVariables drop{static_cast<int>(n), {}};
        for (int k = 0; k < rep.r; ++k) drop.kept.push_back(k);
        p = apply_step(drop, p);
        qr = qr.transported(ChangeStep(drop));
        rep.trail.push(drop);
    }
    // Report r as classified; the reduced dimension is p.dim().
    rep.r = first.r;
    rep.form = first.form;
    rep.transformed = p;

    if (!is_full_rank_normal_form(p)) throw std::logic_error("reduce_full_rank: result is not in full-rank normal form");
    if (rank_of(p) != rank_in) throw std::logic_error("reduce_full_rank: rank changed under normalization");

    AnalyticJet jet = jet_of(qr, d);
    if (jet.constant_term().is_zero()) throw std::logic_error("reduce_full_rank: transported Q vanishes at the origin");
    return {std::move(p), std::move(jet), std::move(rep)};
}

// ---------------------------------------------------------------- zeros

namespace {

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    return Rational(sqrt(num), sqrt(den));
}

/// Rational roots of a s^2 + b s + c, larger root first.
std::vector<Rational> rational_roots(const Rational& a, const Rational& b, const Rational& c) {
    if (sgn(a) == 0) {
        if (sgn(b) != 0) return {Rational(-c / b)};
        if (sgn(c) == 0) return {Rational(0)};
        return {};
    }
    const auto root = rational_sqrt(b * b - 4 * a * c);
    if (!root) return {};
    std::vector<Rational> out{Rational((-b + *root) / (2 * a)), Rational((-b - *root) / (2 * a))};
    if (out[0] < out[1]) std::swap(out[0], out[1]);
    return out;
}

/// q (x^2 + y^2) + u x + v y + w = 0 over the rationals.
struct RealQuadric {
    Rational q, u, v, w;
    bool trivial() const { return sgn(q) == 0 && sgn(u) == 0 && sgn(v) == 0 && sgn(w) == 0; }
    Rational at(const Rational& x, const Rational& y) const { return q * (x * x + y * y) + u * x + v * y + w; }
};

using RationalPair = std::pair<Rational, Rational>;

/// Roots of a quadric along (x0, y0) + s (dx, dy).
std::optional<RationalPair> on_line(const RealQuadric& e, const Rational& x0, const Rational& y0,
                                    const Rational& dx, const Rational& dy) {
    const Rational a = e.q * (dx * dx + dy * dy);
    const Rational b = 2 * e.q * (x0 * dx + y0 * dy) + e.u * dx + e.v * dy;
    const Rational c = e.at(x0, y0);
    for (const auto& s : rational_roots(a, b, c)) return RationalPair(x0 + s * dx, y0 + s * dy);
    return std::nullopt;
}

std::optional<RationalPair> solve_system(const std::vector<RealQuadric>& all) {
    std::vector<RealQuadric> eqs;
    for (const auto& e : all)
        if (!e.trivial()) eqs.push_back(e);

    std::optional<RealQuadric> quad;
    std::vector<RealQuadric> lin;
    for (const auto& e : eqs) {
        if (!quad && sgn(e.q) != 0) quad = e;
    }
    for (const auto& e : eqs) {
        if (!quad) {
            lin.push_back(e);
            continue;
        }
        // Combinations q0 E - q E0 are linear.
        RealQuadric l{0, quad->q * e.u - e.q * quad->u, quad->q * e.v - e.q * quad->v, quad->q * e.w - e.q * quad->w};
        if (!l.trivial()) lin.push_back(l);
    }

    auto check = [&](const RationalPair& xy) -> std::optional<RationalPair> {
        for (const auto& e : eqs)
            if (sgn(e.at(xy.first, xy.second)) != 0) return std::nullopt;
        return xy;
    };

    // Gaussian elimination on the linear equations u x + v y + w = 0.
    std::optional<RealQuadric> px, py;  // pivots in x and in y
    auto eliminate = [](RealQuadric& e, const RealQuadric& piv, bool in_x) {
        const Rational f = in_x ? Rational(e.u / piv.u) : Rational(e.v / piv.v);
        e.u -= f * piv.u;
        e.v -= f * piv.v;
        e.w -= f * piv.w;
    };
    for (auto& e : lin)
        if (!px && sgn(e.u) != 0) px = e;
    if (px)
        for (auto& e : lin) eliminate(e, *px, true);
    for (auto& e : lin)
        if (!py && sgn(e.v) != 0) py = e;
    if (py) {
        for (auto& e : lin) eliminate(e, *py, false);
        if (px) eliminate(*px, *py, false);
    }
    for (const auto& e : lin)
        if (sgn(e.u) == 0 && sgn(e.v) == 0 && sgn(e.w) != 0) return std::nullopt;

    if (px && py) {
        const Rational y = -py->w / py->v;
        const Rational x = -(px->w + px->v * y) / px->u;
        return check({x, y});
    }
    if (px || py) {
        Rational x0 = 0, y0 = 0, dx = 0, dy = 0;
        if (px) {
            x0 = -px->w / px->u, dx = -px->v / px->u, dy = 1;
        } else {
            y0 = -py->w / py->v, dx = 1;
        }
        if (!quad) return check({x0, y0});
        if (auto xy = on_line(*quad, x0, y0, dx, dy)) return check(*xy);
        return std::nullopt;
    }
    if (!quad) return RationalPair(0, 0);
    // A single circle: intersect with a few rational lines.
    const Rational one(1), zero(0);
    std::vector<std::array<Rational, 4>> lines{{zero, zero, one, zero}, {zero, zero, zero, one},
                                               {zero, zero, one, one}, {zero, zero, one, Rational(-1)}};
    for (const Rational& c : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2)}) {
        lines.push_back({zero, c, one, zero});
        lines.push_back({c, zero, zero, one});
    }
    for (const auto& ln : lines)
        if (auto xy = on_line(*quad, ln[0], ln[1], ln[2], ln[3]))
            if (auto ok = check(*xy)) return ok;
    return std::nullopt;
}

std::vector<RealQuadric> components(const Scalar& q, const Scalar& u, const Scalar& v, const Scalar& w) {
    return {{q.re(), u.re(), v.re(), w.re()},
            {q.im(), u.im(), v.im(), w.im()},
            {q.rad_re(), u.rad_re(), v.rad_re(), w.rad_re()},
            {q.rad_im(), u.rad_im(), v.rad_im(), w.rad_im()}};
}

}  // namespace

std::optional<Point> find_zero(const Polynomial& p) {
    const int n = p.dim();
    const LinearData ld = linear_data(p);
    if (ld.c0.is_zero()) return Point::origin(n);

    std::vector<std::vector<Scalar>> dirs;
    for (int k = 0; k < n; ++k) {
        std::vector<Scalar> v(sz(n));
        v[sz(k)] = Scalar(1);
        dirs.push_back(v);
    }
    for (int k = 0; k < n; ++k) {
        std::vector<Scalar> v(sz(n));
        v[sz(k)] += Scalar(1);
        v[sz((k + 1) % n)] += Scalar::i();
        dirs.push_back(v);
    }
    std::mt19937_64 rng(0x5eed);
    while (dirs.size() < sz(2 * n + 32)) {
        std::vector<Scalar> v(sz(n));
        for (auto& x : v) x = Scalar(Rational(static_cast<long>(rng() % 5) - 2), Rational(static_cast<long>(rng() % 5) - 2));
        if (!all_zero(v)) dirs.push_back(v);
    }

    for (const auto& v : dirs) {
        // Along z = t v: f(t) = c0 + a t + b conj(t) + k |t|^2.
        Scalar a, b, k;
        for (std::size_t i = 0; i < sz(n); ++i) {
            a += ld.l[i] * v[i];
            b += ld.m[i] * v[i].conj();
            for (std::size_t j = 0; j < sz(n); ++j) k += ld.k(j, i) * v[i] * v[j].conj();
        }
        // t = x + i y: f = c0 + (a + b) x + i (a - b) y + k (x^2 + y^2).
        const auto xy = solve_system(components(k, a + b, Scalar::i() * (a - b), ld.c0));
        if (!xy) continue;
        const Scalar t(xy->first, xy->second);
        std::vector<Scalar> pt(sz(n));
        for (std::size_t i = 0; i < sz(n); ++i) pt[i] = t * v[i];
        Point zero = Point::diagonal(pt);
        if (evaluate(p, zero).is_zero()) return zero;
    }
    return std::nullopt;
}

std::optional<Point> find_nonvanishing_zero(const Polynomial& p, const JetRecipe& q) {
    const int n = p.dim();
    linear_data(p);  // bidegree check
    std::mt19937_64 rng(0xb0a7);
    auto small = [&] { return Scalar(Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 5) - 2)); };

    for (int k = 0; k <= 10; ++k) {
        const Rational eps(1, mpz_class(1) << k);
        for (int trial = 0; trial < 8; ++trial) {
            Point base = Point::origin(n);
            for (auto& x : base.p) x = small() * Scalar(eps);
            for (auto& x : base.q) x = small() * Scalar(eps);
            // P is affine in each single coordinate: solve for one of them.
            for (int slot = 0; slot < 2 * n; ++slot) {
                Point pt = base;
                Scalar& x = slot < n ? pt.p[sz(slot)] : pt.q[sz(slot - n)];
                x = Scalar(0);
                const Scalar g = evaluate(p, pt);
                x = Scalar(1);
                const Scalar l = evaluate(p, pt) - g;
                if (l.is_zero()) continue;
                x = -g / l;
                if (!evaluate(p, pt).is_zero()) continue;
                const auto v = q.value_at(pt);
                if (v.defined && v.nonzero) return pt;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- division

namespace {

int total_degree(const Monomial& m) { return m.holo_degree() + m.anti_degree(); }

int max_total_degree(const Polynomial& f) {
    int deg = 0;
    for (const auto& [m, c] : f.terms()) deg = std::max(deg, total_degree(m));
    return deg;
}

/// h with h * l = f, when l(0) = 1 and such a polynomial h exists.
std::optional<Polynomial> divide_by_unit(const Polynomial& f, const Polynomial& l) {
    const int bound = max_total_degree(f);
    Polynomial rem = f, h(f.dim());
    while (!rem.is_zero()) {
        int low = total_degree(rem.terms().begin()->first);
        for (const auto& [m, c] : rem.terms()) low = std::min(low, total_degree(m));
        if (low > bound) return std::nullopt;
        Polynomial lowest(f.dim());
        for (const auto& [m, c] : rem.terms())
            if (total_degree(m) == low) lowest.add_term(m, c);
        h += lowest;
        rem -= poly_mul(lowest, l);
    }
    return h;
}

/// Exact quotient of q by p = w l + g, or nullopt.
std::optional<Polynomial> divide(Polynomial q, const Polynomial& p, const Polynomial& l) {
    const int n = q.dim();
    const int w = n - 1;
    Polynomial quotient(n);
    for (;;) {
        int deg = 0;
        for (const auto& [m, c] : q.terms()) deg = std::max(deg, m.holo(w));
        if (deg == 0) break;
        Polynomial lead(n);
        for (const auto& [m, c] : q.terms())
            if (m.holo(w) == deg) {
                Monomial rest = m;
                rest.holo(w) = 0;
                lead.add_term(rest, c);
            }
        const auto h = divide_by_unit(lead, l);
        if (!h) return std::nullopt;
        Monomial wpow(n);
        wpow.holo(w) = deg - 1;
        const Polynomial term = poly_mul(*h, Polynomial::monomial(wpow));
        quotient += term;
        q -= poly_mul(term, p);
    }
    if (!q.is_zero()) return std::nullopt;
    return quotient;
}

}  // namespace

FactorOut factor_out_P(const Polynomial& q, const Polynomial& p) {
    if (q.dim() != p.dim()) throw DimensionMismatch("factor_out_P: dimension mismatch");
    if (q.is_zero()) throw std::invalid_argument("factor_out_P: Q is identically zero");
    const int n = p.dim();
    const int w = n - 1;
    Polynomial l(n);
    for (const auto& [m, c] : p.terms()) {
        if (m.holo(w) > 1) throw std::invalid_argument("factor_out_P: P is not linear in w");
        if (m.holo(w) == 1) {
            Monomial rest = m;
            rest.holo(w) = 0;
            l.add_term(rest, c);
        }
    }
    if (!(l.constant_term() == Scalar(1)))
        throw std::invalid_argument("factor_out_P: coefficient of w in P must have constant term 1");

    FactorOut out{q, 0};
    while (auto next = divide(out.quotient, p, l)) {
        out.quotient = std::move(*next);
        ++out.power;
    }
    return out;
}

}  // namespace hrank
