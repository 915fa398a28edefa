#include "hrank/change.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hrank {

AffinePairChange AffinePairChange::identity(int n) {
    const auto sz = static_cast<std::size_t>(n);
    return {Matrix::identity(sz), std::vector<Scalar>(sz), Matrix::identity(sz),
            std::vector<Scalar>(sz)};
}

AffinePairChange AffinePairChange::translation(std::vector<Scalar> p0, std::vector<Scalar> q0) {
    if (p0.size() != q0.size()) throw DimensionMismatch("translation: shift lengths differ");
    const std::size_t n = p0.size();
    return {Matrix::identity(n), std::move(p0), Matrix::identity(n), std::move(q0)};
}

AffinePairChange AffinePairChange::linear(Matrix a, Matrix b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatch("linear change: matrices must be square and equal-sized");
    const std::size_t n = a.rows();
    AffinePairChange c{std::move(a), std::vector<Scalar>(n), std::move(b), std::vector<Scalar>(n)};
    c.check_invertible();
    return c;
}

bool AffinePairChange::is_identity() const { return *this == identity(dim()); }

void AffinePairChange::check_invertible() const {
    if (!hrank::inverse(a) || !hrank::inverse(b))
        throw std::invalid_argument("affine pair change with a singular linear part");
}

Polynomial AffinePairChange::apply(const Polynomial& r) const {
    return affine_substitute(r, a, p0, b, q0);
}

Point AffinePairChange::to_old(const Point& pt) const {
    const auto n = a.rows();
    Point out = Point::origin(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Scalar x = p0[i], y = q0[i];
        for (std::size_t j = 0; j < n; ++j) {
            x += a(i, j) * pt.p[j];
            y += b(i, j) * pt.q[j];
        }
        out.p[i] = x;
        out.q[i] = y;
    }
    return out;
}

namespace {

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

std::vector<Scalar> add(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

AffinePairChange AffinePairChange::compose(const AffinePairChange& first,
                                           const AffinePairChange& second) {
    // x = A1 x' + p1, x' = A2 x'' + p2  =>  x = A1 A2 x'' + (A1 p2 + p1)
    return {first.a * second.a, add(mat_vec(first.a, second.p0), first.p0), first.b * second.b,
            add(mat_vec(first.b, second.q0), first.q0)};
}

AffinePairChange AffinePairChange::inverse() const {
    auto ai = hrank::inverse(a);
    auto bi = hrank::inverse(b);
    if (!ai || !bi) throw std::invalid_argument("inverse of a singular affine pair change");
    std::vector<Scalar> p = mat_vec(*ai, p0), q = mat_vec(*bi, q0);
    for (auto& x : p) x = -x;
    for (auto& x : q) x = -x;
    return {std::move(*ai), std::move(p), std::move(*bi), std::move(q)};
}

Polynomial apply_step(const ChangeStep& step, const Polynomial& r) {
    return std::visit(
        [&](const auto& s) -> Polynomial {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AffinePairChange>) {
                return s.apply(r);
            } else if constexpr (std::is_same_v<T, BlockSwap>) {
                Polynomial out(r.dim());
                for (const auto& [m, c] : r.terms()) out.add_term(m.swapped(), c);
                return out;
            } else {
                if (r.dim() != s.old_dim) throw DimensionMismatch("drop step: dimension mismatch");
                const std::size_t n_new = s.kept.size() + 1;
                Matrix sel(static_cast<std::size_t>(s.old_dim), n_new);
                for (std::size_t j = 0; j < s.kept.size(); ++j)
                    sel(static_cast<std::size_t>(s.kept[j]), j) = Scalar(1);
                sel(static_cast<std::size_t>(s.old_dim - 1), n_new - 1) = Scalar(1);
                const std::vector<Scalar> zero(static_cast<std::size_t>(s.old_dim));
                return affine_substitute(r, sel, zero, sel, zero);
            }
        },
        step);
}

std::string describe(const ChangeStep& step) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AffinePairChange>) {
                std::ostringstream os;
                os << "affine(A=[";
                for (std::size_t i = 0; i < s.a.rows(); ++i) {
                    if (i) os << ";";
                    for (std::size_t j = 0; j < s.a.cols(); ++j) os << (j ? "," : "") << s.a(i, j);
                }
                os << "],p0=[";
                for (std::size_t i = 0; i < s.p0.size(); ++i) os << (i ? "," : "") << s.p0[i];
                os << "],B=[";
                for (std::size_t i = 0; i < s.b.rows(); ++i) {
                    if (i) os << ";";
                    for (std::size_t j = 0; j < s.b.cols(); ++j) os << (j ? "," : "") << s.b(i, j);
                }
                os << "],q0=[";
                for (std::size_t i = 0; i < s.q0.size(); ++i) os << (i ? "," : "") << s.q0[i];
                os << "])";
                return os.str();
            } else if constexpr (std::is_same_v<T, BlockSwap>) {
                return "swap((z,w),(zeta,eta))";
            } else {
                std::ostringstream os;
                os << "drop(n=" << s.old_dim << ",keep_z=[";
                for (std::size_t i = 0; i < s.kept.size(); ++i) os << (i ? "," : "") << s.kept[i] + 1;
                os << "])";
                return os.str();
            }
        },
        step);
}

void ChangeTrail::push(const ChangeStep& step) {
    if (const auto* aff = std::get_if<AffinePairChange>(&step)) {
        if (aff->is_identity()) return;
        if (!steps_.empty()) {
            if (auto* last = std::get_if<AffinePairChange>(&steps_.back())) {
                *last = AffinePairChange::compose(*last, *aff);
                if (last->is_identity()) steps_.pop_back();
                return;
            }
        }
    }
    if (std::holds_alternative<BlockSwap>(step) && !steps_.empty() &&
        std::holds_alternative<BlockSwap>(steps_.back())) {
        steps_.pop_back();
        return;
    }
    steps_.push_back(step);
}

void ChangeTrail::append(const ChangeTrail& other) {
    for (const auto& s : other.steps_) push(s);
}

bool ChangeTrail::has_block_swap() const {
    return std::any_of(steps_.begin(), steps_.end(),
                       [](const ChangeStep& s) { return std::holds_alternative<BlockSwap>(s); });
}

bool ChangeTrail::has_drop() const {
    return std::any_of(steps_.begin(), steps_.end(),
                       [](const ChangeStep& s) { return std::holds_alternative<DropVariables>(s); });
}

Polynomial ChangeTrail::apply(const Polynomial& r) const {
    Polynomial out = r;
    for (const auto& s : steps_) out = apply_step(s, out);
    return out;
}

ChangeTrail ChangeTrail::inverse() const {
    if (has_drop()) throw std::logic_error("a trail that drops variables has no inverse");
    // A block swap conjugates an affine step by exchanging its two halves.
    ChangeTrail inv;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (const auto* aff = std::get_if<AffinePairChange>(&*it)) {
            inv.push(aff->inverse());
        } else {
            inv.push(BlockSwap{});
        }
    }
    return inv;
}

}  // namespace hrank
