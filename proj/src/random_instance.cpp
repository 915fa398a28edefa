#include "hrank/random_instance.hpp"

#include "hrank/change.hpp"

namespace hrank {

// Raw modulo keeps draws identical across standard libraries.
long RandomSource::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

bool RandomSource::chance(int one_in) { return integer(1, one_in) == 1; }

Scalar RandomSource::gaussian_rational() {
    for (;;) {
        const Rational re(integer(-3, 3), integer(1, 3));
        const Rational im(integer(-3, 3), integer(1, 3));
        Scalar s(re, im);
        if (!s.is_zero()) return s;
    }
}

Scalar RandomSource::sparse_gaussian_rational(int zero_one_in) {
    return chance(zero_one_in) ? Scalar(0) : gaussian_rational();
}

std::vector<Scalar> RandomSource::point(int n) {
    std::vector<Scalar> p(static_cast<std::size_t>(n));
    for (auto& x : p) x = sparse_gaussian_rational(3);
    return p;
}

namespace {

Polynomial xy(int n, int i, int j) { return poly_mul(Polynomial::holo_var(n, i), Polynomial::anti_var(n, j)); }

}  // namespace

Polynomial random_normal_form(RandomSource& rng, int n) {
    const int w = n - 1;
    Polynomial p = Polynomial::holo_var(n, w) + Polynomial::anti_var(n, w);
    for (int k = 0; k < w; ++k) p += xy(n, k, k);
    for (int k = 0; k < w; ++k) {
        p += xy(n, w, k) * rng.sparse_gaussian_rational(3);
        p += xy(n, k, w) * rng.sparse_gaussian_rational(3);
    }
    p += xy(n, w, w) * rng.sparse_gaussian_rational(3);
    return p;
}

Polynomial random_local_bidegree11(RandomSource& rng, int n) {
    const auto sz = static_cast<std::size_t>(n);
    for (;;) {
        std::vector<Scalar> l(sz), m(sz);
        Matrix k(sz, sz);
        auto random_vector = [&](std::vector<Scalar>& v) {
            for (auto& x : v) x = rng.sparse_gaussian_rational(4);
        };
        auto random_rank = [&](long rank) {
            // K = U V with U n x rank, V rank x n.
            Matrix u(sz, static_cast<std::size_t>(rank)), v(static_cast<std::size_t>(rank), sz);
            for (std::size_t i = 0; i < u.rows(); ++i)
                for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = rng.sparse_gaussian_rational(3);
            for (std::size_t i = 0; i < v.rows(); ++i)
                for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = rng.sparse_gaussian_rational(3);
            return rank == 0 ? Matrix(sz, sz) : u * v;
        };
        const long kind = rng.integer(0, 5);
        switch (kind) {
            case 0:  // dense
                random_vector(l);
                random_vector(m);
                k = random_rank(n);
                break;
            case 1:  // one linear block only
                random_vector(rng.chance(2) ? l : m);
                k = random_rank(rng.integer(0, n));
                break;
            case 2:  // no linear part
                k = random_rank(rng.integer(1, n));
                break;
            case 3:  // low-rank bilinear part
                random_vector(l);
                random_vector(m);
                k = random_rank(rng.integer(0, n - 1));
                break;
            case 4: {  // real-valued
                random_vector(l);
                for (std::size_t i = 0; i < sz; ++i) m[i] = l[i].conj();
                for (std::size_t i = 0; i < sz; ++i) {
                    k(i, i) = Scalar(Rational(rng.integer(-3, 3), rng.integer(1, 2)));
                    for (std::size_t j = i + 1; j < sz; ++j) {
                        k(j, i) = rng.sparse_gaussian_rational(3);
                        k(i, j) = k(j, i).conj();
                    }
                }
                break;
            }
            default: {  // rank one: f(x) * conj(g)(y) with f(0) = 0
                random_vector(l);
                random_vector(m);
                const Scalar c = rng.gaussian_rational();
                Polynomial f(n), g = Polynomial::constant(n, c);
                for (int i = 0; i < n; ++i) {
                    f += Polynomial::holo_var(n, i) * l[static_cast<std::size_t>(i)];
                    g += Polynomial::anti_var(n, i) * m[static_cast<std::size_t>(i)];
                }
                const Polynomial p = poly_mul(f, g);
                if (!p.is_zero()) return p;
                continue;
            }
        }
        Polynomial p(n);
        for (int i = 0; i < n; ++i) {
            const auto si = static_cast<std::size_t>(i);
            p += Polynomial::holo_var(n, i) * l[si];
            p += Polynomial::anti_var(n, i) * m[si];
            for (int j = 0; j < n; ++j) p += xy(n, i, j) * k(static_cast<std::size_t>(j), si);
        }
        if (!p.is_zero()) return p;
    }
}

Polynomial random_polynomial(RandomSource& rng, int n, int max_degree) {
    Polynomial out(n);
    // Enumerate exponent vectors of length 2n with total <= max_degree.
    std::vector<int> e(static_cast<std::size_t>(2 * n), 0);
    auto visit = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == e.size()) {
            if (rng.chance(2)) {
                const std::vector<int> holo(e.begin(), e.begin() + n), anti(e.begin() + n, e.end());
                out.add_term(Monomial(holo, anti), rng.gaussian_rational());
            }
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
        e[pos] = 0;
    };
    visit(visit, 0, max_degree);
    return out;
}

std::string to_string(Shape s) {
    switch (s) {
        case Shape::FullNormalFormWithTail: return "full-normal-form-with-tail";
        case Shape::GeneralBidegree11: return "general-bidegree-11";
        case Shape::WithPolynomialQ: return "with-polynomial-Q";
        case Shape::WithJetQ: return "with-jet-Q";
    }
    return "?";
}

std::optional<Shape> parse_shape(const std::string& s) {
    for (Shape sh : {Shape::FullNormalFormWithTail, Shape::GeneralBidegree11, Shape::WithPolynomialQ, Shape::WithJetQ})
        if (to_string(sh) == s) return sh;
    return std::nullopt;
}

namespace {

/// P_local moved so that it vanishes at the diagonal point p.
Polynomial centered_at(const Polynomial& local, const std::vector<Scalar>& p) {
    std::vector<Scalar> mp, mq;
    for (const auto& x : p) {
        mp.push_back(-x);
        mq.push_back(-x.conj());
    }
    return translate(local, mp, mq);
}

JetRecipe random_jet(RandomSource& rng, int n) {
    switch (rng.integer(0, 2)) {
        case 0:
            return JetRecipe::reciprocal(random_polynomial(rng, n, 2));
        case 1:
            return JetRecipe::exp(random_polynomial(rng, n, 2));
        default:
            return JetRecipe::product(JetRecipe::polynomial(random_polynomial(rng, n, 1)),
                                      JetRecipe::reciprocal(random_polynomial(rng, n, 2)));
    }
}

}  // namespace

Instance random_instance(std::uint64_t seed, int n, [[maybe_unused]] int d, Shape shape) {
    if (n < 1) throw std::invalid_argument("random_instance: n must be positive");
    RandomSource rng(seed);
    Instance inst;
    if (shape == Shape::FullNormalFormWithTail) {
        inst.p = random_normal_form(rng, n);
        inst.point = Point::origin(n);
        do {
            inst.q = JetRecipe::polynomial(random_polynomial(rng, n, 2));
        } while (!inst.q.value_at(*inst.point).nonzero);
        return inst;
    }
    const std::vector<Scalar> p = rng.point(n);
    inst.point = Point::diagonal(p);
    inst.p = centered_at(random_local_bidegree11(rng, n), p);
    switch (shape) {
        case Shape::GeneralBidegree11:
            inst.q = JetRecipe::polynomial(Polynomial::constant(n, Scalar(1)));
            break;
        case Shape::WithPolynomialQ:
            do {
                inst.q = JetRecipe::polynomial(random_polynomial(rng, n, 2));
            } while (!inst.q.value_at(*inst.point).nonzero);
            break;
        default:
            for (;;) {
                inst.q = random_jet(rng, n);
                const auto v = inst.q.value_at(*inst.point);
                if (v.defined && v.nonzero) break;
            }
            break;
    }
    return inst;
}

}  // namespace hrank
