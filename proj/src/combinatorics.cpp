#include "hrank/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace hrank {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

bool in_A(const Monomial& m, int d) {
    return d >= 0 && m.holo_degree() <= d && m.anti_degree() <= d;
}

bool in_B(const Monomial& m, int d) {
    return d >= 0 && m.z_degree() + m.b() + m.delta() <= d && m.zeta_degree() + m.b() + m.delta() <= d;
}

bool in_P(const Monomial& m, int d) {
    return d >= 0 && m.z_degree() + m.b() + m.delta() == d && m.a() == m.c();
}

bool in_N(const Monomial& m, int d) { return in_B(m, d) && !in_P(m, d); }

MonomialClass classify_monomial(const Monomial& m, int d) {
    if (in_P(m, d)) return MonomialClass::InP;
    if (in_B(m, d)) return MonomialClass::InN;
    if (in_A(m, d)) return MonomialClass::InA_notB;
    return MonomialClass::Outside;
}

std::string to_string(MonomialClass c) {
    switch (c) {
        case MonomialClass::InP: return "P_d";
        case MonomialClass::InN: return "N_d";
        case MonomialClass::InA_notB: return "A_d\\B_d";
        case MonomialClass::Outside: return "outside";
    }
    return "?";
}

bool order_leq(const Monomial& small, const Monomial& big) {
    if (small.dim() != big.dim()) throw DimensionMismatch("order_leq: dimension mismatch");
    for (int i = 0; i < small.dim(); ++i)
        if (small.holo(i) > big.holo(i) || small.anti(i) > big.anti(i)) return false;
    return true;
}

Monomial monomial_quotient(const Monomial& big, const Monomial& small) {
    if (!order_leq(small, big)) throw std::invalid_argument("monomial_quotient: not divisible");
    Monomial q(big.dim());
    for (int i = 0; i < big.dim(); ++i) {
        q.holo(i) = big.holo(i) - small.holo(i);
        q.anti(i) = big.anti(i) - small.anti(i);
    }
    return q;
}

bool ImplicationVerdict::all_hold() const {
    for (std::size_t k = 0; k < 4; ++k)
        if (applied[k] && !held[k]) return false;
    return true;
}

ImplicationVerdict order_implications(const Monomial& small, const Monomial& big, int d) {
    const Monomial x = monomial_quotient(big, small);
    ImplicationVerdict v;
    auto check = [&](std::size_t k, bool premise, bool conclusion) {
        v.applied[k] = premise;
        v.held[k] = !premise || conclusion;
    };
    check(0, !x.is_one() && in_B(big, d), in_N(small, d));
    check(1, in_A(x, 1) && !in_B(x, 1) && in_B(big, d), in_N(small, d - 1));
    check(2, in_P(x, 1) && in_N(big, d), in_N(small, d - 1));
    check(3, in_P(x, 1) && in_P(big, d), in_P(small, d - 1));
    return v;
}

Monomial pivot_monomial(const PivotIndex& idx, int d) {
    const int len = sum(idx.alpha);
    for (int a : idx.alpha)
        if (a < 0) throw std::invalid_argument("pivot_monomial: negative exponent");
    if (idx.t < 0 || idx.t > d || len > idx.t || (idx.t - len) % 2 != 0)
        throw std::invalid_argument("pivot_monomial: need 0 <= |alpha| <= t <= d, t = |alpha| mod 2");
    const int b = (2 * d - len - idx.t) / 2;
    const int delta = (idx.t - len) / 2;
    Monomial m = Monomial::from_parts(idx.alpha, b, idx.alpha, delta);
    return idx.conjugate ? m.swapped() : m;
}

namespace {

void exponent_vectors(int len, int max_total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= max_total; ++e) {
        cur.push_back(e);
        exponent_vectors(len, max_total - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> exponent_vectors(int len, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (max_total >= 0) exponent_vectors(len, max_total, cur, out);
    return out;
}

}  // namespace

std::vector<PivotIndex> pivot_indices(int n, int d, int t) {
    if (t < 0 || t > d) throw std::invalid_argument("pivot_indices: need 0 <= t <= d");
    std::vector<PivotIndex> out;
    for (auto& alpha : exponent_vectors(n - 1, t)) {
        if ((t - sum(alpha)) % 2 != 0) continue;
        out.push_back({t, alpha, false});
    }
    return out;
}

std::vector<Monomial> enumerate_A(int n, int d) {
    const auto holo = exponent_vectors(n, d);
    std::vector<Monomial> out;
    out.reserve(holo.size() * holo.size());
    for (const auto& h : holo)
        for (const auto& a : holo) out.emplace_back(h, a);
    return out;
}

std::vector<Monomial> enumerate_P(int n, int d) {
    std::vector<Monomial> out;
    for (const auto& m : enumerate_A(n, d))
        if (in_P(m, d)) out.push_back(m);
    return out;
}

std::uint64_t pivot_count(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("pivot_count: need n >= 1, d >= 0");
    // Solutions (a, b, delta) of |a| + b + delta = d; c = a is forced.
    std::uint64_t count = 0;
    for (const auto& abd : exponent_vectors(n + 1, d))
        if (sum(abd) == d) ++count;
    return count;
}

Rational pivot_multinomial(const Monomial& m, int d) {
    if (!in_P(m, d)) throw std::invalid_argument("pivot_multinomial: monomial not in P_d");
    auto fact = [](int k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        return f;
    };
    mpz_class den = fact(m.b()) * fact(m.delta());
    for (int a : m.a()) den *= fact(a);
    return Rational(fact(d), den);
}

StructureReport structure_check(const Polynomial& r, int d, const StructureMode& mode) {
    StructureReport rep;
    const bool with_q = mode.kind == StructureMode::Kind::WithQ;
    if (with_q && mode.q0.is_zero()) throw std::invalid_argument("structure_check: q0 must be nonzero");
    const Scalar q0_inv = with_q ? mode.q0.inverse() : Scalar(1);
    for (const auto& m : enumerate_A(r.dim(), d)) {
        const MonomialClass cls = classify_monomial(m, d);
        if (cls == MonomialClass::InN) {
            ++rep.checked_N;
            const Scalar c = r.coeff(m);
            if (!c.is_zero()) rep.violations.push_back({m, c, "nonzero coefficient in N_d"});
        } else if (cls == MonomialClass::InP) {
            ++rep.checked_P;
            const Scalar c = r.coeff(m);
            const Scalar scaled = c * q0_inv;
            if (!scaled.is_rational() || scaled.real_sign() <= 0) {
                rep.violations.push_back(
                    {m, c, with_q ? "P_d coefficient is not q0 times a positive rational"
                                  : "P_d coefficient is not a positive rational"});
            } else if (with_q && mode.reference && !(c == mode.q0 * mode.reference->coeff(m))) {
                rep.violations.push_back({m, c, "P_d coefficient differs from q0 times the reference"});
            }
        }
    }
    return rep;
}

PivotReport pivot_verify(const CoefficientMatrix& cm, int d) {
    PivotReport rep;
    const MonomialOrder& order = *cm.order;
    if (order.degree() != d) throw std::invalid_argument("pivot_verify: matrix truncated at another degree");
    const int n = order.dim();
    const std::size_t side = cm.side();

    auto fail = [&](int stage, const Monomial& m, std::string why) {
        rep.ok = false;
        rep.failed_stage = stage;
        rep.witness = m;
        rep.reason = std::move(why);
        return rep;
    };

    // Pattern on the untouched entries.
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) {
            const Monomial m = cm.monomial_at(r, c);
            const bool zero = cm.entries(r, c).is_zero();
            if (in_N(m, d) && !zero) return fail(-1, m, "nonzero entry at an N_d position");
            if (in_P(m, d) && zero) return fail(-1, m, "zero entry at a P_d position");
        }

    Matrix a = cm.entries;
    std::vector<char> pivot_row(side, 0), pivot_col(side, 0);

    auto claim = [&](const Monomial& m) {
        auto pos = cm.position_of(m);
        if (!pos) throw std::logic_error("pivot outside the truncation");
        return *pos;
    };

    for (int t = 0; t <= d; ++t) {
        const auto stage = pivot_indices(n, d, t);
        // Rows of P^t pivots are clear; eliminate below/above in their columns.
        for (const auto& idx : stage) {
            const Monomial z = pivot_monomial(idx, d);
            const auto [pr, pc] = claim(z);
            if (pivot_row[pr] || pivot_col[pc]) return fail(t, z, "pivot shares a row or column");
            if (a(pr, pc).is_zero()) return fail(t, z, "pivot vanished during reduction");
            for (std::size_t c = 0; c < side; ++c)
                if (c != pc && !a(pr, c).is_zero())
                    return fail(t, cm.monomial_at(pr, c), "nonzero entry in a pivot row");
            const Scalar inv = a(pr, pc).inverse();
            for (std::size_t r = 0; r < side; ++r) {
                if (r == pr || a(r, pc).is_zero()) continue;
                const Scalar f = a(r, pc) * inv;
                for (std::size_t c = 0; c < side; ++c)
                    if (!a(pr, c).is_zero()) a(r, c) -= f * a(pr, c);
            }
            pivot_row[pr] = pivot_col[pc] = 1;
            rep.pivots.push_back(z);
        }
        if (t == d) break;  // P^d is its own conjugate
        // Columns of the conjugate pivots are now clear; eliminate in their rows.
        for (auto idx : stage) {
            idx.conjugate = true;
            const Monomial z = pivot_monomial(idx, d);
            const auto [pr, pc] = claim(z);
            if (pivot_row[pr] || pivot_col[pc]) return fail(t, z, "pivot shares a row or column");
            if (a(pr, pc).is_zero()) return fail(t, z, "pivot vanished during reduction");
            for (std::size_t r = 0; r < side; ++r)
                if (r != pr && !a(r, pc).is_zero())
                    return fail(t, cm.monomial_at(r, pc), "nonzero entry in a conjugate pivot column");
            const Scalar inv = a(pr, pc).inverse();
            for (std::size_t c = 0; c < side; ++c) {
                if (c == pc || a(pr, c).is_zero()) continue;
                const Scalar f = a(pr, c) * inv;
                for (std::size_t r = 0; r < side; ++r)
                    if (!a(r, pc).is_zero()) a(r, c) -= f * a(r, pc);
            }
            pivot_row[pr] = pivot_col[pc] = 1;
            rep.pivots.push_back(z);
        }
    }

    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c)
            if (!a(r, c).is_zero() && !(pivot_row[r] && pivot_col[c] && in_P(cm.monomial_at(r, c), d)))
                return fail(d + 1, cm.monomial_at(r, c), "entry survives outside the pivot set");
    for (std::size_t i = 0; i < side; ++i)
        if (!pivot_row[i] || !pivot_col[i])
            return fail(d + 1, cm.monomial_at(i, i), "pivot set does not cover every row and column");

    rep.ok = true;
    rep.rank = rep.pivots.size();
    return rep;
}

}  // namespace hrank
