// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hrank/coeff_matrix.hpp"
#include "hrank/combinatorics.hpp"
#include "hrank/gallery.hpp"
#include "hrank/normal_form.hpp"
#include "hrank/verify.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>

using namespace hrank;
using namespace hrank::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

/// Criterion 5 gathers its instances from criteria 1 to 4.
Tally pivots;

void check_pivots(const Polynomial& r, int d, const std::string& label) {
    const CoefficientMatrix m = build_matrix(r, d);
    const PivotReport rep = pivot_verify(m, d);
    const std::size_t exact = exact_rank(m);
    const std::set<Monomial> expected = [&] {
        const auto all = enumerate_P(r.dim(), d);
        return std::set<Monomial>(all.begin(), all.end());
    }();
    pivots.check(rep.ok && rep.rank == exact && std::set<Monomial>(rep.pivots.begin(), rep.pivots.end()) == expected,
                 [&] { return label + ": " + (rep.ok ? "rank " + std::to_string(rep.rank) + " vs " + std::to_string(exact) : rep.reason); });
}

bool report(int k, const std::string& title, const Tally& t, const std::string& extra = "", bool extra_ok = true) {
    const bool ok = t.failures == 0 && t.cases > 0 && extra_ok;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << t.cases - t.failures
              << "/" << t.cases << " ok" << (extra.empty() ? "" : ", " + extra) << ")";
    if (t.failures) std::cout << "  first failure: " << t.first_failure;
    std::cout << std::endl;
    return ok;
}

std::string secs(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

bool criterion1() {
    Tally t;
    const auto t0 = Clock::now();
    std::vector<std::pair<Polynomial, int>> kept;
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) {
            RandomSource rng(1000 + 10 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d));
            for (int k = 0; k < 20; ++k) {
                const Polynomial p = random_normal_form(rng, n);
                const Polynomial pd = poly_pow(p, d);
                const std::size_t r = rank_of(pd);
                t.check(r == binomial(n + d, d), [&] {
                    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " rank " + std::to_string(r);
                });
                kept.emplace_back(pd, d);
            }
        }
    const double elapsed = seconds_since(t0);
    for (const auto& [pd, d] : kept) check_pivots(pd, d, "criterion 1 instance");
    return report(1, "rank P^d = C(n+d, d) for full-rank normal forms", t, secs(elapsed) + " < 120 s",
                  elapsed < 120);
}

bool criterion2() {
    Tally t;
    Tally pivot_flags;
    const auto t0 = Clock::now();
    for (int k = 0; k < 500; ++k) {
        const std::uint64_t seed = 1 + static_cast<std::uint64_t>(k);
        const int n = 1 + k % 3;
        const int d = (k / 3) % 5;
        const Instance inst = random_instance(seed, n, d, Shape::WithPolynomialQ);
        const VerificationReport r = verify_theorem(inst.p, inst.q, d, inst.point);
        t.check(r.verdict == Verdict::Holds && r.lower_bound && *r.lower_bound >= r.target,
                [&] { return "seed " + std::to_string(seed) + ": " + r.detail; });
        if (r.pivots_power_ok)
            pivots.check(*r.pivots_power_ok && r.pivots_q_ok.value_or(false),
                         [&] { return "criterion 2 seed " + std::to_string(seed); });
    }
    const double elapsed = seconds_since(t0);
    return report(2, "verify_theorem holds on seeded bidegree-(1,1) P with polynomial Q", t,
                  secs(elapsed) + " < 600 s", elapsed < 600);
}

bool criterion3() {
    Tally t;
    for (const auto& c : run_gallery())
        for (const auto& k : c.checks)
            t.check(k.pass, [&] { return "case " + c.id + " " + k.name + ": " + k.observed + " vs " + k.expected; });
    return report(3, "gallery values exact", t);
}

bool criterion4() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            RandomSource rng(4000 + 10 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d));
            for (int k = 0; k < 50; ++k) {
                const Polynomial p = random_normal_form(rng, n);
                const Polynomial pd = poly_pow(p, d);
                const StructureReport a = structure_check(pd, d, StructureMode::power_only());
                Polynomial q = random_polynomial(rng, n, 2);
                if (q.constant_term().is_zero()) q += Polynomial::constant(n, rng.gaussian_rational());
                const JetRecipe qj = k % 2 ? JetRecipe::reciprocal(q) : JetRecipe::polynomial(q);
                const AnalyticJet jet = jet_of(qj, d);
                const Polynomial qpd = jet_times_power(jet, p, d).coeffs;
                const StructureReport b = structure_check(qpd, d, StructureMode::with_q(jet.constant_term(), pd));
                const auto label = [&](const StructureReport& r) {
                    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + r.violations[0].reason;
                };
                t.check(a.ok(), [&] { return label(a); });
                t.check(b.ok(), [&] { return label(b); });
                check_pivots(pd, d, "criterion 4 P^d");
                check_pivots(qpd, d, "criterion 4 Q P^d");
            }
        }
    return report(4, "N_d coefficients vanish, P_d coefficients positive and scaled by Q(0)", t);
}

bool criterion5() { return report(5, "staged pivot reduction with pivot set P_d, rank equal to exact_rank", pivots); }

bool criterion6() {
    Tally t;
    RandomSource rng(6000);
    for (int k = 0; k < 200; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const Polynomial a = random_polynomial(rng, n, static_cast<int>(rng.integer(1, 4)));
        const bool real = k % 2 == 1;
        const Polynomial r = real ? a + conjugate_swap(a) : a;
        const std::size_t rank = rank_of(r);
        const RankFactorization f = rank_factorize(r);
        t.check(f.rank == rank && f.phi.size() == rank && reconstruct(f, n) == r,
                [&] { return "factorization " + r.str(); });
        if (real) {
            const SignatureDecomposition s = signature_decompose(r);
            t.check(s.square_count() == rank && reconstruct(s, n) == r, [&] { return "signature " + r.str(); });
        }
    }
    return report(6, "rank factorization and signature round-trips", t);
}

bool criterion7() {
    Tally t;
    RandomSource rng(7000);
    for (int k = 0; k < 200; ++k) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 12));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 12));
        const auto planted = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(rows, cols))));
        CoefficientMatrix m{nullptr, random_integer_matrix(rng, rows, cols, planted)};
        const std::size_t exact = exact_rank(m), oracle = svd_rank(m.entries);
        t.check(exact == oracle, [&] {
            return std::to_string(rows) + "x" + std::to_string(cols) + ": " + std::to_string(exact) + " vs " +
                   std::to_string(oracle);
        });
    }
    return report(7, "exact_rank agrees with the singular-value oracle", t);
}

bool criterion8() {
    Tally t;
    RandomSource rng(8000);
    const std::array<std::string, 3> classes{"full normal form", "general bidegree (1,1)", "general polynomial"};
    for (std::size_t cls = 0; cls < classes.size(); ++cls)
        for (int k = 0; k < 100; ++k) {
            const int n = static_cast<int>(rng.integer(1, 3));
            const Polynomial r = cls == 0   ? random_normal_form(rng, n)
                                 : cls == 1 ? random_local_bidegree11(rng, n)
                                            : random_polynomial(rng, n, 3);
            const std::size_t before = rank_of(r);
            const AffinePairChange change{random_invertible(rng, n), rng.point(n), random_invertible(rng, n),
                                          rng.point(n)};
            const Point shift = random_point(rng, n);
            const std::size_t after = rank_of(change.apply(r));
            const std::size_t shifted = rank_of(translate(r, shift.p, shift.q));
            t.check(after == before && shifted == before, [&] {
                return classes[cls] + ": " + std::to_string(before) + " -> " + std::to_string(after) + ", " +
                       std::to_string(shifted);
            });
        }
    return report(8, "rank invariant under affine pair changes and translations", t);
}

bool criterion9() {
    Tally t;
    RandomSource rng(9000);
    for (int k = 0; k < 200; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const int d = static_cast<int>(rng.integer(0, 4));
        Polynomial p = random_local_bidegree11(rng, n);
        if (rng.chance(2)) p += Polynomial::constant(n, rng.gaussian_rational());
        const std::size_t rp = rank_of(p), rpd = rank_of(poly_pow(p, d));
        const std::uint64_t bound = multinomial_bound(static_cast<std::int64_t>(rp), d);
        t.check(rpd <= bound, [&] {
            return "rank P = " + std::to_string(rp) + ", rank P^d = " + std::to_string(rpd) + " > " + std::to_string(bound);
        });
    }
    return report(9, "rank P^d <= C(rank P + d - 1, d)", t);
}

}  // namespace

int main() {
    bool ok = true;
    ok &= criterion1();
    ok &= criterion2();
    ok &= criterion3();
    ok &= criterion4();
    ok &= criterion5();
    ok &= criterion6();
    ok &= criterion7();
    ok &= criterion8();
    ok &= criterion9();
    return ok ? 0 : 1;
}
