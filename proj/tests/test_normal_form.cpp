#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrank/normal_form.hpp"
#include "support.hpp"

#include <array>

using namespace hrank;
using namespace hrank::test;

namespace {

AnalyticJet one_jet(int n, int d) { return jet_of(JetRecipe::polynomial(Polynomial::constant(n, Scalar(1))), d); }

std::size_t expected_rank(const NormalFormReport& r) {
    return static_cast<std::size_t>(r.form == LinearForm::Form1 ? r.r + 2 : r.r + 1);
}

}  // namespace

TEST_CASE("linear data") {
    const LinearData ld = linear_data(P("2 + 3*z1 - ~w + 5*z1*~w", 2));
    CHECK(ld.c0 == Scalar(2));
    CHECK(ld.l[0] == Scalar(3));
    CHECK(ld.m[1] == Scalar(-1));
    CHECK(ld.k(1, 0) == Scalar(5));
    CHECK_THROWS_AS(linear_data(P("z1^2", 2)), std::invalid_argument);
}

TEST_CASE("classification examples") {
    const NormalFormReport a = classify_linear_form(P("w + ~w + z1*~z1", 2));
    CHECK(a.form == LinearForm::Form1);
    CHECK(a.r == 1);
    CHECK(a.trail.empty());
    CHECK(a.transformed == P("w + ~w + z1*~z1", 2));

    const NormalFormReport b = classify_linear_form(P("z1*~z1 + w*~w", 2));
    CHECK(b.form == LinearForm::Form3);
    CHECK(b.r == 1);

    const Polynomial c_in = P("2*w + ~w + z1*~z1 - z2*~z2", 3);
    const NormalFormReport c = classify_linear_form(c_in);
    CHECK(c.form == LinearForm::Form1);
    CHECK(c.r == 2);
    CHECK(c.trail.apply(c_in) == c.transformed);
    CHECK(is_full_rank_normal_form(c.transformed));

    const NormalFormReport d = classify_linear_form(P("w + z1*~z1", 2));
    CHECK(d.form == LinearForm::Form2);
    CHECK(d.r == 1);
}

TEST_CASE("classification replays and accounts for the rank") {
    RandomSource rng(51);
    std::array<int, 3> seen{};
    for (int k = 0; k < 150; ++k) {
        const int n = static_cast<int>(rng.integer(1, 4));
        const Polynomial p = random_local_bidegree11(rng, n);
        const NormalFormReport r = classify_linear_form(p);
        ++seen[static_cast<std::size_t>(r.form)];
        CHECK(r.trail.apply(p) == r.transformed);
        CHECK(rank_of(r.transformed) == rank_of(p));
        CHECK(rank_of(p) == expected_rank(r));
        if (r.form == LinearForm::Form1 && r.r == n - 1) CHECK(is_full_rank_normal_form(r.transformed));
    }
    for (int s : seen) CHECK(s > 0);
}

TEST_CASE("full-rank reduction examples") {
    const FullRankReduction a = reduce_full_rank(P("w + ~w + z1*~z1", 2), one_jet(2, 2), 2);
    CHECK(a.p == P("w + ~w + z1*~z1", 2));
    CHECK(rank_of(a.p) == 3);

    // Rank is preserved by every step, so rank 2 inputs end as full-rank
    // normal forms in one variable.
    for (const char* text : {"z1*~z1 + w*~w", "w + z1*~z1"}) {
        const FullRankReduction r = reduce_full_rank(P(text, 2), one_jet(2, 2), 2);
        CHECK(is_full_rank_normal_form(r.p));
        CHECK(r.p.dim() == 1);
        CHECK(rank_of(r.p) == 2);
    }
    const FullRankReduction e = reduce_full_rank(P("z1*~z1 + w*~w", 2), one_jet(2, 2), 2);
    REQUIRE(e.report.epsilon.has_value());
    CHECK(*e.report.epsilon == Rational(1));

    CHECK_THROWS_AS(reduce_full_rank(P("z1*~w", 2), one_jet(2, 1), 1), std::invalid_argument);
}

TEST_CASE("full-rank reduction on random input") {
    RandomSource rng(52);
    int done = 0;
    for (int k = 0; k < 120; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const int d = static_cast<int>(rng.integer(0, 3));
        const Polynomial p = random_local_bidegree11(rng, n);
        const std::size_t rank = rank_of(p);
        if (rank <= 1) continue;
        const Polynomial q = P("1 + z1 - w*~w", n);
        FullRankReduction fr = reduce_full_rank(p, jet_of(JetRecipe::polynomial(q), d), d);
        CHECK(is_full_rank_normal_form(fr.p));
        CHECK(rank_of(fr.p) == rank);
        CHECK(static_cast<std::size_t>(fr.p.dim()) + 1 == rank);
        CHECK_FALSE(fr.q.constant_term().is_zero());
        ++done;
    }
    CHECK(done > 50);
}

TEST_CASE("zero search") {
    CHECK(find_zero(P("w + ~w + z1*~z1", 2))->is_origin());
    CHECK_FALSE(find_zero(P("1 + z1*~z1 + w*~w", 2)).has_value());
    const Polynomial p = P("-1 + z1*~z1", 2);
    const auto z = find_zero(p);
    REQUIRE(z);
    CHECK(evaluate(p, *z).is_zero());
    CHECK(z->q[0] == z->p[0].conj());

    RandomSource rng(53);
    for (int k = 0; k < 40; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const Polynomial local = random_local_bidegree11(rng, n);
        const auto found = find_zero(local);
        REQUIRE(found);
        CHECK(evaluate(local, *found).is_zero());
    }
}

TEST_CASE("nonvanishing zero") {
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    const JetRecipe q = JetRecipe::polynomial(P("w", 2));
    const auto pt = find_nonvanishing_zero(p, q);
    REQUIRE(pt);
    CHECK(evaluate(p, *pt).is_zero());
    CHECK(q.value_at(*pt).nonzero);
}

TEST_CASE("factoring out P") {
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    const FactorOut sq = factor_out_P(poly_pow(p, 2), p);
    CHECK(sq.power == 2);
    CHECK(sq.quotient == Polynomial::constant(2, Scalar(1)));
    const FactorOut lin = factor_out_P(poly_mul(P("1 + z1", 2), p), p);
    CHECK(lin.power == 1);
    CHECK(lin.quotient == P("1 + z1", 2));
    CHECK(poly_mul(lin.quotient, p) == poly_mul(P("1 + z1", 2), p));
    const FactorOut none = factor_out_P(P("1 + w", 2), p);
    CHECK(none.power == 0);
    CHECK(none.quotient == P("1 + w", 2));
}
