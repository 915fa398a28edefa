#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrank/combinatorics.hpp"
#include "hrank/jets.hpp"
#include "support.hpp"

using namespace hrank;
using namespace hrank::test;

TEST_CASE("series examples") {
    const AnalyticJet r = jet_of(JetRecipe::reciprocal(P("1 + z1*~z1", 2)), 2);
    CHECK(r.coeffs == P("1 - z1*~z1 + z1^2*~z1^2", 2));
    const AnalyticJet e = jet_of(JetRecipe::exp(P("z1*~z1", 2)), 2);
    CHECK(e.coeffs == P("1 + z1*~z1 + 1/2*z1^2*~z1^2", 2));
    CHECK(e.omitted_exp_constant == Scalar(0));
    const AnalyticJet e2 = jet_of(JetRecipe::exp(P("3 + w", 2)), 1);
    CHECK(e2.coeffs == P("1 + w", 2));
    CHECK(e2.omitted_exp_constant == Scalar(3));
}

TEST_CASE("reciprocal times denominator is one") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d) {
            Polynomial s = Polynomial::constant(n, Scalar(1));
            for (int k = 0; k < n; ++k) s += poly_mul(Polynomial::holo_var(n, k), Polynomial::anti_var(n, k));
            const Polynomial sd = poly_pow(s, d);
            const AnalyticJet inv = jet_of(JetRecipe::reciprocal(sd), d + 1);
            CHECK(poly_mul_truncated(inv.coeffs, sd, d + 1) == Polynomial::constant(n, Scalar(1)));
        }
    RandomSource rng(61);
    for (int k = 0; k < 30; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        Polynomial s = random_polynomial(rng, n, 2);
        if (s.constant_term().is_zero()) s += Polynomial::constant(n, Scalar(1));
        const AnalyticJet inv = jet_of(JetRecipe::reciprocal(s), 3);
        CHECK(poly_mul_truncated(inv.coeffs, s, 3) == Polynomial::constant(n, Scalar(1)));
    }
}

TEST_CASE("exp is multiplicative on truncations") {
    RandomSource rng(62);
    for (int k = 0; k < 10; ++k) {
        const Polynomial a = random_polynomial(rng, 2, 1), b = random_polynomial(rng, 2, 1);
        const Polynomial a0 = a - Polynomial::constant(2, a.constant_term());
        const Polynomial b0 = b - Polynomial::constant(2, b.constant_term());
        const AnalyticJet ea = jet_of(JetRecipe::exp(a0), 3), eb = jet_of(JetRecipe::exp(b0), 3);
        CHECK(poly_mul_truncated(ea.coeffs, eb.coeffs, 3) == jet_of(JetRecipe::exp(a0 + b0), 3).coeffs);
    }
}

TEST_CASE("reciprocal undefined at the origin") {
    CHECK_THROWS_AS(jet_of(JetRecipe::reciprocal(P("z1 + ~w", 2)), 2), std::domain_error);
    CHECK_THROWS(JetRecipe::reciprocal(Polynomial(2)));
}

TEST_CASE("values") {
    const JetRecipe r = JetRecipe::reciprocal(P("1 - z1*~z1", 2));
    CHECK_FALSE(r.value_at(Point::diagonal({Scalar(1), Scalar(0)})).defined);
    const auto v = r.value_at(Point::diagonal({Scalar(Rational(1, 2)), Scalar(0)}));
    CHECK(v.defined);
    CHECK(v.nonzero);
    REQUIRE(v.exact);
    CHECK(*v.exact == Scalar(Rational(4, 3)));
    CHECK(JetRecipe::exp(P("z1", 2)).value_at(Point::origin(2)).nonzero);
    CHECK(JetRecipe::polynomial(Polynomial(2)).identically_zero());
}

TEST_CASE("transport re-expands at the new base point") {
    const JetRecipe r = JetRecipe::reciprocal(P("2 + z1", 2));
    ChangeTrail t;
    t.push(AffinePairChange::translation({Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}));
    // 1/(3 + z1) at the origin.
    const AnalyticJet j = jet_of(r.transported(t), 2);
    CHECK(j.coeffs == P("1/3 - 1/9*z1 + 1/27*z1^2", 2));
    CHECK(jet_of(JetRecipe::polynomial(P("z1*~w", 2)).transported(t), 1).coeffs == P("z1*~w + ~w", 2));
}

TEST_CASE("jet times power") {
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    const AnalyticJet one = jet_of(JetRecipe::polynomial(Polynomial::constant(2, Scalar(1))), 2);
    CHECK(jet_times_power(one, p, 2).coeffs == poly_pow(p, 2).truncated(2));

    const Polynomial ball = P("1 + z1*~z1 + w*~w", 2);
    const AnalyticJet inv = jet_of(JetRecipe::reciprocal(poly_pow(ball, 2)), 2);
    CHECK(jet_times_power(inv, ball, 2).coeffs == Polynomial::constant(2, Scalar(1)));
    CHECK(rank_lower_bound(inv, ball, 2) == 1);

    const AnalyticJet two = jet_of(JetRecipe::polynomial(P("2 + z1", 2)), 3);
    const Polynomial qp = jet_times_power(two, p, 3).coeffs;
    const Polynomial pd = poly_pow(p, 3);
    for (const auto& [m, c] : pd.terms())
        if (in_P(m, 3)) CHECK(qp.coeff(m) == Scalar(2) * c);
    CHECK(rank_lower_bound(one, p, 2) == 6);
    CHECK_THROWS_AS(jet_times_power(jet_of(JetRecipe::polynomial(P("1", 2)), 1), p, 2), std::invalid_argument);
}

TEST_CASE("lower bound reaches C(n+d, d) on normal forms") {
    RandomSource rng(63);
    for (int k = 0; k < 20; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const int d = static_cast<int>(rng.integer(0, 3));
        const Polynomial p = random_normal_form(rng, n);
        Polynomial q = random_polynomial(rng, n, 2);
        if (q.constant_term().is_zero()) q += Polynomial::constant(n, Scalar(1));
        CHECK(rank_lower_bound(jet_of(JetRecipe::reciprocal(q), d), p, d) == binomial(n + d, d));
    }
}
