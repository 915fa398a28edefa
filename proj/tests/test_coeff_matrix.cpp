#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hrank;
using namespace hrank::test;

TEST_CASE("monomial order") {
    const MonomialOrder o(2, 2);
    CHECK(o.size() == 6);
    CHECK(o.exponents(0) == std::vector<int>{0, 0});
    // Degree one: z1 before w.
    CHECK(o.exponents(1) == std::vector<int>{1, 0});
    CHECK(o.exponents(2) == std::vector<int>{0, 1});
    CHECK(o.index_of({0, 3}) == o.size());
    for (std::size_t i = 0; i < o.size(); ++i) CHECK(o.index_of(o.exponents(i)) == i);
    for (std::size_t i = 0; i + 1 < o.size(); ++i) CHECK(MonomialOrder::precedes(o.exponents(i), o.exponents(i + 1)));
}

TEST_CASE("matrix examples") {
    const CoefficientMatrix m = build_matrix(P("z1*~z1 + w*~w", 2), 1);
    REQUIRE(m.side() == 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(m.entries(r, c) == Scalar(r == c && r > 0 ? 1 : 0));
    CHECK(exact_rank(m) == 2);

    const CoefficientMatrix one = build_matrix(Polynomial::constant(2, Scalar(1)), 3);
    CHECK(one.entries(0, 0) == Scalar(1));
    CHECK(exact_rank(one) == 1);

    // w + ~w + z1*~z1: antidiagonal in the order (1, z1, w).
    const CoefficientMatrix nf = build_matrix(P("w + ~w + z1*~z1", 2), 1);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(nf.entries(r, c) == Scalar(r + c == 2 ? 1 : 0));
}

TEST_CASE("entry positions round-trip") {
    const CoefficientMatrix m = build_matrix(P("z1^2*~w + 3*w*~z1", 2), 2);
    for (std::size_t r = 0; r < m.side(); ++r)
        for (std::size_t c = 0; c < m.side(); ++c) {
            const auto pos = m.position_of(m.monomial_at(r, c));
            REQUIRE(pos);
            CHECK(pos->first == r);
            CHECK(pos->second == c);
        }
    CHECK(m.entries(m.position_of(Monomial({0, 1}, {1, 0}))->first, m.position_of(Monomial({0, 1}, {1, 0}))->second) ==
          Scalar(3));
}

TEST_CASE("exact ranks") {
    CHECK(exact_rank(build_matrix(P("z1^2*~z1^2 - w^2*~w^2", 2), 2)) == 2);
    CHECK(exact_rank(build_matrix(P("w + ~w + z1*~z1", 2), 1)) == 3);
    CHECK(exact_rank(build_matrix(P("z1^2*~z1^2 - r2*z1*~z1*w*~w + w^2*~w^2", 2, Field::parse("qi-sqrt2")), 2)) == 3);
    CHECK(rank_of(poly_pow(P("w + ~w + z1*~z1", 2), 2)) == 6);
    CHECK(rank_of(Polynomial(2)) == 0);
    CHECK(rank_of(P("z1*~w", 2)) == 1);
}

TEST_CASE("rank matches the floating oracle on coefficient matrices") {
    RandomSource rng(31);
    for (int k = 0; k < 40; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const Polynomial r = random_polynomial(rng, n, 2);
        const CoefficientMatrix m = build_matrix(r, r.max_degree());
        CHECK(exact_rank(m) == svd_rank(m.entries));
    }
}

TEST_CASE("rank factorization examples") {
    const RankFactorization f = rank_factorize(P("z1*~z1 + w*~w", 2));
    CHECK(f.rank == 2);
    CHECK(reconstruct(f, 2) == P("z1*~z1 + w*~w", 2));
    const RankFactorization g = rank_factorize(P("z1^2*~z1^2 - w^2*~w^2", 2));
    CHECK(g.rank == 2);
    CHECK(reconstruct(g, 2) == P("z1^2*~z1^2 - w^2*~w^2", 2));
    const RankFactorization five = rank_factorize(Polynomial::constant(2, Scalar(5)));
    CHECK(five.rank == 1);
    CHECK(reconstruct(five, 2) == Polynomial::constant(2, Scalar(5)));
    for (std::size_t k = 0; k < g.rank; ++k) {
        CHECK(g.phi[k].bidegree()->anti == 0);
        CHECK(g.psi[k].bidegree()->anti == 0);
    }
}

TEST_CASE("rank factorization round-trip") {
    RandomSource rng(32);
    for (int k = 0; k < 40; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const Polynomial r = random_polynomial(rng, n, 3);
        const RankFactorization f = rank_factorize(r);
        CHECK(f.rank == rank_of(r));
        CHECK(f.phi.size() == f.rank);
        CHECK(reconstruct(f, n) == r);
    }
}

TEST_CASE("signature decomposition") {
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    const SignatureDecomposition s = signature_decompose(p);
    CHECK(s.positive.size() == 2);
    CHECK(s.negative.size() == 1);
    CHECK(reconstruct(s, 2) == p);
    for (const auto& t : s.positive) CHECK(t.weight.real_sign() == 1);
    for (const auto& t : s.negative) CHECK(t.weight.real_sign() == 1);

    const SignatureDecomposition d = signature_decompose(P("z1*~z1 - w*~w", 2));
    CHECK(d.positive.size() == 1);
    CHECK(d.negative.size() == 1);
    CHECK(d.positive[0].f == P("z1", 2) * d.positive[0].f.coeff(Monomial({1, 0}, {0, 0})));

    const SignatureDecomposition ball = signature_decompose(P("z1*~z1 + z2*~z2 + w*~w", 3));
    CHECK(ball.positive.size() == 3);
    CHECK(ball.negative.empty());

    CHECK_THROWS_AS(signature_decompose(P("z1", 2)), std::invalid_argument);

    const Field f = Field::parse("qi-sqrt2");
    const Polynomial rad = P("z1^2*~z1^2 - r2*z1*~z1*w*~w + w^2*~w^2", 2, f);
    const SignatureDecomposition sr = signature_decompose(rad);
    CHECK(sr.square_count() == 3);
    CHECK(reconstruct(sr, 2) == rad);
}

TEST_CASE("signature round-trip on random real-valued input") {
    RandomSource rng(33);
    for (int k = 0; k < 40; ++k) {
        const int n = static_cast<int>(rng.integer(1, 3));
        const Polynomial a = random_polynomial(rng, n, 2);
        const Polynomial r = a + conjugate_swap(a);
        const SignatureDecomposition s = signature_decompose(r);
        CHECK(s.square_count() == rank_of(r));
        CHECK(reconstruct(s, n) == r);
    }
}

TEST_CASE("binomials and the multinomial bound") {
    CHECK(multinomial_bound(3, 2) == 6);
    CHECK(multinomial_bound(7, 0) == 1);
    CHECK(multinomial_bound(1, 5) == 1);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("hermitian square") {
    const Polynomial f = P("1 + 2*z1 - i*w", 2);
    const Polynomial sq = hermitian_square(f);
    CHECK(rank_of(sq) == 1);
    CHECK(is_real_valued(sq));
    RandomSource rng(34);
    const Point pt = Point::diagonal(rng.point(2));
    CHECK(evaluate(sq, pt) == evaluate(f, pt) * evaluate(f, pt).conj());
}
