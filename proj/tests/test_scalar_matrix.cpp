#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hrank;
using namespace hrank::test;

TEST_CASE("scalar text form") {
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar(Rational(3, 4), Rational(1, 2)).str() == "3/4+1/2i");
    CHECK(Scalar(Rational(-1, 2), Rational(0)).str() == "-1/2");
    CHECK(Scalar::i().str() == "1i");
    CHECK(Scalar::sqrt(2).str() == "1r2");
    CHECK(Scalar(Rational(0), Rational(0), Rational(0), Rational(-1, 2), 2).str() == "-1/2ir2");
}

TEST_CASE("scalar field identities on random elements") {
    RandomSource rng(11);
    for (int k = 0; k < 200; ++k) {
        const Scalar a = rng.gaussian_rational(), b = rng.gaussian_rational(), c = rng.gaussian_rational();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * a.inverse() == Scalar(1));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).is_real());
        CHECK((a * a.conj()).real_sign() == 1);
    }
}

TEST_CASE("radical arithmetic") {
    const Scalar r = Scalar::sqrt(2);
    CHECK(r * r == Scalar(2));
    const Scalar x = Scalar(1) + r;
    CHECK(x * x.inverse() == Scalar(1));
    CHECK((x * (Scalar(1) - r)) == Scalar(-1));
    CHECK(r.real_sign() == 1);
    CHECK((Scalar(1) - r).real_sign() == -1);
    CHECK_THROWS_AS(r * Scalar::sqrt(3), FieldMismatch);
}

TEST_CASE("is_square_free") {
    CHECK(is_square_free(2));
    CHECK(is_square_free(30));
    CHECK_FALSE(is_square_free(12));
    CHECK_FALSE(is_square_free(9));
}

TEST_CASE("Z[i] Bareiss agrees with scalar Bareiss and the planted rank") {
    RandomSource rng(12);
    for (int k = 0; k < 100; ++k) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 8));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 8));
        const auto rank = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(rows, cols))));
        Matrix m = random_integer_matrix(rng, rows, cols, rank);
        // Rational entries exercise the denominator clearing.
        for (std::size_t c = 0; c < cols; ++c) m(0, c) *= Scalar(Rational(1, 3), Rational(1, 5));
        const std::size_t exact = bareiss_rank(m);
        CHECK(exact == scalar_bareiss_rank(m));
        CHECK(exact == svd_rank(m));
        CHECK(exact <= rank);
    }
}

TEST_CASE("rank normal form") {
    RandomSource rng(13);
    for (int k = 0; k < 40; ++k) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 5));
        const Matrix m = random_integer_matrix(rng, rows, cols, static_cast<std::size_t>(rng.integer(0, 3)));
        const RankNormalForm f = rank_normal_form(m);
        const Matrix d = f.row_ops * m * f.col_ops;
        CHECK(f.rank == bareiss_rank(m));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) CHECK(d(i, j) == Scalar(i == j && i < f.rank ? 1 : 0));
        CHECK(inverse(f.row_ops).has_value());
        CHECK(inverse(f.col_ops).has_value());
    }
}

TEST_CASE("inverse") {
    RandomSource rng(14);
    for (int k = 0; k < 30; ++k) {
        const int n = static_cast<int>(rng.integer(1, 5));
        const Matrix m = random_invertible(rng, n);
        const auto inv = inverse(m);
        REQUIRE(inv);
        CHECK(m * *inv == Matrix::identity(static_cast<std::size_t>(n)));
    }
    Matrix singular(2, 2);
    singular(0, 0) = Scalar(1);
    singular(1, 0) = Scalar(2);
    CHECK_FALSE(inverse(singular).has_value());
}
