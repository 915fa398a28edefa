#pragma once

// Seeded generators for test and suite instances.

#include "hrank/jets.hpp"
#include "hrank/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace hrank {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    long integer(long lo, long hi);
    bool chance(int one_in);
    /// p/q + (r/s) i with |p|, |r| <= 3 and q, s in {1, 2, 3}.
    Scalar gaussian_rational();
    /// Like gaussian_rational() but zero with probability 1 / zero_one_in.
    Scalar sparse_gaussian_rational(int zero_one_in);
    std::vector<Scalar> point(int n);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// w + eta + sum z_k zeta_k plus random bidegree-(1,1) terms with w or eta.
Polynomial random_normal_form(RandomSource& rng, int n);
/// Bidegree <= (1,1) with P(0) = 0; the linear part and the rank of the
/// bilinear part vary across draws.
Polynomial random_local_bidegree11(RandomSource& rng, int n);
/// Terms of total degree <= max_degree.
Polynomial random_polynomial(RandomSource& rng, int n, int max_degree);

enum class Shape { FullNormalFormWithTail, GeneralBidegree11, WithPolynomialQ, WithJetQ };
std::string to_string(Shape s);
std::optional<Shape> parse_shape(const std::string& s);

struct Instance {
    Polynomial p;
    JetRecipe q;
    std::optional<Point> point;  // diagonal zero of P where Q is defined and nonzero
};

Instance random_instance(std::uint64_t seed, int n, int d, Shape shape);

}  // namespace hrank
