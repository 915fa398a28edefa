#include "hrank/gallery.hpp"

#include "hrank/coeff_matrix.hpp"
#include "hrank/parse.hpp"
#include "hrank/random_instance.hpp"
#include "hrank/verify.hpp"

#include <algorithm>

namespace hrank {

namespace {

class CaseBuilder {
public:
    CaseBuilder(std::string id, std::string construction, std::string basis) {
        c_.id = std::move(id);
        c_.construction = std::move(construction);
        c_.basis = std::move(basis);
    }

    void equal(std::string name, std::uint64_t expected, std::uint64_t observed) {
        add(std::move(name), std::to_string(expected), std::to_string(observed), expected == observed);
    }
    void at_least(std::string name, std::uint64_t bound, std::uint64_t observed) {
        add(std::move(name), ">= " + std::to_string(bound), std::to_string(observed), observed >= bound);
    }
    void text(std::string name, std::string expected, std::string observed) {
        const bool ok = expected == observed;
        add(std::move(name), std::move(expected), std::move(observed), ok);
    }

    GalleryCase done() {
        c_.pass = !c_.checks.empty() &&
                  std::all_of(c_.checks.begin(), c_.checks.end(), [](const GalleryCheck& k) { return k.pass; });
        return std::move(c_);
    }

private:
    void add(std::string name, std::string expected, std::string observed, bool pass) {
        c_.checks.push_back({std::move(name), std::move(expected), std::move(observed), pass});
    }
    GalleryCase c_;
};

std::string verdict_text(const VerificationReport& r) {
    if (r.verdict == Verdict::HypothesisViolated) return to_string(r.verdict) + "(" + to_string(r.violation) + ")";
    return to_string(r.verdict);
}

GalleryCase constant_q() {
    const int n = 2, d = 2;
    const Polynomial p = parse_poly("w + ~w + z1*~z1", n);
    const Polynomial q = Polynomial::constant(n, Scalar(3));
    CaseBuilder b("a", "P = w + ~w + z1*~z1, Q = 3, n = 2, d = 2",
                  "a nonzero constant Q only rescales the coefficient matrix of P^d, "
                  "so rank Q P^d = C(rank P + d - 1, d) = C(4, 2) = 6");
    const std::size_t rp = rank_of(p);
    const std::uint64_t target = multinomial_bound(static_cast<std::int64_t>(rp), d);
    b.equal("rank P", 3, rp);
    b.equal("rank P^d", target, rank_of(poly_pow(p, d)));
    b.equal("rank Q P^d", target, rank_of(poly_mul(q, poly_pow(p, d))));
    b.text("verdict", "holds", verdict_text(verify_theorem(p, JetRecipe::polynomial(q), d)));
    return b.done();
}

GalleryCase no_zero_set() {
    const int n = 2, d = 2;
    const Polynomial p = parse_poly("1 + z1*~z1 + w*~w", n);
    const JetRecipe q = JetRecipe::reciprocal(poly_pow(p, d));
    CaseBuilder b("b", "P = 1 + |z1|^2 + |w|^2, Q = 1/P^d, n = 2, d = 2",
                  "Q P^d = 1 has rank 1 while P^d has rank C(n + d, d); P never vanishes");
    b.equal("rank P^d", binomial(n + d, d), rank_of(poly_pow(p, d)));
    b.equal("rank Q P^d (truncated at order d)", 1, rank_lower_bound(jet_of(q, d), p, d));
    const Polynomial wider = poly_mul_truncated(jet_of(q, d + 2).coeffs, poly_pow(p, d), d + 2);
    b.equal("rank Q P^d (truncated at order d + 2)", 1, exact_rank(build_matrix(wider, d + 2)));
    b.text("verdict", "hypothesis-violated(no zero set)", verdict_text(verify_theorem(p, q, d)));
    return b.done();
}

GalleryCase outside_domain() {
    const int n = 2, d = 2;
    const Polynomial p = parse_poly("1 - z1*~z1 - w*~w", n);
    const JetRecipe q = JetRecipe::reciprocal(poly_pow(p, d));
    CaseBuilder b("c", "P = 1 - |z1|^2 - |w|^2, Q = 1/P^d, n = 2, d = 2",
                  "Q P^d = 1 near the origin, but Q is not defined on the sphere where P vanishes");
    b.equal("rank P^d", binomial(n + d, d), rank_of(poly_pow(p, d)));
    b.equal("rank Q P^d at the origin", 1, rank_lower_bound(jet_of(q, d), p, d));
    b.text("verdict", "hypothesis-violated(Q not defined at the base point)", verdict_text(verify_theorem(p, q, d)));
    return b.done();
}

GalleryCase high_bidegree() {
    const int n = 2, d = 1;
    const Field f = Field::parse("qi-sqrt2");
    const Polynomial p = parse_poly("z1^2*~z1^2 - r2*z1*~z1*w*~w + w^2*~w^2", n, f);
    const Polynomial q = parse_poly("z1^2*~z1^2 + r2*z1*~z1*w*~w + w^2*~w^2", n, f);
    CaseBuilder b("d", "P = |z1|^4 - r2 |z1|^2 |w|^2 + |w|^4, Q = P with +r2, n = 2, d = 1, field qi-sqrt2",
                  "Q P = |z1|^8 + |w|^8 has rank 2 while P has rank 3; P has bidegree (2,2)");
    b.equal("rank P", 3, rank_of(p));
    b.equal("rank Q P", 2, rank_of(poly_mul(q, p)));
    b.text("verdict", "hypothesis-violated(bidegree exceeds (1,1))",
           verdict_text(verify_theorem(p, JetRecipe::polynomial(q), d)));
    return b.done();
}

GalleryCase difference_of_fourth_powers() {
    const int n = 2;
    const Polynomial p = parse_poly("z1*~z1 + w*~w", n);
    const Polynomial q = parse_poly("z1*~z1 - w*~w", n);
    CaseBuilder b("e", "P = |z1|^2 + |w|^2, Q = |z1|^2 - |w|^2, n = 2, d = 1",
                  "Q P = |z1|^4 - |w|^4 is a difference of two squares, so the bound n is attained");
    b.equal("rank P", 2, rank_of(p));
    b.equal("rank Q P", 2, rank_of(poly_mul(q, p)));
    return b.done();
}

GalleryCase ball_lower_bound() {
    const int n = 3, d = 1;
    const Polynomial p = parse_poly("z1*~z1 + z2*~z2 + w*~w", n);
    CaseBuilder b("f", "P = |z1|^2 + |z2|^2 + |w|^2, Q random with Q(0) != 0, n = 3, d = 1, seeds 1..20",
                  "for Q not identically zero near 0, rank(Q |z|^2) >= n");
    std::size_t lowest = SIZE_MAX;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RandomSource rng(seed);
        JetRecipe q;
        do {
            q = JetRecipe::polynomial(random_polynomial(rng, n, 2));
        } while (!q.value_at(Point::origin(n)).nonzero);
        lowest = std::min(lowest, rank_lower_bound(jet_of(q, d), p, d));
    }
    b.at_least("min truncated rank Q P over seeds", n, lowest);
    return b.done();
}

GalleryCase zero_q() {
    const int n = 2, d = 2;
    const Polynomial p = parse_poly("w + ~w + z1*~z1", n);
    CaseBuilder b("g", "P = w + ~w + z1*~z1, Q = 0, n = 2, d = 2", "Q P^d = 0 has rank 0");
    b.equal("rank Q P^d", 0, rank_of(Polynomial(n)));
    b.text("verdict", "hypothesis-violated(Q identically zero)",
           verdict_text(verify_theorem(p, JetRecipe::polynomial(Polynomial(n)), d)));
    return b.done();
}

}  // namespace

std::vector<GalleryCase> run_gallery() {
    return {constant_q(), no_zero_set(), outside_domain(), high_bidegree(),
            difference_of_fourth_powers(), ball_lower_bound(), zero_q()};
}

}  // namespace hrank
