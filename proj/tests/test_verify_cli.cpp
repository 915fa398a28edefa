#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrank/gallery.hpp"
#include "hrank/normal_form.hpp"
#include "hrank/report.hpp"
#include "hrank/verify.hpp"
#include "support.hpp"

#include <json.hpp>

#include <sstream>

using namespace hrank;
using namespace hrank::test;

TEST_CASE("parser examples") {
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    Polynomial expect = Polynomial::holo_var(2, 1) + Polynomial::anti_var(2, 1) +
                        poly_mul(Polynomial::holo_var(2, 0), Polynomial::anti_var(2, 0));
    CHECK(p == expect);
    CHECK(P("3/4*i*z1", 2) == Polynomial::holo_var(2, 0) * Scalar(Rational(0), Rational(3, 4)));
    CHECK(P("3/4i*z1", 2) == P("3/4*i*z1", 2));
    // z{n} names w.
    const Field f = Field::parse("qi-sqrt2");
    CHECK(P("z1^2*~z1^2 - r2*z1*~z1*z2*~z2 + z2^2*~z2^2", 2, f) ==
          P("z1^2*~z1^2 - r2*z1*~z1*w*~w + w^2*~w^2", 2, f));
    CHECK(P("(1 + z1)^2", 2) == P("1 + 2*z1 + z1^2", 2));
    CHECK(P("2*(w - ~w)/4", 2) == P("1/2*w - 1/2*~w", 2));
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(P("z1 +", 2), ParseError);
    CHECK_THROWS_AS(P("z5", 2), ParseError);
    CHECK_THROWS_AS(P("r2*z1", 2), ParseError);
    CHECK_THROWS_AS(P("r3*z1", 2, Field::parse("qi-sqrt2")), ParseError);
    CHECK_THROWS_AS(P("1/(1+w)", 2), ParseError);
    CHECK_THROWS_AS(Field::parse("qi-sqrt4"), std::invalid_argument);
    try {
        P("w + $", 2);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("jets parse") {
    const JetRecipe q = parse_jet("1/(1 + z1*~z1 + w*~w)^2", 2);
    CHECK(q.kind() != RecipeKind::Polynomial);
    const Polynomial ball = P("1 + z1*~z1 + w*~w", 2);
    CHECK(jet_times_power(jet_of(q, 2), ball, 2).coeffs == Polynomial::constant(2, Scalar(1)));
    CHECK(parse_jet("(1+w)^-1", 2).kind() == RecipeKind::Reciprocal);
    CHECK(jet_of(parse_jet("exp(z1*~z1)", 2), 2).coeffs == P("1 + z1*~z1 + 1/2*z1^2*~z1^2", 2));
    CHECK(parse_jet("2 + z1", 2).is_polynomial());
}

TEST_CASE("emit then parse round-trips") {
    RandomSource rng(71);
    for (int k = 0; k < 100; ++k) {
        const int n = static_cast<int>(rng.integer(1, 4));
        const Polynomial p = random_polynomial(rng, n, 3);
        CHECK(P(p.str().c_str(), n) == p);
    }
    const Field f = Field::parse("qi-sqrt2");
    const Polynomial rad = P("(1 - 1/2*i*r2)*z1*~w + r2", 2, f);
    CHECK(P(rad.str().c_str(), 2, f) == rad);
}

TEST_CASE("points") {
    const Point pt = parse_point("1, 1/2*i", 2);
    CHECK(pt.p[1] == Scalar(Rational(0), Rational(1, 2)));
    CHECK(pt.q[1] == Scalar(Rational(0), Rational(-1, 2)));
    CHECK_THROWS_AS(parse_point("1", 2), ParseError);
}

TEST_CASE("verification examples") {
    const VerificationReport a = verify_theorem(P("w + ~w + z1*~z1", 2), parse_jet("2 + z1", 2), 3);
    CHECK(a.verdict == Verdict::Holds);
    CHECK(a.rank_pd == 10u);
    CHECK(a.target == 10);
    CHECK(exit_code(a) == 0);

    const VerificationReport b = verify_theorem(P("1 + z1*~z1 + w*~w", 2), parse_jet("1", 2), 2);
    CHECK(b.verdict == Verdict::HypothesisViolated);
    CHECK(b.violation == Violation::NoZeroSet);
    CHECK(exit_code(b) == 2);

    const VerificationReport c = verify_theorem(P("w + ~w + z1*~z1", 2), parse_jet("0", 2), 2);
    CHECK(c.violation == Violation::QIdenticallyZero);

    const VerificationReport d =
        verify_theorem(P("z1^2*~z1^2", 2), parse_jet("1", 2), 1);
    CHECK(d.violation == Violation::BidegreeTooHigh);

    const VerificationReport e =
        verify_theorem(P("w + ~w + z1*~z1", 2), parse_jet("1", 2), 1, parse_point("1, 0", 2));
    CHECK(e.violation == Violation::PointNotOnZeroSet);
}

TEST_CASE("Q vanishing at the base point") {
    // Q = w P: factoring out P raises the power.
    const Polynomial p = P("w + ~w + z1*~z1", 2);
    const VerificationReport r = verify_theorem(p, JetRecipe::polynomial(poly_mul(P("1 + z1", 2), p)), 2);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.factored_power == 1);
    // Q = w: moved to a nearby zero instead.
    const VerificationReport s = verify_theorem(p, parse_jet("w", 2), 2);
    CHECK(s.verdict == Verdict::Holds);
    CHECK(s.shifted_point.has_value());
    // Jet Q vanishing at the base point.
    const VerificationReport t = verify_theorem(p, parse_jet("w/(2 + z1)", 2), 1);
    CHECK(t.verdict == Verdict::Holds);
}

TEST_CASE("low rank path") {
    const VerificationReport r = verify_theorem(P("z1*~w", 2), parse_jet("1 + w", 2), 3);
    CHECK(r.path == "rank <= 1");
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.lower_bound >= std::optional<std::size_t>(1));
}

TEST_CASE("polynomial Q: certified bound and exact rank agree") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 3);
        const int d = static_cast<int>(seed % 4);
        const Instance inst = random_instance(seed, n, d, Shape::WithPolynomialQ);
        const VerificationReport r = verify_theorem(inst.p, inst.q, d, inst.point);
        CHECK(r.verdict == Verdict::Holds);
        REQUIRE(r.exact_rank_qpd);
        CHECK(*r.exact_rank_qpd >= *r.lower_bound);
    }
}

TEST_CASE("jet Q instances hold") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const int n = 1 + static_cast<int>(seed % 3);
        const int d = static_cast<int>(seed % 3);
        const Instance inst = random_instance(seed, n, d, Shape::WithJetQ);
        CHECK(verify_theorem(inst.p, inst.q, d, inst.point).verdict == Verdict::Holds);
    }
}

TEST_CASE("random instances") {
    const Instance a = random_instance(1, 2, 2, Shape::FullNormalFormWithTail);
    CHECK(is_full_rank_normal_form(a.p));
    CHECK(verify_theorem(a.p, a.q, 2, a.point).verdict == Verdict::Holds);

    const Instance b = random_instance(2, 2, 2, Shape::GeneralBidegree11);
    REQUIRE(b.point);
    CHECK(evaluate(b.p, *b.point).is_zero());
    CHECK_NOTHROW(classify_linear_form(translate(b.p, b.point->p, b.point->q)));

    for (Shape s : {Shape::FullNormalFormWithTail, Shape::GeneralBidegree11, Shape::WithPolynomialQ, Shape::WithJetQ}) {
        const Instance x = random_instance(9, 3, 2, s), y = random_instance(9, 3, 2, s);
        CHECK(x.p == y.p);
        CHECK(x.q.str() == y.q.str());
        CHECK(parse_shape(to_string(s)) == s);
        REQUIRE(x.point);
        CHECK(evaluate(x.p, *x.point).is_zero());
        const auto v = x.q.value_at(*x.point);
        CHECK(v.defined);
        CHECK(v.nonzero);
    }
    CHECK_FALSE(parse_shape("nope").has_value());
}

TEST_CASE("json report") {
    const VerificationReport a = verify_theorem(P("w + ~w + z1*~z1", 2), parse_jet("2 + z1", 2), 3);
    const auto j = nlohmann::json::parse(emit_report(a, Format::Json));
    CHECK(j["verdict"] == "holds");
    CHECK(j["rank_Pd"] == 10);
    CHECK(j["base_point"]["p"][0] == "0");
    CHECK(j["normalization"]["form"] == "Form1");
    CHECK(emit_report(a, Format::Text).find("verdict: holds") == 0);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("gallery") {
    const auto cases = run_gallery();
    CHECK(cases.size() == 7);
    for (const auto& c : cases) {
        INFO(c.id);
        CHECK(c.pass);
    }
    std::istringstream lines(emit_gallery(cases, Format::Json));
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("case"));
        CHECK(j["pass"] == true);
        ++count;
    }
    CHECK(count == cases.size());
}
