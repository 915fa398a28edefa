#pragma once

// End-to-end check of rank(Q P^d) >= rank(P^d) = C(rank P + d - 1, d) for
// one instance, with every hypothesis tested rather than assumed.

#include "hrank/jets.hpp"
#include "hrank/normal_form.hpp"
#include "hrank/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hrank {

enum class Verdict { Holds, HypothesisViolated, Indeterminate };

enum class Violation {
    None,
    BidegreeTooHigh,
    QIdenticallyZero,
    NoZeroSet,             // certified: P is a definite hermitian form in (1, z)
    PointNotOnZeroSet,     // a supplied base point with P(p) != 0
    QUndefinedAtBasePoint,
};

std::string to_string(Verdict v);
std::string to_string(Violation v);

struct StageTiming {
    std::string stage;
    double ms = 0;
};

struct VerificationReport {
    // input
    std::string p_text;
    std::string q_text;
    int n = 0;
    int d = 0;

    std::optional<Point> base_point;  // diagonal point in the input coordinates
    std::string base_point_source;    // "given", "found" or empty
    std::optional<Point> shifted_point;  // polarized point used when Q vanished at the base point

    std::string path;  // "full-rank normal form" or "rank <= 1"
    std::optional<NormalFormReport> normalization;
    int reduced_dim = 0;
    int factored_power = 0;  // d' with Q = Q' P^d'
    int effective_power = 0;  // d + d'

    std::size_t rank_p = 0;
    std::optional<std::size_t> rank_pd;
    std::uint64_t target = 0;  // C(rank P + d - 1, d)
    /// Rank of a truncated coefficient matrix of Q P^d: a lower bound.
    std::optional<std::size_t> lower_bound;
    int lower_bound_order = 0;
    /// Exact rank of Q P^d, only for polynomial Q.
    std::optional<std::size_t> exact_rank_qpd;

    std::optional<bool> structure_power_ok;
    std::optional<bool> structure_q_ok;
    std::optional<bool> pivots_power_ok;
    std::optional<bool> pivots_q_ok;

    Verdict verdict = Verdict::Indeterminate;
    Violation violation = Violation::None;
    bool internal_failure = false;
    std::string detail;
    std::vector<StageTiming> timings;
};

VerificationReport verify_theorem(const Polynomial& p, const JetRecipe& q, int d,
                                  const std::optional<Point>& base_point = std::nullopt);

/// 0 holds, 2 hypothesis violated, 4 internal failure or indeterminate.
int exit_code(const VerificationReport& r);

}  // namespace hrank
