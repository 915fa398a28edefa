#pragma once

// Index sets of monomials z^a w^b zeta^c eta^delta, the componentwise order on
// them, and the checks that certify full rank of C(P^d)_d and C(QP^d)_d for P
// in full-rank normal form.

#include "hrank/coeff_matrix.hpp"
#include "hrank/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hrank {

// Set membership, with the empty convention for negative d.
//   A_d: |a|+b <= d, |c|+delta <= d
//   B_d: |a|+b+delta <= d, |c|+b+delta <= d
//   P_d: |a|+b+delta = d, a = c
//   N_d: B_d minus P_d
bool in_A(const Monomial& m, int d);
bool in_B(const Monomial& m, int d);
bool in_P(const Monomial& m, int d);
bool in_N(const Monomial& m, int d);

enum class MonomialClass { InP, InN, InA_notB, Outside };

MonomialClass classify_monomial(const Monomial& m, int d);
std::string to_string(MonomialClass c);

/// Componentwise order on (a, b, c, delta).
bool order_leq(const Monomial& small, const Monomial& big);

/// Quotient big / small; requires order_leq(small, big).
Monomial monomial_quotient(const Monomial& big, const Monomial& small);

/// The four implications relating small <= big, their quotient X = big/small
/// and the index sets:
///   0. X != 1, big in B_d              => small in N_d
///   1. X in A_1 \ B_1, big in B_d      => small in N_{d-1}
///   2. X in P_1, big in N_d            => small in N_{d-1}
///   3. X in P_1, big in P_d            => small in P_{d-1}
struct ImplicationVerdict {
    std::array<bool, 4> applied{};
    std::array<bool, 4> held{};
    bool all_hold() const;
};
ImplicationVerdict order_implications(const Monomial& small, const Monomial& big, int d);

/// Pivot z^alpha w^((2d-|alpha|-t)/2) zeta^alpha eta^((t-|alpha|)/2), or its
/// block swap when `conjugate` is set.
struct PivotIndex {
    int t = 0;
    std::vector<int> alpha;  // length n - 1
    bool conjugate = false;
};

/// Throws std::invalid_argument unless 0 <= |alpha| <= t <= d and
/// t = |alpha| mod 2.
Monomial pivot_monomial(const PivotIndex& idx, int d);
/// All non-conjugate pivot indices with the given t.
std::vector<PivotIndex> pivot_indices(int n, int d, int t);

/// Every monomial of bidegree <= (d, d) in dimension n.
std::vector<Monomial> enumerate_A(int n, int d);
std::vector<Monomial> enumerate_P(int n, int d);
/// #P_d by enumeration.
std::uint64_t pivot_count(int n, int d);

struct StructureMode {
    enum class Kind { PowerOnly, WithQ };
    Kind kind = Kind::PowerOnly;
    Scalar q0;                                // WithQ only, nonzero
    std::optional<Polynomial> reference;      // WithQ: optional P^d to compare against

    static StructureMode power_only() { return {}; }
    static StructureMode with_q(Scalar q0, std::optional<Polynomial> reference = std::nullopt) {
        return {Kind::WithQ, std::move(q0), std::move(reference)};
    }
};

struct StructureViolation {
    Monomial witness;
    Scalar coefficient;
    std::string reason;
};

struct StructureReport {
    std::size_t checked_N = 0;
    std::size_t checked_P = 0;
    std::vector<StructureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Coefficients of R vanish on N_d; on P_d they are positive rationals
/// (PowerOnly) or q0 times positive rationals, equal to q0 times the
/// reference coefficient when one is given (WithQ).
StructureReport structure_check(const Polynomial& r, int d, const StructureMode& mode);

struct PivotReport {
    bool ok = false;
    int failed_stage = -1;  // -1: input pattern; t: stage t; d + 1: final check
    std::optional<Monomial> witness;
    std::string reason;
    std::size_t rank = 0;   // C(n+d, d) when ok
    std::vector<Monomial> pivots;
};

/// Staged row and column reduction on a private copy of M = C(R)_d using the
/// P_d positions as pivots.  Succeeds when every claimed zero is zero and the
/// pivot set is exactly P_d.
PivotReport pivot_verify(const CoefficientMatrix& m, int d);

/// d! / (prod a_i! * b! * delta!): the coefficient of a P_d monomial in P^d.
Rational pivot_multinomial(const Monomial& m, int d);

}  // namespace hrank
