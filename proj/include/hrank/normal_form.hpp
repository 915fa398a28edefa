#pragma once

// Normalization of bidegree-(1,1) polynomials vanishing at the origin.

#include "hrank/change.hpp"
#include "hrank/jets.hpp"
#include "hrank/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hrank {

/// P = c0 + l.x + m.y + y^T K x with K(j, i) the coefficient of x_i y_j.
struct LinearData {
    Scalar c0;
    std::vector<Scalar> l;
    std::vector<Scalar> m;
    Matrix k;
};
/// Throws std::invalid_argument when the bidegree exceeds (1, 1).
LinearData linear_data(const Polynomial& p);

enum class LinearForm {
    Form1,  // w + eta + sum_{k<=r} z_k zeta_k + terms with w or eta
    Form2,  // w + sum_{k<=r} z_k zeta_k + terms with w
    Form3,  // sum_{k<=r} z_k zeta_k + w eta
};
std::string to_string(LinearForm f);

struct NormalFormReport {
    LinearForm form = LinearForm::Form1;
    int r = 0;
    Polynomial transformed;
    ChangeTrail trail;  // trail.apply(input) == transformed
    std::optional<Rational> epsilon;
    bool blocks_swapped() const { return trail.has_block_swap(); }
};

/// Requires bidegree <= (1, 1), P(0) = 0 and P != 0.
NormalFormReport classify_linear_form(const Polynomial& p);

/// w + eta + sum z_k zeta_k plus bidegree-(1,1) terms involving w or eta.
bool is_full_rank_normal_form(const Polynomial& p);

class NoAdmissibleShift : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FullRankReduction {
    Polynomial p;         // full-rank normal form, possibly in fewer variables
    AnalyticJet q;        // Q transported, truncated at order d
    NormalFormReport report;
};

/// Throws std::invalid_argument when rank P <= 1 or Q vanishes at the
/// origin of a Form1 input, NoAdmissibleShift when no dyadic shift keeps Q
/// defined and nonzero.
FullRankReduction reduce_full_rank(const Polynomial& p, const AnalyticJet& q, int d);

/// A diagonal zero (p, conj p) of a bidegree-(1,1) P, searched along a fixed
/// list of complex lines through the origin; nullopt when none is found.
std::optional<Point> find_zero(const Polynomial& p);

/// A polarized point with P = 0 where Q is defined and nonzero, searched near
/// the origin.  P must have bidegree <= (1, 1).
std::optional<Point> find_nonvanishing_zero(const Polynomial& p, const JetRecipe& q);

struct FactorOut {
    Polynomial quotient;
    int power = 0;
};

/// Q = quotient * P^power with P not dividing the quotient.  P must be w * L
/// + G with L(0) = 1 and neither L nor G involving w.
FactorOut factor_out_P(const Polynomial& q, const Polynomial& p);

}  // namespace hrank
