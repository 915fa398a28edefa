#pragma once

// Truncated power series of real-analytic functions, built from a small
// recipe language so they can be moved to a new base point by re-expansion.

#include "hrank/change.hpp"
#include "hrank/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>

namespace hrank {

enum class RecipeKind { Polynomial, Reciprocal, Exp, Product, Shifted };

struct AnalyticJet;

class JetRecipe {
public:
    /// The zero polynomial in dimension 0; placeholder for default construction.
    JetRecipe();
    static JetRecipe polynomial(Polynomial p);
    /// 1 / s.
    static JetRecipe reciprocal(Polynomial s);
    static JetRecipe exp(Polynomial s);
    /// Products of two polynomial recipes fold into a polynomial recipe.
    static JetRecipe product(const JetRecipe& a, const JetRecipe& b);
    /// `inner` expressed in the coordinates reached by `trail`.
    static JetRecipe shifted(const JetRecipe& inner, ChangeTrail trail);

    RecipeKind kind() const;
    int dim() const;
    bool is_polynomial() const { return kind() == RecipeKind::Polynomial; }
    /// The polynomial of a Polynomial recipe; throws otherwise.
    const Polynomial& as_polynomial() const;
    bool identically_zero() const;

    /// Same function in the coordinates after `step`; pushes the step down
    /// into every leaf, so the result never contains Shifted nodes.
    JetRecipe transported(const ChangeStep& step) const;
    JetRecipe transported(const ChangeTrail& trail) const;

    struct Value {
        bool defined = false;
        bool nonzero = false;
        std::optional<Scalar> exact;  // when representable in the field
    };
    Value value_at(const Point& pt) const;

    std::string str() const;

private:
    struct Node;
    explicit JetRecipe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    JetRecipe flattened() const;
    /// Truncated Taylor expansion at the origin; adds dropped exp constants
    /// to `omitted`.
    Polynomial expand(int d, Scalar& omitted) const;
    friend AnalyticJet jet_of(const JetRecipe& recipe, int d);

    std::shared_ptr<const Node> node_;
};

struct AnalyticJet {
    int order = 0;        // coefficients are exact up to bidegree (order, order)
    Polynomial coeffs;    // every monomial of bidegree <= (order, order)
    JetRecipe recipe;
    /// Sum of constants c pulled out of exp(c + ...) as the factor e^c; the
    /// function equals e^{omitted} times `coeffs`.  Zero when nothing was
    /// dropped.
    Scalar omitted_exp_constant;

    int dim() const { return coeffs.dim(); }
    Scalar constant_term() const { return coeffs.constant_term(); }
};

/// Throws std::domain_error when a reciprocal's denominator vanishes at the
/// origin.
AnalyticJet jet_of(const JetRecipe& recipe, int d);

/// (d, d)-truncation of Q * P^d.  Throws std::invalid_argument when Q is
/// truncated below order d.
AnalyticJet jet_times_power(const AnalyticJet& q, const Polynomial& p, int d);

/// Exact rank of the (d, d)-truncated coefficient matrix of Q * P^d, a lower
/// bound for the hermitian rank of Q * P^d.
std::size_t rank_lower_bound(const AnalyticJet& q, const Polynomial& p, int d);

}  // namespace hrank
