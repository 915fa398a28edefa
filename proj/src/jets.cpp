#include "hrank/jets.hpp"

#include "hrank/coeff_matrix.hpp"

#include <stdexcept>

namespace hrank {

struct JetRecipe::Node {
    RecipeKind kind;
    Polynomial poly;  // leaf data for Polynomial, Reciprocal, Exp
    std::shared_ptr<const Node> left, right;
    ChangeTrail trail;  // Shifted only
    int n = 0;
};

JetRecipe::JetRecipe() : JetRecipe(polynomial(Polynomial(0))) {}

JetRecipe JetRecipe::polynomial(Polynomial p) {
    const int n = p.dim();
    return JetRecipe(std::make_shared<const Node>(Node{RecipeKind::Polynomial, std::move(p), {}, {}, {}, n}));
}

JetRecipe JetRecipe::reciprocal(Polynomial s) {
    if (s.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    const int n = s.dim();
    return JetRecipe(std::make_shared<const Node>(Node{RecipeKind::Reciprocal, std::move(s), {}, {}, {}, n}));
}

JetRecipe JetRecipe::exp(Polynomial s) {
    const int n = s.dim();
    return JetRecipe(std::make_shared<const Node>(Node{RecipeKind::Exp, std::move(s), {}, {}, {}, n}));
}

JetRecipe JetRecipe::product(const JetRecipe& a, const JetRecipe& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("jet product: dimension mismatch");
    if (a.is_polynomial() && b.is_polynomial())
        return polynomial(a.as_polynomial() * b.as_polynomial());
    return JetRecipe(std::make_shared<const Node>(
        Node{RecipeKind::Product, Polynomial(a.dim()), a.node_, b.node_, {}, a.dim()}));
}

JetRecipe JetRecipe::shifted(const JetRecipe& inner, ChangeTrail trail) {
    if (trail.empty()) return inner;
    // The dimension after the trail is only known by running it on something.
    const int n = trail.apply(Polynomial(inner.dim())).dim();
    return JetRecipe(std::make_shared<const Node>(
        Node{RecipeKind::Shifted, Polynomial(n), inner.node_, {}, std::move(trail), n}));
}

RecipeKind JetRecipe::kind() const { return node_->kind; }
int JetRecipe::dim() const { return node_->n; }

const Polynomial& JetRecipe::as_polynomial() const {
    if (!is_polynomial()) throw std::logic_error("recipe is not a polynomial");
    return node_->poly;
}

bool JetRecipe::identically_zero() const {
    switch (kind()) {
        case RecipeKind::Polynomial:
            return node_->poly.is_zero();
        case RecipeKind::Reciprocal:
        case RecipeKind::Exp:
            return false;
        case RecipeKind::Product:
            return JetRecipe(node_->left).identically_zero() ||
                   JetRecipe(node_->right).identically_zero();
        case RecipeKind::Shifted:
            return JetRecipe(node_->left).identically_zero();
    }
    return false;
}

JetRecipe JetRecipe::transported(const ChangeStep& step) const {
    switch (kind()) {
        case RecipeKind::Polynomial:
            return polynomial(apply_step(step, node_->poly));
        case RecipeKind::Reciprocal:
            return reciprocal(apply_step(step, node_->poly));
        case RecipeKind::Exp:
            return exp(apply_step(step, node_->poly));
        case RecipeKind::Product:
            return product(JetRecipe(node_->left).transported(step),
                           JetRecipe(node_->right).transported(step));
        case RecipeKind::Shifted:
            return flattened().transported(step);
    }
    throw std::logic_error("unknown recipe kind");
}

JetRecipe JetRecipe::transported(const ChangeTrail& trail) const {
    JetRecipe out = flattened();
    for (const auto& s : trail.steps()) out = out.transported(s);
    return out;
}

JetRecipe JetRecipe::flattened() const {
    switch (kind()) {
        case RecipeKind::Shifted:
            return JetRecipe(node_->left).transported(node_->trail);
        case RecipeKind::Product:
            return product(JetRecipe(node_->left).flattened(), JetRecipe(node_->right).flattened());
        default:
            return *this;
    }
}

JetRecipe::Value JetRecipe::value_at(const Point& pt) const {
    switch (kind()) {
        case RecipeKind::Polynomial: {
            Scalar v = evaluate(node_->poly, pt);
            return {true, !v.is_zero(), v};
        }
        case RecipeKind::Reciprocal: {
            const Scalar v = evaluate(node_->poly, pt);
            if (v.is_zero()) return {false, false, std::nullopt};
            return {true, true, v.inverse()};
        }
        case RecipeKind::Exp: {
            const Scalar v = evaluate(node_->poly, pt);
            return {true, true, v.is_zero() ? std::optional<Scalar>(Scalar(1)) : std::nullopt};
        }
        case RecipeKind::Product: {
            const Value a = JetRecipe(node_->left).value_at(pt);
            const Value b = JetRecipe(node_->right).value_at(pt);
            Value out{a.defined && b.defined, a.nonzero && b.nonzero, std::nullopt};
            if (out.defined && a.exact && b.exact) out.exact = *a.exact * *b.exact;
            // A zero factor makes the product zero even when the other is not exact.
            if (out.defined && ((a.exact && a.exact->is_zero()) || (b.exact && b.exact->is_zero())))
                out.exact = Scalar(0);
            return out;
        }
        case RecipeKind::Shifted:
            return flattened().value_at(pt);
    }
    throw std::logic_error("unknown recipe kind");
}

std::string JetRecipe::str() const {
    switch (kind()) {
        case RecipeKind::Polynomial:
            return "(" + node_->poly.str() + ")";
        case RecipeKind::Reciprocal:
            return "1/(" + node_->poly.str() + ")";
        case RecipeKind::Exp:
            return "exp(" + node_->poly.str() + ")";
        case RecipeKind::Product:
            return JetRecipe(node_->left).str() + "*" + JetRecipe(node_->right).str();
        case RecipeKind::Shifted:
            return flattened().str();
    }
    throw std::logic_error("unknown recipe kind");
}

// ---------------------------------------------------------------- expansion

namespace {

/// sum_k coefficient(k) u^k truncated to (d, d).  u has no constant term, so
/// u^k has total degree >= k and is truncated away once k > 2d.
template <class Coefficient>
Polynomial truncated_series(const Polynomial& u, int d, Coefficient coefficient) {
    const int n = u.dim();
    Polynomial sum = Polynomial::constant(n, coefficient(0));
    Polynomial power = Polynomial::constant(n, Scalar(1));
    for (int k = 1; k <= 2 * d; ++k) {
        power = poly_mul_truncated(power, u, d);
        if (power.is_zero()) break;
        sum += power * coefficient(k);
    }
    return sum;
}

}  // namespace

Polynomial JetRecipe::expand(int d, Scalar& omitted) const {
    const int n = dim();
    switch (kind()) {
        case RecipeKind::Polynomial:
            return node_->poly.truncated(d);
        case RecipeKind::Reciprocal: {
            const Scalar c = node_->poly.constant_term();
            if (c.is_zero()) throw std::domain_error("reciprocal of a function vanishing at the origin");
            const Scalar c_inv = c.inverse();
            // 1/(c(1+u)) = c^-1 sum (-u)^k
            const Polynomial u = ((node_->poly - Polynomial::constant(n, c)) * c_inv).truncated(d);
            return truncated_series(u, d, [&](int k) { return k % 2 ? -c_inv : c_inv; });
        }
        case RecipeKind::Exp: {
            const Scalar c = node_->poly.constant_term();
            omitted += c;
            const Polynomial u = (node_->poly - Polynomial::constant(n, c)).truncated(d);
            std::vector<Scalar> inv_fact{Scalar(1)};
            Rational fact = 1;
            for (int k = 1; k <= 2 * d; ++k) {
                fact *= k;
                inv_fact.emplace_back(Rational(1) / fact);
            }
            return truncated_series(u, d, [&](int k) { return inv_fact[static_cast<std::size_t>(k)]; });
        }
        case RecipeKind::Product:
            return poly_mul_truncated(JetRecipe(node_->left).expand(d, omitted),
                                      JetRecipe(node_->right).expand(d, omitted), d);
        case RecipeKind::Shifted:
            return flattened().expand(d, omitted);
    }
    throw std::logic_error("unknown recipe kind");
}

AnalyticJet jet_of(const JetRecipe& recipe, int d) {
    if (d < 0) throw std::invalid_argument("jet_of: negative order");
    AnalyticJet jet;
    jet.order = d;
    jet.recipe = recipe;
    jet.coeffs = recipe.expand(d, jet.omitted_exp_constant);
    return jet;
}

AnalyticJet jet_times_power(const AnalyticJet& q, const Polynomial& p, int d) {
    if (q.order < d) throw std::invalid_argument("jet_times_power: jet truncated below the requested order");
    if (q.dim() != p.dim()) throw DimensionMismatch("jet_times_power: dimension mismatch");
    AnalyticJet out;
    out.order = d;
    out.recipe = JetRecipe::product(q.recipe, JetRecipe::polynomial(poly_pow(p, d)));
    out.omitted_exp_constant = q.omitted_exp_constant;
    Polynomial power = Polynomial::constant(p.dim(), Scalar(1));
    const Polynomial pt = p.truncated(d);
    for (int k = 0; k < d; ++k) power = poly_mul_truncated(power, pt, d);
    out.coeffs = poly_mul_truncated(q.coeffs.truncated(d), power, d);
    return out;
}

std::size_t rank_lower_bound(const AnalyticJet& q, const Polynomial& p, int d) {
    return exact_rank(build_matrix(jet_times_power(q, p, d).coeffs, d));
}

}  // namespace hrank
