#include "hrank/verify.hpp"

#include "hrank/coeff_matrix.hpp"
#include "hrank/combinatorics.hpp"

#include <chrono>

namespace hrank {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::HypothesisViolated: return "hypothesis-violated";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::None: return "none";
        case Violation::BidegreeTooHigh: return "bidegree exceeds (1,1)";
        case Violation::QIdenticallyZero: return "Q identically zero";
        case Violation::NoZeroSet: return "no zero set";
        case Violation::PointNotOnZeroSet: return "base point not on the zero set";
        case Violation::QUndefinedAtBasePoint: return "Q not defined at the base point";
    }
    return "?";
}

int exit_code(const VerificationReport& r) {
    switch (r.verdict) {
        case Verdict::Holds: return 0;
        case Verdict::HypothesisViolated: return 2;
        case Verdict::Indeterminate: return 4;
    }
    return 4;
}

namespace {

class Stopwatch {
public:
    explicit Stopwatch(std::vector<StageTiming>& sink) : sink_(sink) {}
    void lap(std::string stage) {
        const auto now = std::chrono::steady_clock::now();
        sink_.push_back({std::move(stage), std::chrono::duration<double, std::milli>(now - last_).count()});
        last_ = now;
    }

private:
    std::vector<StageTiming>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void violated(VerificationReport& rep, Violation v, std::string detail) {
    rep.verdict = Verdict::HypothesisViolated;
    rep.violation = v;
    rep.detail = std::move(detail);
}

void indeterminate(VerificationReport& rep, std::string detail, bool internal = false) {
    rep.verdict = Verdict::Indeterminate;
    rep.internal_failure = internal;
    rep.detail = std::move(detail);
}

/// P real-valued with all n+1 squares of one sign: P(z) != 0 everywhere
/// since (1, z) never vanishes.
bool definite_certificate(const Polynomial& p) {
    if (!is_real_valued(p) || p.max_degree() > 1) return false;
    const SignatureDecomposition s = signature_decompose(p);
    return s.square_count() == static_cast<std::size_t>(p.dim() + 1) &&
           (s.positive.empty() || s.negative.empty());
}

void run(VerificationReport& rep, const Polynomial& p, const JetRecipe& q, int d,
         const std::optional<Point>& given) {
    Stopwatch clock(rep.timings);
    const int n = p.dim();

    rep.rank_p = rank_of(p);
    rep.target = multinomial_bound(static_cast<std::int64_t>(rep.rank_p), d);
    rep.rank_pd = rank_of(poly_pow(p, d));
    clock.lap("rank P, rank P^d");

    if (const auto bd = p.bidegree(); bd && (bd->holo > 1 || bd->anti > 1)) {
        violated(rep, Violation::BidegreeTooHigh,
                 "P has bidegree (" + std::to_string(bd->holo) + "," + std::to_string(bd->anti) + ")");
        return;
    }
    if (q.identically_zero()) {
        violated(rep, Violation::QIdenticallyZero, "Q is identically zero");
        return;
    }

    if (given) {
        if (given->dim() != n) throw DimensionMismatch("base point has the wrong dimension");
        if (!evaluate(p, *given).is_zero()) {
            violated(rep, Violation::PointNotOnZeroSet, "P does not vanish at the given point");
            return;
        }
        rep.base_point = given;
        rep.base_point_source = "given";
    } else {
        auto zero = find_zero(p);
        clock.lap("find zero");
        if (!zero) {
            if (definite_certificate(p)) {
                violated(rep, Violation::NoZeroSet,
                         "P is a definite hermitian form in (1, z): a sum of n+1 squares of one sign");
            } else {
                indeterminate(rep, "no zero of P found on the searched lines; supply --point");
            }
            return;
        }
        rep.base_point = zero;
        rep.base_point_source = "found";
    }

    const JetRecipe::Value at_base = q.value_at(*rep.base_point);
    if (!at_base.defined) {
        violated(rep, Violation::QUndefinedAtBasePoint, "a denominator of Q vanishes at the base point");
        return;
    }

    ChangeTrail to_base;
    to_base.push(AffinePairChange::translation(rep.base_point->p, rep.base_point->q));
    Polynomial pl = to_base.apply(p);
    JetRecipe ql = q.transported(to_base);
    const Polynomial pd_local = poly_pow(pl, d);

    if (rep.rank_p <= 1) {
        // Q P^d is a nonzero germ, so some finite truncation of it is nonzero.
        rep.path = "rank <= 1";
        rep.effective_power = d;
        for (int order = d; order <= d + 12; ++order) {
            const AnalyticJet jet = jet_of(ql, order);
            const Polynomial prod = poly_mul_truncated(jet.coeffs, pd_local.truncated(order), order);
            rep.lower_bound = exact_rank(build_matrix(prod, order));
            rep.lower_bound_order = order;
            if (*rep.lower_bound >= rep.target) break;
        }
        clock.lap("truncated rank");
    } else {
        rep.path = "full-rank normal form";
        int dprime = 0;
        if (!ql.value_at(Point::origin(n)).nonzero) {
            bool fixed = false;
            if (ql.is_polynomial()) {
                const NormalFormReport nf = classify_linear_form(pl);
                if (nf.form != LinearForm::Form3) {
                    const FactorOut fo = factor_out_P(nf.trail.apply(ql.as_polynomial()), nf.transformed);
                    if (fo.power > 0) {
                        pl = nf.transformed;
                        ql = JetRecipe::polynomial(fo.quotient);
                        dprime = fo.power;
                        fixed = ql.value_at(Point::origin(n)).nonzero;
                    }
                }
            }
            if (!fixed) {
                const auto pt = find_nonvanishing_zero(pl, ql);
                if (!pt) {
                    indeterminate(rep, "Q vanishes at every zero of P tried near the base point");
                    return;
                }
                rep.shifted_point = pt;
                ChangeTrail shift;
                shift.push(AffinePairChange::translation(pt->p, pt->q));
                pl = shift.apply(pl);
                ql = ql.transported(shift);
            }
            clock.lap("arrange Q(0) != 0");
        }
        const int big_d = d + dprime;
        rep.factored_power = dprime;
        rep.effective_power = big_d;

        FullRankReduction fr;
        try {
            fr = reduce_full_rank(pl, jet_of(ql, big_d), big_d);
        } catch (const NoAdmissibleShift& e) {
            indeterminate(rep, e.what());
            return;
        }
        rep.normalization = fr.report;
        rep.reduced_dim = fr.p.dim();
        clock.lap("normalize");

        const Polynomial ppow = poly_pow(fr.p, big_d);
        rep.structure_power_ok = structure_check(ppow, big_d, StructureMode::power_only()).ok();
        rep.pivots_power_ok = pivot_verify(build_matrix(ppow, big_d), big_d).ok;
        const AnalyticJet qp = jet_times_power(fr.q, fr.p, big_d);
        rep.structure_q_ok =
            structure_check(qp.coeffs, big_d, StructureMode::with_q(fr.q.constant_term(), ppow)).ok();
        const CoefficientMatrix qm = build_matrix(qp.coeffs, big_d);
        const PivotReport pq = pivot_verify(qm, big_d);
        rep.pivots_q_ok = pq.ok;
        rep.lower_bound = exact_rank(qm);
        rep.lower_bound_order = big_d;
        clock.lap("structure and pivots");

        const std::uint64_t full = binomial(rep.reduced_dim + big_d, big_d);
        if (!*rep.structure_power_ok || !*rep.pivots_power_ok || !*rep.structure_q_ok || !pq.ok) {
            indeterminate(rep, "structure or pivot check failed on the normalized instance", true);
            return;
        }
        if (pq.rank != *rep.lower_bound || *rep.lower_bound != full) {
            indeterminate(rep, "pivot count disagrees with the exact rank", true);
            return;
        }
    }

    if (q.is_polynomial()) {
        rep.exact_rank_qpd = rank_of(poly_mul(q.as_polynomial(), poly_pow(p, d)));
        clock.lap("exact rank Q P^d");
        if (*rep.exact_rank_qpd < *rep.lower_bound) {
            indeterminate(rep, "exact rank of Q P^d is below the truncated rank", true);
            return;
        }
    }
    if (*rep.rank_pd != rep.target) {
        indeterminate(rep, "rank P^d differs from C(rank P + d - 1, d)", true);
        return;
    }
    if (*rep.lower_bound < rep.target) {
        indeterminate(rep, "lower bound below C(rank P + d - 1, d)", true);
        return;
    }
    rep.verdict = Verdict::Holds;
    rep.detail = "rank Q P^d >= " + std::to_string(*rep.lower_bound) + " >= " + std::to_string(rep.target);
}

}  // namespace

VerificationReport verify_theorem(const Polynomial& p, const JetRecipe& q, int d,
                                  const std::optional<Point>& base_point) {
    if (d < 0) throw std::invalid_argument("verify_theorem: negative d");
    if (q.dim() != p.dim()) throw DimensionMismatch("verify_theorem: P and Q have different dimensions");
    VerificationReport rep;
    rep.p_text = p.str();
    rep.q_text = q.str();
    rep.n = p.dim();
    rep.d = d;
    try {
        run(rep, p, q, d, base_point);
    } catch (const DimensionMismatch&) {
        throw;
    } catch (const std::exception& e) {
        indeterminate(rep, std::string("internal error: ") + e.what(), true);
    }
    return rep;
}

}  // namespace hrank
