#include "hrank/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace hrank {

using nlohmann::json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text or json)");
}

std::string point_str(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.p.size(); ++i) out += (i ? ", " : "") + p.p[i].str();
    out += " | ";
    for (std::size_t i = 0; i < p.q.size(); ++i) out += (i ? ", " : "") + p.q[i].str();
    return out + ")";
}

namespace {

json scalars(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

json point_json(const std::optional<Point>& p) {
    if (!p) return nullptr;
    return {{"p", scalars(p->p)}, {"q", scalars(p->q)}};
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json normal_form_json(const NormalFormReport& r) {
    json trail = json::array();
    for (const auto& s : r.trail.steps()) trail.push_back(describe(s));
    return {{"form", to_string(r.form)},
            {"r", r.r},
            {"epsilon", r.epsilon ? json(r.epsilon->get_str()) : json(nullptr)},
            {"blocks_swapped", r.blocks_swapped()},
            {"trail", trail},
            {"transformed", r.transformed.str()}};
}

json report_json(const VerificationReport& r) {
    json timings = json::array();
    for (const auto& t : r.timings) timings.push_back({{"stage", t.stage}, {"ms", t.ms}});
    return {
        {"input", {{"P", r.p_text}, {"Q", r.q_text}, {"n", r.n}, {"d", r.d}}},
        {"base_point", point_json(r.base_point)},
        {"base_point_source", r.base_point_source},
        {"shifted_point", point_json(r.shifted_point)},
        {"path", r.path},
        {"normalization", r.normalization ? normal_form_json(*r.normalization) : json(nullptr)},
        {"reduced_dim", r.reduced_dim},
        {"factored_power", r.factored_power},
        {"effective_power", r.effective_power},
        {"rank_P", r.rank_p},
        {"rank_Pd", opt(r.rank_pd)},
        {"target", r.target},
        {"lower_bound", opt(r.lower_bound)},
        {"lower_bound_order", r.lower_bound_order},
        {"exact_rank_QPd", opt(r.exact_rank_qpd)},
        {"checks",
         {{"structure_Pd", opt(r.structure_power_ok)},
          {"structure_QPd", opt(r.structure_q_ok)},
          {"pivots_Pd", opt(r.pivots_power_ok)},
          {"pivots_QPd", opt(r.pivots_q_ok)}}},
        {"verdict", to_string(r.verdict)},
        {"violation", r.violation == Violation::None ? json(nullptr) : json(to_string(r.violation))},
        {"internal_failure", r.internal_failure},
        {"detail", r.detail},
        {"timings", timings},
    };
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "ok" : "FAILED") : "-"; }

template <class T>
std::string num(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "-";
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
    os << "  " << std::left << std::setw(24) << key << value << '\n';
}

}  // namespace

std::string emit_report(const VerificationReport& r, Format f) {
    if (f == Format::Json) return report_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict);
    if (r.violation != Violation::None) os << " (" << to_string(r.violation) << ")";
    os << '\n';
    row(os, "P", r.p_text);
    row(os, "Q", r.q_text);
    row(os, "n, d", std::to_string(r.n) + ", " + std::to_string(r.d));
    row(os, "rank P", std::to_string(r.rank_p));
    row(os, "rank P^d", num(r.rank_pd));
    row(os, "C(rank P + d - 1, d)", std::to_string(r.target));
    if (r.base_point) row(os, "base point", point_str(*r.base_point) + " [" + r.base_point_source + "]");
    if (r.shifted_point) row(os, "shifted to", point_str(*r.shifted_point));
    if (!r.path.empty()) row(os, "path", r.path);
    if (r.normalization) {
        const auto& nf = *r.normalization;
        std::string s = to_string(nf.form) + ", r = " + std::to_string(nf.r);
        if (nf.epsilon) s += ", epsilon = " + nf.epsilon->get_str();
        row(os, "normal form", s);
        row(os, "reduced dimension", std::to_string(r.reduced_dim));
    }
    if (r.factored_power) row(os, "factored power of P", std::to_string(r.factored_power));
    if (r.lower_bound)
        row(os, "lower bound", std::to_string(*r.lower_bound) + " (order " + std::to_string(r.lower_bound_order) + ")");
    if (r.exact_rank_qpd) row(os, "exact rank Q P^d", std::to_string(*r.exact_rank_qpd));
    if (r.structure_power_ok) {
        row(os, "structure P^d", yes_no(r.structure_power_ok));
        row(os, "structure Q P^d", yes_no(r.structure_q_ok));
        row(os, "pivots P^d", yes_no(r.pivots_power_ok));
        row(os, "pivots Q P^d", yes_no(r.pivots_q_ok));
    }
    if (!r.detail.empty()) row(os, "detail", r.detail);
    for (const auto& t : r.timings) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(2) << t.ms << " ms";
        row(os, "  " + t.stage, ms.str());
    }
    return os.str();
}

std::string emit_gallery(const std::vector<GalleryCase>& cases, Format f) {
    std::ostringstream os;
    for (const auto& c : cases) {
        if (f == Format::Json) {
            json checks = json::array();
            for (const auto& k : c.checks)
                checks.push_back({{"name", k.name}, {"expected", k.expected}, {"observed", k.observed}, {"pass", k.pass}});
            os << json{{"case", c.id}, {"construction", c.construction}, {"basis", c.basis},
                       {"checks", checks}, {"pass", c.pass}}
                      .dump()
               << '\n';
            continue;
        }
        os << "(" << c.id << ") " << (c.pass ? "PASS" : "FAIL") << "  " << c.construction << '\n'
           << "    " << c.basis << '\n';
        for (const auto& k : c.checks)
            os << "    " << std::left << std::setw(40) << k.name << " expected " << std::setw(12) << k.expected
               << " observed " << std::setw(12) << k.observed << (k.pass ? "" : "  <-- mismatch") << '\n';
    }
    return os.str();
}

std::string emit_normal_form(const NormalFormReport& r, Format f) {
    if (f == Format::Json) return normal_form_json(r).dump(2) + "\n";
    std::ostringstream os;
    row(os, "form", to_string(r.form));
    row(os, "r", std::to_string(r.r));
    if (r.epsilon) row(os, "epsilon", r.epsilon->get_str());
    row(os, "normalized", r.transformed.str());
    for (const auto& s : r.trail.steps()) row(os, "step", describe(s));
    return os.str();
}

}  // namespace hrank
