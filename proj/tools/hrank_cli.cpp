// hrank: exact hermitian ranks and the rank inequality for Q P^d.

#include "hrank/coeff_matrix.hpp"
#include "hrank/gallery.hpp"
#include "hrank/normal_form.hpp"
#include "hrank/parse.hpp"
#include "hrank/random_instance.hpp"
#include "hrank/report.hpp"
#include "hrank/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hrank;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 2;
constexpr int kUsage = 3;
constexpr int kInternal = 4;

struct Options {
    int n = 2;
    int d = 1;
    std::string field = "qi";
    std::string format = "text";
    std::uint64_t seed = 1;
    int trials = 100;
    std::string point;
    std::string out;
    std::string q = "1";
    std::string shape = "with-polynomial-Q";
    std::string expr;
    bool signature = false;
    bool n_given = false;
    bool d_given = false;
};

/// "@path" reads the expression from a file.
std::string expression_text(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

int cmd_rank(const Options& o) {
    const Field field = Field::parse(o.field);
    const JetRecipe r = parse_jet(expression_text(o.expr), o.n, field);
    json j{{"input", r.str()}, {"n", o.n}};
    std::string text;
    if (r.is_polynomial()) {
        const CoefficientMatrix m = build_matrix(r.as_polynomial(), r.as_polynomial().max_degree());
        const std::size_t rank = rank_of(r.as_polynomial());
        j["rank"] = rank;
        j["matrix"] = {m.entries.rows(), m.entries.cols()};
        text = "rank " + std::to_string(rank) + " (" + std::to_string(m.entries.rows()) + " x " +
               std::to_string(m.entries.cols()) + " coefficient matrix)\n";
    } else {
        // A jet has infinite expansion: report the truncated rank at order d.
        const AnalyticJet jet = jet_of(r, o.d);
        const std::size_t rank = exact_rank(build_matrix(jet.coeffs, o.d));
        j["truncated_rank"] = rank;
        j["order"] = o.d;
        text = "truncated rank " + std::to_string(rank) + " at order " + std::to_string(o.d) +
               " (a lower bound)\n";
    }
    write(o, o.format == "json" ? j.dump(2) + "\n" : text);
    return kOk;
}

int cmd_decompose(const Options& o) {
    const Polynomial p = parse_poly(expression_text(o.expr), o.n, Field::parse(o.field));
    json j{{"input", p.str()}};
    std::ostringstream os;
    if (o.signature) {
        const SignatureDecomposition s = signature_decompose(p);
        json pos = json::array(), neg = json::array();
        for (const auto& t : s.positive) pos.push_back({{"weight", t.weight.str()}, {"f", t.f.str()}});
        for (const auto& t : s.negative) neg.push_back({{"weight", t.weight.str()}, {"f", t.f.str()}});
        j["positive"] = pos;
        j["negative"] = neg;
        j["signature"] = {s.positive.size(), s.negative.size()};
        os << "signature (" << s.positive.size() << ", " << s.negative.size() << ")\n";
        for (const auto& t : s.positive) os << "  + " << t.weight.str() << " * |" << t.f.str() << "|^2\n";
        for (const auto& t : s.negative) os << "  - " << t.weight.str() << " * |" << t.f.str() << "|^2\n";
    } else {
        const RankFactorization f = rank_factorize(p);
        json terms = json::array();
        os << "rank " << f.rank << '\n';
        for (std::size_t k = 0; k < f.rank; ++k) {
            terms.push_back({{"phi", f.phi[k].str()}, {"psi", f.psi[k].str()}});
            os << "  (" << f.phi[k].str() << ") * conj(" << f.psi[k].str() << ")\n";
        }
        j["rank"] = f.rank;
        j["terms"] = terms;
    }
    write(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
    return kOk;
}

int cmd_normalize(const Options& o) {
    const Polynomial p = parse_poly(expression_text(o.expr), o.n, Field::parse(o.field));
    write(o, emit_normal_form(classify_linear_form(p), parse_format(o.format)));
    return kOk;
}

int cmd_verify(const Options& o) {
    const Field field = Field::parse(o.field);
    const Polynomial p = parse_poly(expression_text(o.expr), o.n, field);
    const JetRecipe q = parse_jet(expression_text(o.q), o.n, field);
    std::optional<Point> pt;
    if (!o.point.empty()) pt = parse_point(o.point, o.n, field);
    const VerificationReport r = verify_theorem(p, q, o.d, pt);
    write(o, emit_report(r, parse_format(o.format)));
    return exit_code(r);
}

int cmd_gallery(const Options& o) {
    const auto cases = run_gallery();
    write(o, emit_gallery(cases, parse_format(o.format)));
    return std::all_of(cases.begin(), cases.end(), [](const GalleryCase& c) { return c.pass; }) ? kOk : kInternal;
}

json timings_json(const VerificationReport& r) {
    json t = json::object();
    for (const auto& s : r.timings) t[s.stage] = s.ms;
    return t;
}

int cmd_random_suite(const Options& o) {
    const auto shape = parse_shape(o.shape);
    if (!shape) throw std::invalid_argument("unknown shape '" + o.shape + "'");
    const Format f = parse_format(o.format);
    std::ostringstream os;
    int worst = kOk;
    std::size_t holds = 0;
    for (int t = 0; t < o.trials; ++t) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(t);
        // Without -n / -d, cycle through n = 1..3 and d = 0..4.
        const int n = o.n_given ? o.n : 1 + t % 3;
        const int d = o.d_given ? o.d : (t / 3) % 5;
        const Instance inst = random_instance(seed, n, d, *shape);
        const VerificationReport r = verify_theorem(inst.p, inst.q, d, inst.point);
        const int code = exit_code(r);
        worst = std::max(worst, code);
        holds += r.verdict == Verdict::Holds;
        if (f == Format::Json) {
            os << json{{"seed", seed},    {"n", n},
                       {"d", d},          {"verdict", to_string(r.verdict)},
                       {"rank_P", r.rank_p}, {"target", r.target},
                       {"lower_bound", r.lower_bound ? json(*r.lower_bound) : json(nullptr)},
                       {"detail", r.detail},
                       {"timings", timings_json(r)}}
                      .dump()
               << '\n';
        } else {
            os << "seed " << seed << "  n=" << n << " d=" << d << "  " << to_string(r.verdict) << "  rank P "
               << r.rank_p << "  bound " << (r.lower_bound ? std::to_string(*r.lower_bound) : "-") << " >= "
               << r.target << (code ? "  " + r.detail : "") << '\n';
        }
    }
    if (f == Format::Text) os << holds << " / " << o.trials << " hold\n";
    write(o, os.str());
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hermitian ranks of polynomials and jets, and the rank inequality for Q P^d"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_expr) {
        sub->add_option("-n", o.n, "dimension (variables z1..z{n-1}, w)")->check(CLI::Range(1, 16));
        sub->add_option("--field", o.field, "qi or qi-sqrtS");
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "write output to this file");
        if (needs_expr) sub->add_option("expr", o.expr, "expression, or @file")->required();
    };

    auto* rank = app.add_subcommand("rank", "hermitian rank of a polynomial (truncated rank for a jet)");
    common(rank, true);
    rank->add_option("-d", o.d, "truncation order for jets")->check(CLI::NonNegativeNumber);

    auto* decompose = app.add_subcommand("decompose", "minimal sum of products, or signature squares");
    common(decompose, true);
    decompose->add_flag("--signature", o.signature, "weighted squares for real-valued input");

    auto* normalize = app.add_subcommand("normalize", "linear normal form of a bidegree-(1,1) P with P(0) = 0");
    common(normalize, true);

    auto* verify = app.add_subcommand("verify", "check rank(Q P^d) >= C(rank P + d - 1, d)");
    common(verify, true);
    verify->add_option("-d", o.d, "power of P")->check(CLI::NonNegativeNumber);
    verify->add_option("--q", o.q, "Q as an expression or @file (default 1)");
    verify->add_option("--point", o.point, "base point z1,...,w on the zero set of P");

    auto* gallery = app.add_subcommand("gallery", "counterexamples for each hypothesis");
    common(gallery, false);

    auto* suite = app.add_subcommand("random-suite", "verify seeded random instances");
    common(suite, false);
    auto* n_opt = suite->get_option("-n");
    auto* d_opt = suite->add_option("-d", o.d, "power of P")->check(CLI::NonNegativeNumber);
    suite->add_option("--seed", o.seed, "first seed");
    suite->add_option("--trials", o.trials, "number of instances")->check(CLI::NonNegativeNumber);
    suite->add_option("--shape", o.shape,
                      "full-normal-form-with-tail, general-bidegree-11, with-polynomial-Q or with-jet-Q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    o.n_given = n_opt->count() > 0;
    o.d_given = d_opt->count() > 0;

    try {
        if (*rank) return cmd_rank(o);
        if (*decompose) return cmd_decompose(o);
        if (*normalize) return cmd_normalize(o);
        if (*verify) return cmd_verify(o);
        if (*gallery) return cmd_gallery(o);
        return cmd_random_suite(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
