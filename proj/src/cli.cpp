#include "cyclo/cli.hpp"

#include "cyclo/circulant.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/decompose.hpp"
#include "cyclo/diffeq.hpp"
#include "cyclo/io.hpp"
#include "cyclo/selfcheck.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace cyclo {

namespace {

enum class Format { json, text };

struct Options {
    std::string format = "json";

    std::string cyclo_n;

    std::string input;
    bool oracle = false;

    std::string coeffs;

    std::string row;
    bool det = false;
    bool singular = false;
    bool null = false;

    std::uint64_t max_n = 24;
    std::uint64_t seed = SelfcheckOptions{}.seed;
    std::string fault = "none";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_positive(const std::string& text, const char* what) {
    const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits || text.size() > 18 || std::stoull(text) == 0)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
    return std::stoull(text);
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::vector<Rational> parse_row(const std::string& text) {
    // Rows are polynomial-format lists, but trailing zeros are significant.
    std::vector<Rational> row;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        row.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return row;
}

int cmd_cyclo(const std::string& which, const Options& o, Format fmt, std::ostream& out) {
    const std::uint64_t n = parse_positive(o.cyclo_n, "N");
    if (which == "poly") {
        const RatPoly p = cyclotomic(n);
        if (fmt == Format::json) out << Json{{"n", n}, {"poly", format_poly(p)}}.dump(2) << '\n';
        else out << format_poly(p) << '\n';
    } else if (which == "phi") {
        if (fmt == Format::json) out << Json{{"n", n}, {"phi", euler_phi(n)}}.dump(2) << '\n';
        else out << euler_phi(n) << '\n';
    } else {
        const auto factors = factor_unity(n);
        if (fmt == Format::json) {
            Json arr = Json::array();
            for (const auto& f : factors) arr.push_back(Json{{"d", f.d}, {"poly", format_poly(f.phi)}});
            out << Json{{"n", n}, {"factors", arr}}.dump(2) << '\n';
        } else {
            for (const auto& f : factors) out << f.d << ": " << format_poly(f.phi) << '\n';
        }
    }
    return kExitOk;
}

double oracle_max_error(const PeriodicSeq& seq, const Decomposition& dec) {
    const auto groups = dft_group_oracle(seq);
    double err = 0;
    for (const auto& [d, c] : dec.components)
        for (std::size_t k = 0; k < seq.period(); ++k)
            err = std::max(err, std::abs(groups.at(d)[k] - c.values()[k].get_d()));
    return err;
}

int cmd_decompose(const Options& o, Format fmt, std::ostream& out) {
    const PeriodicSeq seq = read_sequence_file(o.input);
    const Decomposition dec = decompose(seq);
    const auto supp = support(dec);
    RatPoly annihilator = RatPoly::constant(1);
    for (auto d : supp) annihilator = annihilator * cyclotomic(d);
    const std::size_t period = fundamental_period(seq);

    if (fmt == Format::json) {
        Json j;
        j["support"] = supp;
        j["components"] = decomposition_to_json(dec);
        j["minimal_annihilator"] = format_poly(annihilator);
        j["fundamental_period"] = period;
        if (o.oracle) j["oracle_max_error"] = oracle_max_error(seq, dec);
        out << j.dump(2) << '\n';
    } else {
        out << "support: " << join(supp, " ") << '\n';
        for (const auto& [d, c] : dec.components) out << "component " << d << ": " << sequence_to_csv(c) << '\n';
        out << "minimal_annihilator: " << format_poly(annihilator) << '\n';
        out << "fundamental_period: " << period << '\n';
        if (o.oracle) out << "oracle_max_error: " << oracle_max_error(seq, dec) << '\n';
    }
    return kExitOk;
}

int cmd_diffeq(const Options& o, Format fmt, std::ostream& out) {
    const DiffEqReport report = analyze(parse_poly(o.coeffs));
    if (fmt == Format::json) {
        out << report_to_json(report).dump(2) << '\n';
        return kExitOk;
    }
    std::vector<std::string> factors;
    for (const auto& [d, mult] : report.cyclotomic_factors)
        factors.push_back("Phi_" + std::to_string(d) + (mult > 1 ? "^" + std::to_string(mult) : ""));
    out << "char_poly: " << format_poly(report.char_poly) << '\n';
    out << "cyclotomic_factors:";
    for (const auto& f : factors) out << ' ' << f;
    out << '\n';
    out << "residual: " << format_poly(report.residual) << '\n';
    out << "unit_modulus_flag: " << to_string(report.unit_modulus_flag) << '\n';
    for (const auto& [d, seq] : report.sample_solutions) out << "sample " << d << ": " << sequence_to_csv(seq) << '\n';
    out << "verdict: " << periodicity_verdict(report) << '\n';
    return kExitOk;
}

int cmd_circulant(const Options& o, Format fmt, std::ostream& out) {
    const Circulant c(parse_row(o.row));
    const bool all = !o.det && !o.singular && !o.null;

    Json j;
    std::vector<std::pair<std::string, std::string>> lines;
    if (all) {
        j["matrix"] = matrix_to_json(to_matrix(c));
    }
    if (all || o.det) {
        const std::string det = format_rational(circ_det(c));
        j["det"] = det;
        lines.emplace_back("det", det);
    }
    if (all || o.singular) {
        const Singularity s = is_singular(c);
        j["singular"] = s.singular;
        j["witnesses"] = s.witnesses;
        lines.emplace_back("singular", std::string(s.singular ? "true" : "false") +
                                           (s.witnesses.empty() ? "" : " (Phi_" + join(s.witnesses, ", Phi_") + ")"));
    }
    if (all || o.null) {
        Json basis = Json::array();
        std::string text;
        for (const auto& v : nullspace(to_matrix(c))) {
            basis.push_back(vector_to_json(v));
            text += (text.empty() ? "" : " ") + std::string("(");
            for (std::size_t k = 0; k < v.size(); ++k) text += (k ? "," : "") + format_rational(v[k]);
            text += ")";
        }
        j["nullspace"] = std::move(basis);
        lines.emplace_back("nullspace", text.empty() ? "{}" : text);
    }

    if (fmt == Format::json) {
        out << j.dump(2) << '\n';
    } else if (lines.size() == 1) {
        out << lines.front().second << '\n';
    } else {
        for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
    }
    return kExitOk;
}

int cmd_annihilator(const Options& o, Format fmt, std::ostream& out) {
    const PeriodicSeq seq = read_sequence_file(o.input);
    const AnnihilatorSystem sys = annihilator_system(seq);
    const std::string minimal = format_poly(minimal_annihilator(seq));
    const bool consistent = annihilator_consistency(seq);

    if (fmt == Format::json) {
        Json basis = Json::array();
        for (const auto& v : sys.basis) basis.push_back(vector_to_json(v));
        Json j;
        j["matrix"] = matrix_to_json(sys.matrix);
        j["nullspace"] = std::move(basis);
        j["minimal_annihilator"] = minimal;
        j["consistent"] = consistent;
        out << j.dump(2) << '\n';
    } else {
        out << "nullspace_dimension: " << sys.basis.size() << '\n';
        for (const auto& v : sys.basis) {
            out << "vector:";
            for (const auto& x : v) out << ' ' << format_rational(x);
            out << '\n';
        }
        out << "minimal_annihilator: " << minimal << '\n';
        out << "consistent: " << (consistent ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_selfcheck(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
    if (o.max_n == 0) throw UsageError("--max-n must be >= 1");
    SelfcheckOptions opts;
    opts.max_n = o.max_n;
    opts.seed = o.seed;
    if (o.fault == "projector-sign") opts.fault = InjectedFault::projector_sign;
    else if (o.fault != "none") throw UsageError("unknown fault '" + o.fault + "'");

    const auto results = run_selfcheck(opts);
    const bool passed = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });

    if (fmt == Format::json) {
        Json suites = Json::array();
        for (const auto& r : results) {
            Json s;
            s["name"] = r.name;
            s["cases"] = r.cases;
            s["passed"] = r.passed();
            if (r.failure) s["failure"] = *r.failure;
            suites.push_back(std::move(s));
        }
        Json j;
        j["max_n"] = opts.max_n;
        j["seed"] = opts.seed;
        j["suites"] = std::move(suites);
        j["passed"] = passed;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results)
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)" << '\n';
        out << (passed ? "all suites passed" : "self-check FAILED") << '\n';
    }
    for (const auto& r : results)
        if (!r.passed()) err << "selfcheck: " << r.name << " failed on " << *r.failure << '\n';
    return passed ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cyclotomic decomposition of periodic sequences", "cyclokit"};
    app.require_subcommand(1);
    Options o;
    app.fallthrough();
    auto* format_opt = app.add_option("--format", o.format, "Output format (json, text)")
                           ->check(CLI::IsMember({"json", "text"}));

    auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic polynomials and x^n - 1");
    cyclo->require_subcommand(1);
    auto* cyclo_poly = cyclo->add_subcommand("poly", "Print Phi_N (ascending coefficients)");
    auto* cyclo_phi = cyclo->add_subcommand("phi", "Print Euler's totient of N");
    auto* cyclo_unity = cyclo->add_subcommand("factor-unity", "Factor x^N - 1 into Phi_d, d | N");
    for (auto* sub : {cyclo_poly, cyclo_phi, cyclo_unity}) sub->add_option("N", o.cyclo_n)->required();

    auto* dec = app.add_subcommand("decompose", "Split a periodic sequence into ker Phi_d(E) components");
    dec->add_option("--input", o.input, "Sequence file (JSON or CSV row)")->required();
    dec->add_flag("--oracle", o.oracle, "Also report the DFT-grouping oracle's max error");

    auto* diffeq = app.add_subcommand("diffeq", "Periodic solutions of P(E) y = 0");
    diffeq->require_subcommand(1);
    auto* analyze_cmd = diffeq->add_subcommand("analyze", "Classify a characteristic polynomial");
    analyze_cmd->add_option("--coeffs", o.coeffs, "Ascending coefficients, e.g. \"1,2,2,1\"")->required();

    auto* circ = app.add_subcommand("circulant", "Circulant matrix determinant, singularity, nullspace");
    circ->add_option("--row", o.row, "First row a_0,...,a_{n-1}")->required()->allow_extra_args(false);
    circ->add_flag("--det", o.det);
    circ->add_flag("--singular", o.singular);
    circ->add_flag("--nullspace", o.null);

    auto* ann = app.add_subcommand("annihilator", "Circulant annihilator system of a sequence");
    ann->add_option("--input", o.input, "Sequence file (JSON or CSV row)")->required();

    auto* self = app.add_subcommand("selfcheck", "Run every property suite");
    self->add_option("--max-n", o.max_n, "Bound on n for all suites");
    self->add_option("--seed", o.seed, "Random seed");
    self->add_option("--inject-fault", o.fault, "Deliberately break a component (projector-sign)");

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) reversed.push_back(*it);
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Format fmt = o.format == "text" ? Format::text : Format::json;
    // cyclo prints the bare polynomial text format unless JSON is asked for.
    if (cyclo->parsed() && format_opt->count() == 0) fmt = Format::text;
    try {
        if (cyclo_poly->parsed()) return cmd_cyclo("poly", o, fmt, out);
        if (cyclo_phi->parsed()) return cmd_cyclo("phi", o, fmt, out);
        if (cyclo_unity->parsed()) return cmd_cyclo("factor-unity", o, fmt, out);
        if (dec->parsed()) return cmd_decompose(o, fmt, out);
        if (analyze_cmd->parsed()) return cmd_diffeq(o, fmt, out);
        if (circ->parsed()) return cmd_circulant(o, fmt, out);
        if (ann->parsed()) return cmd_annihilator(o, fmt, out);
        if (self->parsed()) return cmd_selfcheck(o, fmt, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace cyclo
