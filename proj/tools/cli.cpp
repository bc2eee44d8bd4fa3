#include "cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "monadforge/chow.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/les.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/serialize.hpp"
#include "monadforge/stability.hpp"

#ifndef MONADFORGE_VERSION
#define MONADFORGE_VERSION "dev"
#endif

namespace monadforge::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int m = 0;
    int k = 0;
    long trials = 20;
    std::uint64_t seed = 0;
    long max_q = 0;  // 0 = default
    long max_psum = 4;
    long min_psum = 0;
    long component_bound = 4;
    std::string format = "json";
    std::string input;
    std::string output;
    std::vector<long> degree;
};

/// SOURCE_DATE_EPOCH when set, otherwise the epoch, so identical invocations produce identical bytes.
std::string manifest_timestamp()
{
    std::time_t t = 0;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        try {
            t = static_cast<std::time_t>(std::stoll(env));
        } catch (const std::exception&) {
            throw UsageError("SOURCE_DATE_EPOCH must be an integer");
        }
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Json manifest(const std::string& command, const SpaceParams& params, std::uint64_t seed)
{
    return Json{{"command", command},
                {"params", to_json(params)},
                {"seed", seed},
                {"tool_version", MONADFORGE_VERSION},
                {"timestamp", manifest_timestamp()}};
}

SpaceParams params_of(const Options& o)
{
    if (o.n < 1 || o.m < 1 || o.k < 1)
        throw UsageError("--n, --m and --k must be positive integers");
    return SpaceParams{o.n, o.m, o.k};
}

StabilityScanConfig scan_config_of(const Options& o, const SpaceParams& params)
{
    StabilityScanConfig cfg = StabilityScanConfig::defaults(params);
    if (o.max_q != 0)
        cfg.max_q = static_cast<unsigned>(o.max_q);
    cfg.max_psum = o.max_psum;
    cfg.min_psum = o.min_psum;
    cfg.component_bound = o.component_bound;
    if (o.max_q < 0 || o.component_bound < 0)
        throw UsageError("--max-q and --component-bound must be non-negative");
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::string cell(const Polynomial& p)
{
    return p.str();
}

void render_matrix_text(std::ostream& os, const PolyMatrix& m, const std::vector<std::size_t>& cuts, bool by_column)
{
    std::size_t width = 1;
    for (const auto& p : m.entries())
        width = std::max(width, cell(p).size());
    auto is_cut = [&](std::size_t idx) { return std::find(cuts.begin(), cuts.end(), idx) != cuts.end(); };
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!by_column && i > 0 && is_cut(i)) {
            os << std::string(m.cols() * (width + 1), '-') << '\n';
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (by_column && j > 0 && is_cut(j))
                os << "| ";
            os << std::setw(static_cast<int>(width)) << cell(m.at(i, j)) << (j + 1 < m.cols() ? " " : "");
        }
        os << '\n';
    }
}

std::vector<std::size_t> block_cuts(const SpaceParams& p)
{
    const std::size_t a = static_cast<std::size_t>(p.n + p.k);
    const std::size_t b = static_cast<std::size_t>(p.m + p.k);
    return {a, 2 * a, 2 * a + b};
}

void write_output(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file " + o.output);
    file << text;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string bundle_text(const LineBundleSum& s)
{
    std::string out;
    for (const auto& [deg, mult] : s.summands()) {
        if (!out.empty())
            out += " + ";
        out += "O" + deg.str() + "^" + mult.get_str();
    }
    return out.empty() ? "0" : out;
}

int cmd_build(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    const MonadSpec spec = assemble_monad(params);
    if (o.format == "text") {
        std::ostringstream os;
        os << "monad on P^" << params.n << " x P^" << params.n << " x P^" << params.m << " x P^" << params.m
           << ", k = " << params.k << "\n";
        os << "source: " << bundle_text(spec.source) << "\n";
        os << "middle: " << bundle_text(spec.middle) << "\n";
        os << "target: " << bundle_text(spec.target) << "\n\n";
        os << "f (" << spec.f.rows() << "x" << spec.f.cols() << "):\n";
        render_matrix_text(os, spec.f, block_cuts(params), true);
        os << "\ng (" << spec.g.rows() << "x" << spec.g.cols() << "):\n";
        render_matrix_text(os, spec.g, block_cuts(params), false);
        write_output(o, os.str(), out);
    } else {
        Json doc = to_json(spec);
        doc["manifest"] = manifest("build", params, o.seed);
        write_output(o, dump(doc), out);
    }
    return kExitOk;
}

MonadSpec load_monad(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input file " + path);
    try {
        return monad_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
        throw UsageError("malformed monad document: " + std::string(e.what()));
    } catch (const FormatError& e) {
        throw UsageError("malformed monad document: " + std::string(e.what()));
    } catch (const ShapeError& e) {
        throw UsageError("malformed monad document: " + std::string(e.what()));
    }
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.trials < 1)
        throw UsageError("--trials must be at least 1");
    MonadSpec spec = o.input.empty() ? assemble_monad(params_of(o)) : load_monad(o.input);
    const SpaceParams& params = spec.params;

    const std::size_t k = static_cast<std::size_t>(params.k);
    const std::size_t width = static_cast<std::size_t>(2 * (params.n + params.k) + 2 * (params.m + params.k));
    const bool shapes_ok = spec.f.rows() == k && spec.f.cols() == width && spec.g.rows() == width && spec.g.cols() == k;
    const bool bundles_ok = spec.source == monad_source(params) && spec.middle == monad_middle(params) &&
                            spec.target == monad_target(params);
    bool variables_ok = true;
    for (const auto* mat : {&spec.f, &spec.g})
        for (const auto& p : mat->entries())
            for (const auto& [mono, c] : p.terms())
                for (const auto& [v, e] : mono.entries())
                    variables_ok = variables_ok && v.valid_for(params);

    const bool composition = shapes_ok && verify_composition(spec);
    std::optional<RankReport> rank;
    if (shapes_ok && variables_ok)
        rank = verify_maximal_rank(spec, static_cast<unsigned>(o.trials), o.seed);

    const bool pass = shapes_ok && bundles_ok && variables_ok && composition && rank && rank->maximal;

    Json gradings = Json::array();
    for (const auto& g : block_gradings(spec))
        gradings.push_back(Json{{"matrix", g.matrix},
                                {"block", g.block},
                                {"homogeneous", g.homogeneous},
                                {"degree", to_json(g.degree)}});

    Json doc{{"manifest", manifest("verify", params, o.seed)},
             {"shapes_consistent", shapes_ok},
             {"bundles_match_construction", bundles_ok},
             {"variables_in_range", variables_ok},
             {"composition_zero", composition},
             {"maximal_rank", rank ? to_json(*rank) : Json(nullptr)},
             {"block_gradings", std::move(gradings)},
             {"certified", pass}};
    if (o.format == "text") {
        std::ostringstream os;
        os << "composition f*g = 0: " << (composition ? "yes" : "NO") << "\n";
        os << "maximal rank (" << o.trials << " trials): " << (rank && rank->maximal ? "yes" : "NO") << "\n";
        os << (pass ? "CERTIFIED" : "FAILED") << "\n";
        write_output(o, os.str(), out);
    } else {
        write_output(o, dump(doc), out);
    }
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_cohomology(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    if (o.degree.size() != 4)
        throw UsageError("--degree needs four integers a,b,c,d");
    const MultiDegree deg{o.degree[0], o.degree[1], o.degree[2], o.degree[3]};
    const CohTable table = line_bundle_cohomology(params, deg);
    if (o.format == "text") {
        std::ostringstream os;
        for (int t = 0; t <= table.dim_top(); ++t)
            os << "h^" << t << " O" << deg.str() << " = " << table.get(t).get_str() << "\n";
        write_output(o, os.str(), out);
    } else {
        Json doc{{"manifest", manifest("cohomology", params, o.seed)},
                 {"degree", to_json(deg)},
                 {"cohomology", to_json(table)}};
        write_output(o, dump(doc), out);
    }
    return kExitOk;
}

Json degree_note(const SpaceParams& params, const BundleInvariants& inv)
{
    const Integer printed = printed_degree_formula_T(params);
    return Json{{"exact_degree", inv.degree.get_str()},
                {"closed_form_-(n+m+4k)L^dim", printed.get_str()},
                {"closed_form_matches", printed == inv.degree},
                {"sign_negative", inv.degree < 0}};
}

Json invariants_json(const SpaceParams& params)
{
    const BundleInvariants t = invariants_of_T(params);
    Json doc = to_json(t);
    doc["bundle"] = "T";
    doc["normalization_shift"] = normalization_shift(t, params).get_str();
    doc["delta_L_unit"] = delta_L({1, 0, 0, 0}, params).get_str();
    doc["E"] = to_json(invariants_of_E(params));
    doc["degree_note"] = degree_note(params, t);
    return doc;
}

int cmd_invariants(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    Json doc{{"manifest", manifest("invariants", params, o.seed)}};
    doc.update(invariants_json(params));
    if (o.format == "text") {
        std::ostringstream os;
        os << "rank T = " << doc["rank"].get<long>() << "\n";
        os << "c1(T) = " << invariants_of_T(params).c1.str() << "\n";
        os << "deg_L T = " << doc["degree"].get<std::string>() << "\n";
        os << "slope = " << doc["slope"].get<std::string>() << "\n";
        write_output(o, os.str(), out);
    } else {
        write_output(o, dump(doc), out);
    }
    return kExitOk;
}

int cmd_stability(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    const StabilityReport report = run_stability_scan(scan_config_of(o, params));
    if (o.format == "text") {
        std::ostringstream os;
        os << "checked " << report.checked.size() << " (q, twist) pairs\n";
        os << (report.all_vanish() ? "ALL_VANISH" : "COUNTEREXAMPLE") << "\n";
        write_output(o, os.str(), out);
    } else {
        Json doc{{"manifest", manifest("stability", params, o.seed)}};
        doc.update(to_json(report));
        write_output(o, dump(doc), out);
    }
    return report.all_vanish() && report.negative_component_invariant ? kExitOk : kExitCheckFailed;
}

int cmd_simplicity(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    const SimplicityCertificate cert = simplicity_certificate(params, scan_config_of(o, params));
    const bool ok = cert.conclusion == Conclusion::SimpleCertified;
    if (o.format == "text") {
        std::ostringstream os;
        os << (ok ? "SIMPLE_CERTIFIED" : "INCONCLUSIVE: " + cert.reason) << "\n";
        write_output(o, os.str(), out);
    } else {
        Json doc{{"manifest", manifest("simplicity", params, o.seed)}};
        doc.update(to_json(cert));
        write_output(o, dump(doc), out);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_report(const Options& o, std::ostream& out)
{
    const SpaceParams params = params_of(o);
    const SimplicityCertificate cert = simplicity_certificate(params, scan_config_of(o, params));
    const bool ok = cert.conclusion == Conclusion::SimpleCertified;
    Json doc{{"manifest", manifest("report", params, o.seed)},
             {"rank_E", cert.rank_E},
             {"degree_T", invariants_of_T(params).degree.get_str()},
             {"verdict", ok ? "SIMPLE_CERTIFIED" : "INCONCLUSIVE"},
             {"invariants", invariants_json(params)},
             {"stability", to_json(cert.stability, false)},
             {"simplicity", to_json(cert)}};
    if (o.format == "text") {
        std::ostringstream os;
        os << "rank E = " << cert.rank_E << "\n";
        os << "deg_L T = " << doc["degree_T"].get<std::string>() << "\n";
        os << doc["verdict"].get<std::string>() << "\n";
        write_output(o, os.str(), out);
    } else {
        write_output(o, dump(doc), out);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

void add_space_flags(CLI::App* sub, Options& o, bool required)
{
    auto* n = sub->add_option("--n", o.n, "dimension of the first two projective factors");
    auto* m = sub->add_option("--m", o.m, "dimension of the last two projective factors");
    auto* k = sub->add_option("--k", o.k, "monad width");
    if (required) {
        n->required();
        m->required();
        k->required();
    }
}

void add_common_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "write output to this file instead of stdout");
    sub->add_option("--seed", o.seed, "seed recorded in the manifest and used for sampling");
}

void add_scan_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--max-q", o.max_q, "largest exterior power (default min(8, rank T - 1))");
    sub->add_option("--max-psum", o.max_psum, "largest p1+p2+p3+p4");
    sub->add_option("--component-bound", o.component_bound, "each p_i >= -bound");
    sub->add_option("--min-psum", o.min_psum, "smallest p1+p2+p3+p4; negative values are a negative control");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"monadforge: linear monads on P^n x P^n x P^m x P^m"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "emit the monad f, g");
    add_space_flags(build, o, true);
    add_common_flags(build, o);

    auto* verify = app.add_subcommand("verify", "certify f*g = 0 and maximal rank");
    add_space_flags(verify, o, false);
    add_common_flags(verify, o);
    verify->add_option("--trials", o.trials, "random points for the rank check");
    verify->add_option("--input", o.input, "monad JSON document to verify instead of building one");

    auto* coh = app.add_subcommand("cohomology", "h^t of a line bundle O(a,b,c,d)");
    add_space_flags(coh, o, false);
    add_common_flags(coh, o);
    coh->add_option("--degree", o.degree, "multidegree a,b,c,d")->delimiter(',')->required()->expected(4);

    auto* inv = app.add_subcommand("invariants", "rank, c1, degree and slope of T");
    add_space_flags(inv, o, true);
    add_common_flags(inv, o);

    auto* stab = app.add_subcommand("stability", "Hoppe-criterion vanishing scan for T");
    add_space_flags(stab, o, true);
    add_common_flags(stab, o);
    add_scan_flags(stab, o);

    auto* simp = app.add_subcommand("simplicity", "simplicity certificate for E");
    add_space_flags(simp, o, true);
    add_common_flags(simp, o);
    add_scan_flags(simp, o);

    auto* report = app.add_subcommand("report", "invariants, stability and simplicity in one document");
    add_space_flags(report, o, true);
    add_common_flags(report, o);
    add_scan_flags(report, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (coh->parsed()) {
            // k does not enter line bundle cohomology
            if (o.k == 0)
                o.k = 1;
            return cmd_cohomology(o, out);
        }
        if (build->parsed())
            return cmd_build(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (inv->parsed())
            return cmd_invariants(o, out);
        if (stab->parsed())
            return cmd_stability(o, out);
        if (simp->parsed())
            return cmd_simplicity(o, out);
        if (report->parsed())
            return cmd_report(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"monadforge"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace monadforge::cli
