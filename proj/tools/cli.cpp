#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "zagreb/bounds.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph_io.hpp"
#include "zagreb/index.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/report.hpp"

namespace zagreb::cli {

namespace {

constexpr int kWarnDelta = 5;
constexpr int kMaxDelta = 6;

struct IndexArgs {
    std::string index;
    std::optional<double> alpha;
    std::string table;
};

void add_index_options(CLI::App & cmd, IndexArgs & args)
{
    cmd.add_option("--index", args.index, "index name, optionally with a parameter (m1_alpha:-0.5)");
    cmd.add_option("--alpha", args.alpha, "parameter for m1_alpha / m2_alpha");
    cmd.add_option("--table", args.table, "custom vertex rule as degree:value pairs, e.g. 1:1,2:0.5,3:0.25");
}

IndexSpec resolve_index(const IndexArgs & args)
{
    if (!args.table.empty()) {
        if (!args.index.empty() || args.alpha)
            throw std::invalid_argument("--table cannot be combined with --index or --alpha");
        return parse_table(args.table);
    }
    const std::string name = args.index.empty() ? (args.alpha ? "m1_alpha" : "") : args.index;
    if (name.empty())
        throw std::invalid_argument("an index is required (--index, --alpha or --table)");
    if (args.alpha) {
        if (name.find(':') != std::string::npos)
            throw std::invalid_argument("give the parameter either in --index or in --alpha, not both");
        return catalog(name, *args.alpha);
    }
    return parse_index(name);
}

VertexIndexSpec vertex_index(const IndexArgs & args)
{
    IndexSpec spec = resolve_index(args);
    if (auto * v = std::get_if<VertexIndexSpec>(&spec))
        return std::move(*v);
    throw std::invalid_argument(display_name(spec) + " is an edge index; bounds need a vertex-degree rule");
}

int resolve_workers(int workers)
{
    if (workers > 0)
        return workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<MultiplicativeKind> product_kind(const VertexIndexSpec & spec)
{
    if (spec.mode() != IndexMode::multiplicative_vertex)
        return std::nullopt;
    if (spec.name() == "pi1")
        return MultiplicativeKind::pi1;
    if (spec.name() == "nk")
        return MultiplicativeKind::nk;
    if (spec.name() == "nk_star")
        return MultiplicativeKind::nk_star;
    return std::nullopt;
}

// Refuses sweeps beyond the hard cap; warns near it.
bool check_budget(int Delta, std::ostream & err)
{
    if (Delta > kMaxDelta) {
        const double cost = std::ldexp(1.0, (Delta + 3) * (Delta + 2) / 2);
        err << "error: Delta = " << Delta << " exceeds the verification cap of " << kMaxDelta
            << "; the search would visit up to " << format_value(cost) << " labeled graphs\n";
        return false;
    }
    if (Delta > kWarnDelta)
        err << "warning: Delta = " << Delta << " is above " << kWarnDelta << "; expect long runtimes\n";
    return true;
}

VerificationReport failed_report(std::string claim, std::string index, int delta, int Delta, const std::string & why)
{
    VerificationReport r;
    r.claim = std::move(claim);
    r.index = std::move(index);
    r.delta = delta;
    r.Delta = Delta;
    r.checks.push_back({"preconditions", Verdict::fail, why});
    return r;
}

VerificationReport run_claim(const std::string & claim, const VertexIndexSpec * spec, int delta, int Delta,
                             const VerifyOptions & options)
{
    try {
        if (claim == "bound")
            return verify_bound(*spec, delta, Delta, options);
        if (claim == "window")
            return verify_window(*spec, delta, Delta, options);
        if (claim == "edges")
            return verify_edge_bound(delta, Delta, options);
        if (claim == "uniqueness-H")
            return verify_uniqueness(UniquenessKind::H, delta, Delta, options);
        if (claim == "uniqueness-K")
            return verify_uniqueness(UniquenessKind::K, delta, Delta, options);
    }
    catch (const hypothesis_error & e) {
        return failed_report(claim, spec ? display_name(*spec) : "", delta, Delta, e.what());
    }
    catch (const domain_error & e) {
        return failed_report(claim, spec ? display_name(*spec) : "", delta, Delta, e.what());
    }
    throw std::invalid_argument("unknown claim \"" + claim + "\"");
}

bool claim_needs_index(const std::string & claim) { return claim == "bound" || claim == "window"; }

bool claim_needs_gap(const std::string & claim) { return claim != "bound" && claim != "edges"; }

void write_reports(const std::vector<VerificationReport> & reports, const std::string & format, std::ostream & os)
{
    if (format == "csv") {
        os << kCsvHeader << '\n';
        for (const auto & r : reports)
            os << csv_row(r) << '\n';
    }
    else {
        os << to_json(reports).dump(2) << '\n';
    }
}

int emit(const std::vector<VerificationReport> & reports, const std::string & format, const std::string & output,
         std::ostream & out, std::ostream & err)
{
    if (output.empty() || output == "-") {
        write_reports(reports, format, out);
    }
    else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << output << '\n';
            return usage;
        }
        write_reports(reports, format, file);
    }
    std::ostream & summary = output.empty() || output == "-" ? err : out;
    std::size_t passed = 0;
    for (const auto & r : reports)
        passed += r.passed();
    if (passed == reports.size()) {
        summary << "PASS " << passed << "/" << reports.size() << '\n';
        return ok;
    }
    summary << "FAIL " << reports.size() - passed << "/" << reports.size() << '\n';
    for (const auto & r : reports) {
        if (r.passed())
            continue;
        for (const auto & c : r.checks)
            if (c.verdict == Verdict::fail)
                summary << "  " << r.claim << ' ' << r.index << " (" << r.delta << "," << r.Delta << ") " << c.name
                        << ": " << c.detail << '\n';
    }
    return failure;
}

int cmd_compute(const std::string & input, const IndexArgs & args, std::istream & in, std::ostream & out,
                std::ostream & err)
{
    const IndexSpec spec = resolve_index(args);
    std::vector<GraphRecord> records;
    try {
        if (input == "-") {
            records = read_graphs(in);
        }
        else {
            std::ifstream file(input);
            if (!file) {
                err << "error: cannot open " << input << '\n';
                return usage;
            }
            records = read_graphs(file);
        }
    }
    catch (const parse_error & e) {
        err << "error: line " << e.line() << ": " << e.what() << '\n';
        return usage;
    }

    const std::string name = display_name(spec);
    int code = ok;
    for (const auto & rec : records) {
        const std::string g6 = to_graph6(rec.graph);
        try {
            const double value = std::visit(
                [&](const auto & s) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, VertexIndexSpec>)
                        return eval_vertex_index(s, rec.graph);
                    else
                        return eval_edge_index(s, rec.graph);
                },
                spec);
            out << g6 << ' ' << name << ' ' << format_value(value) << '\n';
        }
        catch (const domain_error & e) {
            err << "error: line " << rec.line << ": " << g6 << ": " << e.what() << '\n';
            code = failure;
        }
    }
    return code;
}

int cmd_family(const std::string & id_text, const std::string & format, std::ostream & out)
{
    const FamilyGraph fg = build_family(parse_family_id(id_text));
    if (format == "edgelist")
        out << to_edge_list(fg.graph);
    else
        out << to_graph6(fg.graph) << '\n';
    return ok;
}

int cmd_bound(const IndexArgs & args, int delta, int Delta, const std::string & format, std::ostream & out)
{
    const VertexIndexSpec spec = vertex_index(args);
    const auto kind = product_kind(spec);
    const BoundResult b = kind && delta >= 2 && delta < Delta ? multiplicative_lower_bound(*kind, delta, Delta)
                                                              : lower_bound(spec, delta, Delta);
    if (format == "text") {
        out << display_name(spec) << ' ' << delta << ' ' << Delta << ' ' << format_value(b.value) << ' '
            << b.case_label << '\n';
        return ok;
    }
    Json j;
    j["index"] = display_name(spec);
    j["delta"] = delta;
    j["Delta"] = Delta;
    const Json record = to_json(b);
    for (const auto & [k, v] : record.items())
        j[k] = v;
    out << j.dump(2) << '\n';
    return ok;
}

int cmd_sweep(const SweepConfig & config, std::ostream & out, std::ostream & err)
{
    if (config.delta_range.lo < 1 || config.delta_range.lo > config.delta_range.hi ||
        config.Delta_range.lo > config.Delta_range.hi)
        throw std::invalid_argument("ranges must be non-empty with delta >= 1");
    if (!check_budget(config.Delta_range.hi, err))
        return usage;

    std::vector<VertexIndexSpec> specs;
    if (claim_needs_index(config.claim)) {
        for (double a : config.alphas)
            specs.push_back(m1_alpha_spec(a));
        for (const auto & name : config.indices)
            specs.push_back(vertex_index({name, std::nullopt, ""}));
        if (specs.empty())
            throw std::invalid_argument("claim " + config.claim + " needs --alpha or --index");
    }

    VerifyOptions options;
    options.workers = resolve_workers(config.workers);
    options.n_max = config.n_max;
    options.strict_extremal = config.strict_extremal;

    std::vector<VerificationReport> reports;
    std::size_t skipped = 0;
    for (int delta = config.delta_range.lo; delta <= config.delta_range.hi; ++delta) {
        for (int Delta = std::max(delta, config.Delta_range.lo); Delta <= config.Delta_range.hi; ++Delta) {
            if (claim_needs_gap(config.claim) && delta == Delta)
                continue;
            if (specs.empty()) {
                reports.push_back(run_claim(config.claim, nullptr, delta, Delta, options));
                continue;
            }
            for (const auto & spec : specs) {
                // Multiplicative rules need every factor above 1, i.e. delta >= 2.
                if (spec.mode() == IndexMode::multiplicative_vertex && delta < 2) {
                    ++skipped;
                    continue;
                }
                reports.push_back(run_claim(config.claim, &spec, delta, Delta, options));
            }
        }
    }
    if (skipped)
        err << "note: skipped " << skipped << " multiplicative runs with delta < 2\n";
    return emit(reports, config.format, config.output, out, err);
}

}  // namespace

Range parse_range(const std::string & text)
{
    const auto dots = text.find("..");
    auto to_int = [&](const std::string & s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad range \"" + text + "\"");
        return v;
    };
    try {
        if (dots == std::string::npos) {
            const int v = to_int(text);
            return {v, v};
        }
        return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    }
    catch (const std::logic_error &) {
        throw std::invalid_argument("bad range \"" + text + "\"; expected N or LO..HI");
    }
}

int run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Degree-based topological indices and their extremal bounds"};
    app.name("zagreb");
    app.require_subcommand(1);

    auto * compute = app.add_subcommand("compute", "evaluate an index on every graph of a file");
    std::string input = "-";
    IndexArgs compute_args;
    compute->add_option("input", input, "graph6 or edge-list file, - for stdin");
    add_index_options(*compute, compute_args);

    auto * family = app.add_subcommand("family", "print a representative of an extremal family");
    std::string family_id;
    std::string family_format = "graph6";
    family->add_option("id", family_id, "family id, e.g. H:1,3")->required();
    family->add_option("--format", family_format)->check(CLI::IsMember({"graph6", "edgelist"}));

    auto * bound = app.add_subcommand("bound", "evaluate the closed-form lower bound");
    IndexArgs bound_args;
    int bound_delta = 0, bound_Delta = 0;
    std::string bound_format = "json";
    add_index_options(*bound, bound_args);
    bound->add_option("--delta", bound_delta)->required();
    bound->add_option("--Delta", bound_Delta)->required();
    bound->add_option("--format", bound_format)->check(CLI::IsMember({"json", "text"}));

    const std::vector<std::string> claims = {"bound", "edges", "uniqueness-H", "uniqueness-K", "window"};

    auto * verify = app.add_subcommand("verify", "check one claim against exhaustive search");
    IndexArgs verify_args;
    SweepConfig verify_config;
    int verify_delta = 0, verify_Delta = 0;
    add_index_options(*verify, verify_args);
    verify->add_option("--claim", verify_config.claim)->check(CLI::IsMember(claims));
    verify->add_option("--delta", verify_delta)->required();
    verify->add_option("--Delta", verify_Delta)->required();
    verify->add_option("--n-max", verify_config.n_max, "largest vertex count searched");
    verify->add_option("--workers", verify_config.workers, "threads; 0 uses every core");
    verify->add_option("--format", verify_config.format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--output", verify_config.output, "report path; stdout by default");
    verify->add_flag("--strict-extremal", verify_config.strict_extremal,
                     "argmins must be isomorphic to the family representatives");

    auto * sweep = app.add_subcommand("sweep", "check a claim over a grid of (delta, Delta) and indices");
    SweepConfig sweep_config;
    std::string delta_text = "1", Delta_text = "1";
    sweep->add_option("--claim", sweep_config.claim)->check(CLI::IsMember(claims));
    sweep->add_option("--delta", delta_text, "N or LO..HI")->required();
    sweep->add_option("--Delta", Delta_text, "N or LO..HI")->required();
    sweep->add_option("--alpha", sweep_config.alphas, "m1_alpha exponents")->delimiter(',');
    sweep->add_option("--index", sweep_config.indices, "index names")->delimiter(',');
    sweep->add_option("--n-max", sweep_config.n_max, "largest vertex count searched");
    sweep->add_option("--workers", sweep_config.workers, "threads; 0 uses every core");
    sweep->add_option("--format", sweep_config.format)->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--output", sweep_config.output, "report path; stdout by default");
    sweep->add_flag("--strict-extremal", sweep_config.strict_extremal,
                    "argmins must be isomorphic to the family representatives");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(input, compute_args, in, out, err);
        if (family->parsed())
            return cmd_family(family_id, family_format, out);
        if (bound->parsed())
            return cmd_bound(bound_args, bound_delta, bound_Delta, bound_format, out);
        if (verify->parsed()) {
            if (!verify_args.table.empty() || !verify_args.index.empty() || verify_args.alpha) {
                const IndexSpec spec = resolve_index(verify_args);
                verify_config.indices = {display_name(spec)};
                if (!verify_args.table.empty())
                    throw std::invalid_argument("verify takes catalog indices; use --index or --alpha");
            }
            verify_config.delta_range = {verify_delta, verify_delta};
            verify_config.Delta_range = {verify_Delta, verify_Delta};
            return cmd_sweep(verify_config, out, err);
        }
        sweep_config.delta_range = parse_range(delta_text);
        sweep_config.Delta_range = parse_range(Delta_text);
        return cmd_sweep(sweep_config, out, err);
    }
    catch (const budget_exceeded & e) {
        err << "error: " << e.what() << " (estimated cost " << format_value(e.estimated_cost()) << ")\n";
        return usage;
    }
    catch (const hypothesis_error & e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    catch (const domain_error & e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace zagreb::cli
