// sgraph — spectral graph invariants, bound verification, family
// constructors, twin quotients and the conjecture counterexample hunt.
//
// Subcommands: verify, search, family, quotient. Exit codes: 0 = clean,
// 1 = error, 2 = violations found.
#include <unistd.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgraph/bounds.hpp"
#include "sgraph/canonical.hpp"
#include "sgraph/canonical_form.hpp"
#include "sgraph/chromatic.hpp"
#include "sgraph/enumerate.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/families.hpp"
#include "sgraph/graph6.hpp"

namespace {

using sgraph::BoundsReport;
using sgraph::Graph;
using sgraph::Tolerances;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

struct OutputOptions {
    std::string format;  // "table", "json", "csv" or "" (auto)
    std::string out_path;

    // Table on a terminal, JSON when piped, unless overridden.
    std::string resolved() const {
        if (!format.empty()) return format;
        if (!out_path.empty()) return "json";
        return isatty(STDOUT_FILENO) ? "table" : "json";
    }
};

class OutputSink {
public:
    explicit OutputSink(const OutputOptions& opts) {
        if (!opts.out_path.empty()) {
            file_.open(opts.out_path);
            if (!file_) throw std::runtime_error("cannot open output file: " + opts.out_path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int default_jobs() {
    if (const char* env = std::getenv("SGRAPH_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::vector<std::string> bound_help_lines() {
    std::vector<std::string> lines;
    for (const auto& [id, desc] : sgraph::bound_catalog()) lines.push_back(id + ": " + desc);
    for (const auto& [id, desc] : sgraph::bound_catalog_chi())
        lines.push_back(id + " (--with-chi): " + desc);
    return lines;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<Graph> read_inputs(const std::string& inline_graph6, const std::string& path) {
    std::vector<Graph> graphs;
    if (!inline_graph6.empty()) {
        graphs.push_back(sgraph::graph6_decode(inline_graph6));
        return graphs;
    }
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        in = &file;
    }
    std::string line;
    long long line_number = 0;
    while (std::getline(*in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(sgraph::graph6_decode(line));
        } catch (const sgraph::format_error& e) {
            throw std::runtime_error("parse error at line " + std::to_string(line_number) + ": " +
                                     e.what());
        }
    }
    return graphs;
}

void print_report_table(std::ostream& os, const BoundsReport& r) {
    const auto& s = r.summary;
    os << "graph " << r.graph6 << "  n=" << s.n << " m=" << s.m << " kappa=" << r.kappa << "\n";
    os << "  inertia (pi,nu,gamma) = (" << s.inertia.positive << "," << s.inertia.negative << ","
       << s.inertia.zero << ")\n";
    std::ostringstream nums;
    nums.precision(10);
    nums << "  s+ = " << s.s_plus << "  s- = " << s.s_minus << "  E = " << s.energy
         << "  tau = " << s.tau << "  B = " << s.b_value << "\n"
         << "  conjecture slack min(s-,s+) - (n-kappa) = " << r.conjecture_slack << "\n";
    os << nums.str();
    if (r.chi) os << "  chi = " << *r.chi << "\n";
    for (const auto& e : r.entries) {
        os << "  [" << to_string(e.status) << (e.equality ? ", equality" : "") << "] " << e.id
           << ": " << e.left << " <= " << e.right;
        if (!e.note.empty()) os << "  (" << e.note << ")";
        os << "\n";
    }
}

int cmd_verify(const std::string& input, const std::string& inline_g6, bool with_chi, double tol,
               const OutputOptions& out_opts) {
    Tolerances tols;
    if (tol > 0) tols = tols.scaled(tol);
    const std::vector<Graph> graphs = read_inputs(inline_g6, input);
    OutputSink sink(out_opts);
    std::ostream& os = sink.stream();
    const std::string fmt = out_opts.resolved();

    long long violations = 0;
    if (fmt == "csv") os << sgraph::report_csv_header(with_chi) << "\n";
    bool first = true;
    if (fmt == "json") os << "[";
    for (const Graph& g : graphs) {
        std::optional<int> chi;
        if (with_chi && g.vertex_count() > 0) chi = sgraph::chromatic_number(g).chi;
        const BoundsReport report = sgraph::full_report(g, chi, tols);
        violations += report.violation_count();
        if (fmt == "json") {
            os << (first ? "\n" : ",\n") << sgraph::report_to_json(report, 2);
        } else if (fmt == "csv") {
            os << sgraph::report_csv_row(report, with_chi) << "\n";
        } else {
            print_report_table(os, report);
        }
        first = false;
    }
    if (fmt == "json") os << "\n]\n";
    if (fmt == "table")
        os << graphs.size() << " graph(s), " << violations << " violated bound(s)\n";
    return violations > 0 ? kExitViolations : kExitClean;
}

int cmd_search(sgraph::SearchConfig cfg, const std::string& input_path, bool extremal,
               const OutputOptions& out_opts) {
    OutputSink sink(out_opts);
    std::ostream& os = sink.stream();
    const std::string fmt = out_opts.resolved();

    // Interruption stops at a batch boundary; whatever was folded is flushed
    // and the output carries a truncation marker.
    cfg.cancel = &g_interrupted;
    std::signal(SIGINT, handle_sigint);

    std::function<void(const sgraph::SearchRecord&)> record_sink;
    if (fmt == "csv") {
        os << sgraph::record_csv_header() << "\n";
        record_sink = [&](const sgraph::SearchRecord& r) { os << sgraph::record_csv_row(r) << "\n"; };
    }

    sgraph::HuntResult result;
    if (!input_path.empty()) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (input_path != "-") {
            file.open(input_path);
            if (!file) throw std::runtime_error("cannot open input file: " + input_path);
            in = &file;
        }
        result = sgraph::hunt_stream(cfg, *in, extremal, record_sink);
    } else {
        result = sgraph::hunt(cfg, extremal, record_sink);
    }

    if (fmt == "csv" && result.summary.truncated) os << "# truncated\n";
    if (fmt == "json") {
        os << sgraph::hunt_summary_to_json(result, cfg, 2) << "\n";
        if (extremal) os << sgraph::extremal_to_json(sgraph::extremal_report(result.records), 2)
                         << "\n";
    } else if (fmt == "table") {
        const auto& s = result.summary;
        if (s.truncated) os << "TRUNCATED: interrupted before the range finished\n";
        os << "searched " << s.graphs << " graphs (baseline " << s.baseline << ")\n"
           << "violations: " << s.violations << "  boundary: " << s.boundary
           << "  equality cases: " << s.equality << "\n";
        std::ostringstream nums;
        nums.precision(10);
        nums << "min slack: " << s.min_slack << " at " << s.argmin_graph6 << "\n";
        os << nums.str();
        if (cfg.check_bounds || cfg.with_chi)
            os << "bound suite violations: " << s.bound_violations << "\n";
        for (const auto& [n, g] : s.per_n)
            os << "  n=" << n << ": " << g.classes << " classes, min slack " << g.min_slack
               << " at " << g.argmin_graph6 << "\n";
        if (extremal) {
            const auto rep = sgraph::extremal_report(result.records);
            os << "smallest slacks:\n";
            for (const auto& r : rep.smallest)
                os << "  " << r.graph6 << " n=" << r.n << " m=" << r.m << " slack=" << r.slack
                   << "\n";
        }
    }
    const bool bad = result.summary.violations > 0 || result.summary.bound_violations > 0;
    if (bad) return kExitViolations;
    return result.summary.truncated ? kExitInterrupted : kExitClean;
}

Graph build_family(const std::string& name, const std::vector<std::string>& params,
                   std::string& description) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) +
                                        " parameter(s)");
    };
    auto as_int = [](const std::string& s) { return std::stoi(s); };
    auto as_int_list = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    };

    if (name == "complete") {
        need(1);
        description = "K_" + params[0];
        return sgraph::complete(as_int(params[0]));
    }
    if (name == "cycle") {
        need(1);
        description = "C_" + params[0];
        return sgraph::cycle(as_int(params[0]));
    }
    if (name == "path") {
        need(1);
        description = "P_" + params[0];
        return sgraph::path(as_int(params[0]));
    }
    if (name == "star") {
        need(1);
        description = "star on " + params[0] + " vertices";
        return sgraph::star(as_int(params[0]));
    }
    if (name == "complete-bipartite") {
        need(2);
        description = "K_{" + params[0] + "," + params[1] + "}";
        return sgraph::complete_bipartite(as_int(params[0]), as_int(params[1]));
    }
    if (name == "complete-q-partite") {
        need(1);
        description = "complete multipartite, parts " + params[0];
        return sgraph::complete_q_partite(as_int_list(params[0]));
    }
    if (name == "barbell") {
        need(1);
        description = "barbell, cliques of size " + params[0];
        return sgraph::barbell(as_int(params[0]));
    }
    if (name == "circulant") {
        need(2);
        description = "circulant on " + params[0] + " vertices, offsets " + params[1];
        return sgraph::circulant(as_int(params[0]), as_int_list(params[1]));
    }
    if (name == "line-graph") {
        need(1);
        description = "line graph of " + params[0];
        return sgraph::line_graph(sgraph::graph6_decode(params[0]));
    }
    if (name == "disjoint-union") {
        need(2);
        description = "disjoint union";
        return sgraph::disjoint_union(sgraph::graph6_decode(params[0]),
                                      sgraph::graph6_decode(params[1]));
    }
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (try: complete, cycle, path, star, complete-bipartite, complete-q-partite, barbell, "
        "circulant, line-graph, disjoint-union)");
}

int cmd_family(const std::string& name, const std::vector<std::string>& params, bool with_chi,
               double tol, const OutputOptions& out_opts) {
    Tolerances tols;
    if (tol > 0) tols = tols.scaled(tol);
    std::string description;
    const Graph g = build_family(name, params, description);
    std::optional<int> chi;
    if (with_chi && g.vertex_count() > 0) chi = sgraph::chromatic_number(g).chi;
    const BoundsReport report = sgraph::full_report(g, chi, tols);

    OutputSink sink(out_opts);
    std::ostream& os = sink.stream();
    const std::string fmt = out_opts.resolved();
    if (fmt == "json") {
        ordered_json j = ordered_json::parse(sgraph::report_to_json(report));
        j["family"] = description;
        os << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        os << sgraph::report_csv_header(with_chi) << "\n"
           << sgraph::report_csv_row(report, with_chi) << "\n";
    } else {
        os << description << "\n";
        print_report_table(os, report);
    }
    return report.violation_count() > 0 ? kExitViolations : kExitClean;
}

int cmd_quotient(const std::string& input, const std::string& inline_g6,
                 const OutputOptions& out_opts) {
    const std::vector<Graph> graphs = read_inputs(inline_g6, input);
    OutputSink sink(out_opts);
    std::ostream& os = sink.stream();
    for (const Graph& g : graphs) {
        const sgraph::CanonicalDecomposition d = sgraph::canonical_graph(g);
        ordered_json j;
        j["graph6"] = sgraph::graph6_encode(g);
        j["quotient_graph6"] = sgraph::graph6_encode(d.quotient);
        j["multiplicities"] = d.multiplicities;
        j["vertex_map"] = d.vertex_map;
        j["canonical"] = d.is_identity();
        os << j.dump(2) << "\n";
    }
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sgraph: spectral graph invariants (s+, s-, inertia, energy, B), bound\n"
                 "verification, graph families, twin quotients and exhaustive conjecture\n"
                 "search on small graphs."};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out/--tol may appear after the subcommand

    std::string format;
    std::string out_path;
    double tol = -1.0;
    app.add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--tol", tol,
                   "comparison tolerance override (rescales satisfaction/equality bands only)");

    // verify
    auto* verify = app.add_subcommand("verify", "evaluate every bound on the input graphs");
    std::string verify_input = "-";
    std::string verify_g6;
    bool verify_chi = false;
    verify->add_option("input", verify_input, "graph6 file, one graph per line ('-' = stdin)");
    verify->add_option("--graph6", verify_g6, "inline graph6 string instead of a file");
    verify->add_flag("--with-chi", verify_chi, "also evaluate chi-dependent bounds (exact chi)");
    std::string help_bounds = "Bound ids:\n";
    for (const auto& line : bound_help_lines()) help_bounds += "  " + line + "\n";
    verify->footer(help_bounds);

    // search
    auto* search = app.add_subcommand("search", "enumerate graphs and hunt for counterexamples");
    std::string n_range = "1..8";
    bool connected = false;
    int max_degree = -1;
    bool search_chi = false;
    bool search_bounds = false;
    bool extremal = false;
    int jobs = default_jobs();
    std::string search_input;
    search->add_option("--n", n_range, "vertex range A..B (or a single n)");
    search->add_flag("--connected", connected, "connected graphs only (baseline n-1)");
    search->add_option("--max-degree", max_degree, "max-degree filter (enables n up to 12 when <= 4)");
    search->add_flag("--with-chi", search_chi, "evaluate chi-dependent bounds per graph");
    search->add_flag("--bounds", search_bounds, "evaluate the full bound suite per graph");
    search->add_flag("--extremal", extremal, "keep records and print the extremal report");
    search->add_option("--jobs", jobs, "worker threads (env SGRAPH_JOBS sets the default)");
    search->add_option("--input", search_input,
                       "graph6 stream replacing the internal enumeration ('-' = stdin)");

    // family
    auto* family = app.add_subcommand("family", "construct a named family graph and report on it");
    std::string family_name;
    std::vector<std::string> family_params;
    bool family_chi = false;
    family->add_option("name", family_name, "family name")->required();
    family->add_option("params", family_params, "family parameters");
    family->add_flag("--with-chi", family_chi, "also evaluate chi-dependent bounds");

    // quotient
    auto* quotient = app.add_subcommand("quotient", "twin quotient (canonical graph) as JSON");
    std::string quotient_input = "-";
    std::string quotient_g6;
    quotient->add_option("input", quotient_input, "graph6 file ('-' = stdin)");
    quotient->add_option("--graph6", quotient_g6, "inline graph6 string instead of a file");

    CLI11_PARSE(app, argc, argv);

    OutputOptions out_opts{format, out_path};
    try {
        if (*verify) return cmd_verify(verify_input, verify_g6, verify_chi, tol, out_opts);
        if (*search) {
            sgraph::SearchConfig cfg;
            const auto [lo, hi] = parse_range(n_range);
            cfg.n_min = lo;
            cfg.n_max = hi;
            cfg.connected_only = connected;
            if (max_degree >= 0) cfg.max_degree = max_degree;
            cfg.check_bounds = search_bounds;
            cfg.with_chi = search_chi;
            cfg.jobs = jobs;
            if (tol > 0) cfg.tol = cfg.tol.scaled(tol);
            return cmd_search(cfg, search_input, extremal, out_opts);
        }
        if (*family) return cmd_family(family_name, family_params, family_chi, tol, out_opts);
        if (*quotient) return cmd_quotient(quotient_input, quotient_g6, out_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
