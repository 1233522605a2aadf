// enumerate.hpp — isomorphism-free enumeration of small graphs and the
// conjecture counterexample hunt.
#pragma once

#include <atomic>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgraph/bounds.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/spectral.hpp"

namespace sgraph {

// Hard caps on the enumeration range (resource_error beyond them, raised
// before any work starts).
inline constexpr int kEnumerationCap = 10;
inline constexpr int kFilteredEnumerationCap = 12;  // with max_degree <= 4

struct SearchConfig {
    int n_min = 1;
    int n_max = 8;
    bool connected_only = false;
    std::optional<int> max_degree;
    bool check_bounds = false;  // run the full bound suite per graph
    bool with_chi = false;      // chi-dependent checks (exact coloring per graph)
    int jobs = 1;
    Tolerances tol;
    // Cooperative cancellation (e.g. SIGINT): checked between batches and
    // level extensions; a cancelled hunt folds what finished and marks the
    // summary truncated.
    const std::atomic<bool>* cancel = nullptr;
};

struct SearchRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int kappa = 1;
    int c = 0;  // cyclomatic number
    double s_plus = 0.0;
    double s_minus = 0.0;
    double slack = 0.0;              // min(s-, s+) - (n - kappa)
    std::vector<std::string> flags;  // sufficient conditions whose premise fired
};

// One representative per isomorphism class with n_min <= n <= n_max matching
// the filters, by vertex augmentation with canonical-form rejection. Emission
// order is deterministic: n ascending, canonical key ascending.
void enumerate_graphs(const SearchConfig& cfg, const std::function<void(const Graph&)>& emit);

struct PerGroupStats {
    long long classes = 0;
    double min_slack = 0.0;
    std::string argmin_graph6;
};

struct HuntSummary {
    long long graphs = 0;
    long long violations = 0;        // slack < -tol (a finding, not an error)
    long long boundary = 0;          // slack in (-tol, 0): reported, not violations
    long long equality = 0;          // |slack| <= tol (trees, K_n, ...)
    long long bound_violations = 0;  // violated entries across the bound suite
    double min_slack = 0.0;
    std::string argmin_graph6;
    std::map<int, PerGroupStats> per_n;
    std::map<int, PerGroupStats> per_c;  // keyed by cyclomatic number
    std::string baseline;                // "n-1" (connected mode) or "n-kappa"
    bool truncated = false;              // cancelled before the range finished
};

struct HuntResult {
    HuntSummary summary;
    std::vector<SearchRecord> violations;
    std::vector<std::pair<std::string, std::string>> bound_violations;  // (graph6, bound id)
    std::vector<SearchRecord> records;  // populated when keep_records
};

// Full hunt over the internal enumeration. Per-graph work is sharded over
// cfg.jobs workers in fixed blocks; results fold in enumeration order, so
// output is deterministic for a given config. sink (when given) streams
// records in that order.
HuntResult hunt(const SearchConfig& cfg, bool keep_records = false,
                const std::function<void(const SearchRecord&)>& sink = nullptr);

// Same, but graphs come from a graph6 stream (one per line) instead of the
// enumerator; filters still apply. Decode errors carry the line number.
HuntResult hunt_stream(const SearchConfig& cfg, std::istream& in, bool keep_records = false,
                       const std::function<void(const SearchRecord&)>& sink = nullptr);

struct ExtremalReport {
    int bins = 0;
    double bin_width = 0.0;
    double lo = 0.0;  // left edge of the first bin
    std::vector<long long> histogram;
    std::vector<SearchRecord> smallest;  // up to 20, ascending slack
    std::map<int, PerGroupStats> per_n;
    std::map<int, PerGroupStats> per_c;
};

ExtremalReport extremal_report(const std::vector<SearchRecord>& records, int bins = 20);

std::string record_csv_header();
std::string record_csv_row(const SearchRecord& r);
std::string hunt_summary_to_json(const HuntResult& result, const SearchConfig& cfg,
                                 int indent = -1);
std::string extremal_to_json(const ExtremalReport& report, int indent = -1);

}  // namespace sgraph
