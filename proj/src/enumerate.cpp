#include "sgraph/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sgraph/canonical_form.hpp"
#include "sgraph/chromatic.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/graph6.hpp"

namespace sgraph {

namespace {

using ordered_json = nlohmann::ordered_json;
using Key = unsigned __int128;  // upper-triangle bits; n(n-1)/2 <= 66 at the cap

Key upper_triangle_key(const Graph& g, const std::vector<int>& perm) {
    Key key = 0;
    const int n = g.vertex_count();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            key = (key << 1) |
                  (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])
                       ? 1
                       : 0);
    return key;
}

Key canonical_key(const Graph& g) { return upper_triangle_key(g, canonical_labeling(g)); }

Graph graph_from_key(int n, Key key) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 1; --j)
        for (int i = j - 1; i >= 0; --i) {
            if (key & 1) {
                rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                rows[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }
            key >>= 1;
        }
    return Graph::from_rows(std::move(rows));
}

void check_caps(const SearchConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("search range must satisfy 1 <= n_min <= n_max");
    const bool filtered = cfg.max_degree && *cfg.max_degree <= 4;
    const int cap = filtered ? kFilteredEnumerationCap : kEnumerationCap;
    if (cfg.n_max > cap)
        throw resource_error("enumeration to n = " + std::to_string(cfg.n_max) +
                             " exceeds the cap of " + std::to_string(cap) +
                             (filtered ? " (max-degree <= 4)" : " (use --max-degree <= 4 for 11..12)"));
}

int thread_count(const SearchConfig& cfg) {
    return std::max(1, std::min(cfg.jobs, 64));
}

// Runs fn(worker, first, last) over [0, total) split into one contiguous
// block per worker. Workers own disjoint shards; the caller folds results
// by index, so the outcome does not depend on scheduling.
void parallel_blocks(long long total, int jobs,
                     const std::function<void(int, long long, long long)>& fn) {
    if (total <= 0) return;
    const int workers = static_cast<int>(std::min<long long>(jobs, total));
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const long long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long long first = w * chunk;
        const long long last = std::min(total, first + chunk);
        if (first >= last) break;
        threads.emplace_back([=, &fn] { fn(w, first, last); });
    }
    for (auto& t : threads) t.join();
}

void sorted_merge_unique(std::vector<Key>& into, std::vector<Key>& batch) {
    std::sort(batch.begin(), batch.end());
    batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
    std::vector<Key> merged;
    merged.reserve(into.size() + batch.size());
    std::merge(into.begin(), into.end(), batch.begin(), batch.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    into = std::move(merged);
    batch.clear();
}

std::vector<Key> extend_level(const std::vector<Key>& level, int k,
                              const std::optional<int>& max_degree, int jobs) {
    // Candidate keys repeat heavily (one per labeled extension of every
    // parent), so each worker dedups its own shard in bounded batches.
    constexpr std::size_t kFlushAt = 1 << 22;
    std::vector<std::vector<Key>> parts(static_cast<std::size_t>(std::max(1, jobs)));
    parallel_blocks(static_cast<long long>(level.size()), jobs,
                    [&](int worker, long long first, long long last) {
        std::vector<Key> deduped, local;
        local.reserve(1 << 16);
        for (long long idx = first; idx < last; ++idx) {
            const Graph parent = graph_from_key(k, level[static_cast<std::size_t>(idx)]);
            std::vector<int> degrees(static_cast<std::size_t>(k));
            for (int v = 0; v < k; ++v) degrees[static_cast<std::size_t>(v)] = parent.degree(v);

            const unsigned long long mask_end = 1ull << k;
            for (unsigned long long mask = 0; mask < mask_end; ++mask) {
                if (max_degree) {
                    if (std::popcount(mask) > *max_degree) continue;
                    bool ok = true;
                    for (int v = 0; v < k && ok; ++v)
                        if ((mask >> v) & 1ull)
                            ok = degrees[static_cast<std::size_t>(v)] + 1 <= *max_degree;
                    if (!ok) continue;
                }
                std::vector<VertexSet> rows(static_cast<std::size_t>(k) + 1);
                for (int v = 0; v < k; ++v) rows[static_cast<std::size_t>(v)] = parent.neighbors(v);
                for (int v = 0; v < k; ++v)
                    if ((mask >> v) & 1ull) {
                        rows[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(k));
                        rows[static_cast<std::size_t>(k)].set(static_cast<std::size_t>(v));
                    }
                local.push_back(canonical_key(Graph::from_rows(std::move(rows))));
                if (local.size() >= kFlushAt) sorted_merge_unique(deduped, local);
            }
        }
        sorted_merge_unique(deduped, local);
        parts[static_cast<std::size_t>(worker)] = std::move(deduped);
    });

    std::vector<Key> next;
    for (auto& p : parts) {
        sorted_merge_unique(next, p);
        p.clear();
        p.shrink_to_fit();
    }
    return next;
}

}  // namespace

namespace {

bool cancelled(const SearchConfig& cfg) {
    return cfg.cancel && cfg.cancel->load(std::memory_order_relaxed);
}

}  // namespace

void enumerate_graphs(const SearchConfig& cfg, const std::function<void(const Graph&)>& emit) {
    check_caps(cfg);
    std::vector<Key> level = {0};  // the one graph on a single vertex
    for (int k = 1; k <= cfg.n_max; ++k) {
        if (cancelled(cfg)) return;
        if (k >= cfg.n_min) {
            for (const Key key : level) {
                if (cancelled(cfg)) return;
                Graph g = graph_from_key(k, key);
                if (cfg.connected_only && !is_connected(g)) continue;
                emit(g);
            }
        }
        if (k < cfg.n_max) level = extend_level(level, k, cfg.max_degree, thread_count(cfg));
    }
}

namespace {

struct GraphWork {
    SearchRecord record;
    int bound_violation_count = 0;
    std::vector<std::string> violated_ids;
};

GraphWork process_graph(const Graph& g, const SearchConfig& cfg) {
    GraphWork w;
    const SpectralSummary s = summarize(g, cfg.tol);
    w.record.graph6 = graph6_encode(g);
    w.record.n = s.n;
    w.record.m = s.m;
    w.record.kappa = components(g).kappa;
    w.record.c = s.m - s.n + w.record.kappa;
    w.record.s_plus = s.s_plus;
    w.record.s_minus = s.s_minus;
    w.record.slack = std::min(s.s_minus, s.s_plus) - (s.n - w.record.kappa);

    // Sufficient conditions whose premise fires for this graph.
    const double n1 = s.n - 1.0;
    if (s.m >= s.inertia.negative * n1) w.record.flags.push_back("lemma3_sminus");
    if (s.m >= s.inertia.positive * n1) w.record.flags.push_back("lemma3_splus");
    if (s.m + s.b_value >= s.inertia.negative * n1) w.record.flags.push_back("improved_sminus");
    if (s.m + s.b_value >= s.inertia.positive * n1) w.record.flags.push_back("improved_splus");
    if (s.energy > 2.0 * n1) w.record.flags.push_back("hyper_energetic");
    if (s.energy >= 2.0 * s.n - 3.0) w.record.flags.push_back("energy_2n3");

    if (cfg.check_bounds || cfg.with_chi) {
        std::optional<int> chi;
        if (cfg.with_chi) chi = chromatic_number(g).chi;
        const BoundsReport report = full_report(g, chi, cfg.tol);
        for (const auto& e : report.entries)
            if (e.violated()) {
                ++w.bound_violation_count;
                w.violated_ids.push_back(e.id);
            }
    }
    return w;
}

class HuntFolder {
public:
    HuntFolder(const SearchConfig& cfg, bool keep_records,
               const std::function<void(const SearchRecord&)>& sink)
        : cfg_(cfg), keep_records_(keep_records), sink_(sink) {
        result_.summary.baseline = cfg.connected_only ? "n-1" : "n-kappa";
        result_.summary.min_slack = std::numeric_limits<double>::infinity();
    }

    void fold(GraphWork&& w) {
        HuntSummary& sum = result_.summary;
        ++sum.graphs;
        const double slack = w.record.slack;
        if (slack < sum.min_slack) {
            sum.min_slack = slack;
            sum.argmin_graph6 = w.record.graph6;
        }
        if (slack < -cfg_.tol.slack)
            ++sum.violations;
        else if (slack < 0.0)
            ++sum.boundary;
        if (std::abs(slack) <= cfg_.tol.slack) ++sum.equality;
        update_group(sum.per_n[w.record.n], w.record);
        update_group(sum.per_c[w.record.c], w.record);
        sum.bound_violations += w.bound_violation_count;
        for (const auto& id : w.violated_ids)
            result_.bound_violations.emplace_back(w.record.graph6, id);
        if (slack < -cfg_.tol.slack) result_.violations.push_back(w.record);
        if (sink_) sink_(w.record);
        if (keep_records_) result_.records.push_back(std::move(w.record));
    }

    HuntResult take() {
        if (result_.summary.graphs == 0) result_.summary.min_slack = 0.0;
        return std::move(result_);
    }

private:
    static void update_group(PerGroupStats& g, const SearchRecord& r) {
        if (g.classes == 0 || r.slack < g.min_slack) {
            g.min_slack = r.slack;
            g.argmin_graph6 = r.graph6;
        }
        ++g.classes;
    }

    const SearchConfig& cfg_;
    bool keep_records_;
    std::function<void(const SearchRecord&)> sink_;
    HuntResult result_;
};

// Drains `batch` through process_graph on cfg.jobs workers, folding in order.
void process_batch(std::vector<Graph>& batch, const SearchConfig& cfg, HuntFolder& folder) {
    if (batch.empty()) return;
    std::vector<GraphWork> slots(batch.size());
    parallel_blocks(static_cast<long long>(batch.size()), thread_count(cfg),
                    [&](int, long long first, long long last) {
                        for (long long i = first; i < last; ++i)
                            slots[static_cast<std::size_t>(i)] =
                                process_graph(batch[static_cast<std::size_t>(i)], cfg);
                    });
    for (auto& w : slots) folder.fold(std::move(w));
    batch.clear();
}

constexpr std::size_t kBatchSize = 4096;

}  // namespace

HuntResult hunt(const SearchConfig& cfg, bool keep_records,
                const std::function<void(const SearchRecord&)>& sink) {
    HuntFolder folder(cfg, keep_records, sink);
    std::vector<Graph> batch;
    batch.reserve(kBatchSize);
    enumerate_graphs(cfg, [&](const Graph& g) {
        batch.push_back(g);
        if (batch.size() >= kBatchSize) process_batch(batch, cfg, folder);
    });
    // On cancellation the in-flight batch still flushes, so every record
    // handed to the sink is complete and the summary covers exactly them.
    process_batch(batch, cfg, folder);
    HuntResult result = folder.take();
    result.summary.truncated = cancelled(cfg);
    return result;
}

HuntResult hunt_stream(const SearchConfig& cfg, std::istream& in, bool keep_records,
                       const std::function<void(const SearchRecord&)>& sink) {
    HuntFolder folder(cfg, keep_records, sink);
    std::vector<Graph> batch;
    batch.reserve(kBatchSize);
    std::string line;
    long long line_number = 0;
    while (!cancelled(cfg) && std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const format_error& e) {
            throw format_error("line " + std::to_string(line_number) + ": " + e.what(), e.offset());
        }
        if (g.vertex_count() < cfg.n_min || g.vertex_count() > cfg.n_max) continue;
        if (cfg.connected_only && !is_connected(g)) continue;
        if (cfg.max_degree) {
            const DegreeStats d = degree_stats(g);
            if (d.max_degree.value_or(0) > *cfg.max_degree) continue;
        }
        batch.push_back(std::move(g));
        if (batch.size() >= kBatchSize) process_batch(batch, cfg, folder);
    }
    process_batch(batch, cfg, folder);
    HuntResult result = folder.take();
    result.summary.truncated = cancelled(cfg);
    return result;
}

ExtremalReport extremal_report(const std::vector<SearchRecord>& records, int bins) {
    ExtremalReport rep;
    if (records.empty() || bins < 1) return rep;
    rep.bins = bins;

    double lo = records.front().slack, hi = records.front().slack;
    for (const auto& r : records) {
        lo = std::min(lo, r.slack);
        hi = std::max(hi, r.slack);
    }
    rep.lo = lo;
    rep.bin_width = (hi - lo) / bins;
    rep.histogram.assign(static_cast<std::size_t>(bins), 0);
    for (const auto& r : records) {
        int b = rep.bin_width > 0.0 ? static_cast<int>((r.slack - lo) / rep.bin_width) : 0;
        b = std::clamp(b, 0, bins - 1);
        ++rep.histogram[static_cast<std::size_t>(b)];
    }

    std::vector<const SearchRecord*> by_slack;
    by_slack.reserve(records.size());
    for (const auto& r : records) by_slack.push_back(&r);
    std::stable_sort(by_slack.begin(), by_slack.end(), [](const SearchRecord* a, const SearchRecord* b) {
        return a->slack != b->slack ? a->slack < b->slack : a->graph6 < b->graph6;
    });
    const std::size_t take = std::min<std::size_t>(20, by_slack.size());
    for (std::size_t i = 0; i < take; ++i) rep.smallest.push_back(*by_slack[i]);

    for (const auto& r : records) {
        auto update = [&](PerGroupStats& g) {
            if (g.classes == 0 || r.slack < g.min_slack) {
                g.min_slack = r.slack;
                g.argmin_graph6 = r.graph6;
            }
            ++g.classes;
        };
        update(rep.per_n[r.n]);
        update(rep.per_c[r.c]);
    }
    return rep;
}

std::string record_csv_header() { return "graph6,n,m,s_plus,s_minus,slack,flags"; }

std::string record_csv_row(const SearchRecord& r) {
    std::ostringstream out;
    out.precision(12);
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.s_plus << ',' << r.s_minus << ','
        << r.slack << ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
        if (i) out << ';';
        out << r.flags[i];
    }
    return out.str();
}

namespace {

ordered_json group_stats_json(const std::map<int, PerGroupStats>& groups) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : groups)
        j[std::to_string(k)] = {{"classes", v.classes},
                                {"min_slack", v.min_slack},
                                {"argmin_graph6", v.argmin_graph6}};
    return j;
}

}  // namespace

std::string hunt_summary_to_json(const HuntResult& result, const SearchConfig& cfg, int indent) {
    const HuntSummary& s = result.summary;
    ordered_json j;
    j["config"] = {{"n_min", cfg.n_min},
                   {"n_max", cfg.n_max},
                   {"connected", cfg.connected_only},
                   {"max_degree", cfg.max_degree ? ordered_json(*cfg.max_degree) : ordered_json()},
                   {"bounds", cfg.check_bounds},
                   {"with_chi", cfg.with_chi},
                   {"baseline", s.baseline}};
    j["graphs"] = s.graphs;
    j["violations"] = s.violations;
    j["boundary"] = s.boundary;
    j["equality"] = s.equality;
    j["bound_violations"] = s.bound_violations;
    j["min_slack"] = s.min_slack;
    j["argmin_graph6"] = s.argmin_graph6;
    j["truncated"] = s.truncated;
    j["per_n"] = group_stats_json(s.per_n);
    j["per_c"] = group_stats_json(s.per_c);
    ordered_json viol = ordered_json::array();
    for (const auto& r : result.violations)
        viol.push_back({{"graph6", r.graph6}, {"slack", r.slack}});
    j["violation_list"] = std::move(viol);
    ordered_json bviol = ordered_json::array();
    for (const auto& [g6, id] : result.bound_violations)
        bviol.push_back({{"graph6", g6}, {"bound", id}});
    j["bound_violation_list"] = std::move(bviol);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

std::string extremal_to_json(const ExtremalReport& report, int indent) {
    ordered_json j;
    j["bins"] = report.bins;
    j["bin_width"] = report.bin_width;
    j["lo"] = report.lo;
    j["histogram"] = report.histogram;
    ordered_json smallest = ordered_json::array();
    for (const auto& r : report.smallest)
        smallest.push_back({{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"slack", r.slack}});
    j["smallest"] = std::move(smallest);
    j["per_n"] = group_stats_json(report.per_n);
    j["per_c"] = group_stats_json(report.per_c);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace sgraph
