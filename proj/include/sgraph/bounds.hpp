// bounds.hpp — evaluation of every bound, identity and sufficient condition
// against one graph's spectral summary.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgraph/bound_entry.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/spectral.hpp"

namespace sgraph {

struct BoundsReport {
    std::string graph6;
    SpectralSummary summary;
    int kappa = 0;
    double conjecture_slack = 0.0;  // min(s-, s+) - (n - kappa)
    std::optional<int> chi;
    std::vector<BoundEntry> entries;

    int violation_count() const {
        int c = 0;
        for (const auto& e : entries) c += e.violated() ? 1 : 0;
        return c;
    }
};

// mu_1^2 <= 2m - n + 1; needs no isolated vertices. Equality exactly on
// complete graphs and stars.
BoundEntry hong_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol = {});

// mu_1 <= (delta-1)/2 + sqrt(2m - n*delta + (1+delta)^2/4); exact for
// regular graphs.
BoundEntry nikiforov_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol = {});

// min(s-, s+) - (n - kappa); negative means counterexample candidate.
double conjecture_slack(const Graph& g, const SpectralSummary& s);

BoundEntry conjecture_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol = {});

// s- <= n^2/4.
BoundEntry smax_quarter_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol = {});

// mu_n^2 <= floor(n/2)*ceil(n/2).
BoundEntry constantine_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol = {});

// |s- - m| <= c and |s+ - m| <= c (the window m-c .. m+c); collapses to
// equality with m on forests.
std::vector<BoundEntry> cyclomatic_window(const Graph& g, const SpectralSummary& s,
                                          const Tolerances& tol = {});

// s- <= tau*E/2, s+ <= mu_1*E/2, s- >= E^2/(4 nu), s+ >= E^2/(4 pi).
std::vector<BoundEntry> energy_lemmas(const Graph& g, const SpectralSummary& s,
                                      const Tolerances& tol = {});

// Implications: each premise evaluated, conclusion asserted only when the
// premise holds (inapplicable otherwise). Includes Brualdi's E >= 2 sqrt(m).
std::vector<BoundEntry> sufficient_conditions(const Graph& g, const SpectralSummary& s,
                                              const Tolerances& tol = {});

// 1 + s+/s- <= chi, 1 + s-/s+ <= chi and 2m/(2m - mu_1^2) <= chi.
std::vector<BoundEntry> ando_lin_check(const Graph& g, const SpectralSummary& s, int chi,
                                       const Tolerances& tol = {});

// Every bound above in fixed order, plus max(s-,s+) >= m, the barbell
// closed-form spectrum check when the graph is a barbell, and the
// chi-dependent entries (including Brooks) when chi is supplied.
BoundsReport full_report(const Graph& g, std::optional<int> chi = std::nullopt,
                         const Tolerances& tol = {});

// Bound ids in report order, with one-line descriptions (CLI help and CSV
// column layout derive from this).
const std::vector<std::pair<std::string, std::string>>& bound_catalog();
const std::vector<std::pair<std::string, std::string>>& bound_catalog_chi();

// Serialization. JSON is one object per report; CSV is one row per report
// with a left/right/status column triple per bound.
std::string report_to_json(const BoundsReport& r, int indent = -1);
std::string report_csv_header(bool with_chi);
std::string report_csv_row(const BoundsReport& r, bool with_chi);

}  // namespace sgraph
