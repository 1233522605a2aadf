#include "sgraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sgraph/chromatic.hpp"
#include "sgraph/families.hpp"
#include "sgraph/graph6.hpp"

namespace sgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

double scale_of(double left, double right) {
    return std::max({1.0, std::abs(left), std::abs(right)});
}

// Normalized comparison "left <= right".
BoundEntry compare(std::string id, double left, double right, const Tolerances& tol) {
    BoundEntry e;
    e.id = std::move(id);
    e.left = left;
    e.right = right;
    const double s = scale_of(left, right);
    e.status = left <= right + tol.comparison * s ? BoundStatus::satisfied : BoundStatus::violated;
    e.equality = std::abs(left - right) <= tol.equality * s;
    return e;
}

BoundEntry inapplicable(std::string id, std::string why, double left = 0.0, double right = 0.0) {
    BoundEntry e;
    e.id = std::move(id);
    e.left = left;
    e.right = right;
    e.status = BoundStatus::inapplicable;
    e.note = std::move(why);
    return e;
}

// Implication entry: the conclusion "left <= right" is asserted only when
// the premise holds; otherwise inapplicable.
BoundEntry implication(std::string id, bool premise, const std::string& premise_text, double left,
                       double right, const Tolerances& tol) {
    if (!premise) return inapplicable(std::move(id), "premise not met: " + premise_text, left, right);
    BoundEntry e = compare(std::move(id), left, right, tol);
    e.note = "premise holds: " + premise_text;
    return e;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return g.vertex_count() == 0;
}

BoundEntry barbell_spectrum_check(const Graph& g, const Tolerances& tol) {
    const int k = barbell_clique_size(g);
    if (k == 0) return inapplicable("barbell_spectrum", "not a barbell");
    const BarbellPrediction pred = barbell_predicted_spectrum(k);
    const std::vector<double> ev = eigenvalues(g, tol);
    double dev = 0.0;
    for (std::size_t i = 0; i < ev.size(); ++i)
        dev = std::max(dev, std::abs(ev[i] - pred.eigenvalues[i]));
    BoundEntry e;
    e.id = "barbell_spectrum";
    e.left = dev;
    e.right = 1e-8;
    e.status = dev <= e.right ? BoundStatus::satisfied : BoundStatus::violated;
    e.note = "k = " + std::to_string(k);
    return e;
}

}  // namespace

BoundEntry hong_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol) {
    if (has_isolated_vertex(g))
        return inapplicable("hong", "requires no isolated vertices");
    const double mu1 = s.mu1();
    return compare("hong", mu1 * mu1, 2.0 * s.m - s.n + 1.0, tol);
}

BoundEntry nikiforov_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol) {
    if (s.n < 1) return inapplicable("nikiforov", "empty graph");
    const double delta = *degree_stats(g).min_degree;
    const double rhs = (delta - 1.0) / 2.0 +
                       std::sqrt(2.0 * s.m - s.n * delta + (1.0 + delta) * (1.0 + delta) / 4.0);
    return compare("nikiforov", s.mu1(), rhs, tol);
}

double conjecture_slack(const Graph& g, const SpectralSummary& s) {
    return std::min(s.s_minus, s.s_plus) - (s.n - components(g).kappa);
}

BoundEntry conjecture_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol) {
    const int kappa = components(g).kappa;
    BoundEntry e;
    e.id = "conjecture";
    e.left = s.n - kappa;
    e.right = std::min(s.s_minus, s.s_plus);
    const double slack = e.right - e.left;
    e.status = slack >= -tol.slack ? BoundStatus::satisfied : BoundStatus::violated;
    e.equality = std::abs(slack) <= tol.slack;
    e.note = kappa == 1 ? "baseline n-1" : "baseline n-kappa, kappa = " + std::to_string(kappa);
    return e;
}

BoundEntry smax_quarter_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol) {
    (void)g;
    return compare("smax_quarter", s.s_minus, s.n * s.n / 4.0, tol);
}

BoundEntry constantine_bound(const Graph& g, const SpectralSummary& s, const Tolerances& tol) {
    (void)g;
    if (s.n < 1) return inapplicable("constantine", "empty graph");
    const double mun = s.mu_n();
    return compare("constantine", mun * mun, static_cast<double>(s.n / 2) * ((s.n + 1) / 2), tol);
}

std::vector<BoundEntry> cyclomatic_window(const Graph& g, const SpectralSummary& s,
                                          const Tolerances& tol) {
    // m-c <= x <= m+c is |x - m| <= c; on forests (c = 0) this pins x = m.
    const double c = cyclomatic_number(g);
    return {compare("cyclomatic_window_sminus", std::abs(s.s_minus - s.m), c, tol),
            compare("cyclomatic_window_splus", std::abs(s.s_plus - s.m), c, tol)};
}

std::vector<BoundEntry> energy_lemmas(const Graph& g, const SpectralSummary& s,
                                      const Tolerances& tol) {
    (void)g;
    if (s.m < 1) {
        const std::string why = "requires at least one edge";
        return {inapplicable("energy_upper_sminus", why), inapplicable("energy_upper_splus", why),
                inapplicable("energy_lower_sminus", why), inapplicable("energy_lower_splus", why)};
    }
    return {compare("energy_upper_sminus", s.s_minus, s.tau * s.energy / 2.0, tol),
            compare("energy_upper_splus", s.s_plus, s.mu1() * s.energy / 2.0, tol),
            compare("energy_lower_sminus", s.energy * s.energy / (4.0 * s.inertia.negative),
                    s.s_minus, tol),
            compare("energy_lower_splus", s.energy * s.energy / (4.0 * s.inertia.positive),
                    s.s_plus, tol)};
}

std::vector<BoundEntry> sufficient_conditions(const Graph& g, const SpectralSummary& s,
                                              const Tolerances& tol) {
    (void)g;
    std::vector<BoundEntry> out;
    const double n1 = s.n - 1.0;
    const double min_s = std::min(s.s_minus, s.s_plus);

    out.push_back(implication("lemma3_sminus", s.m >= s.inertia.negative * n1,
                              "m >= nu(n-1)", n1, s.s_minus, tol));
    out.push_back(implication("lemma3_splus", s.m >= s.inertia.positive * n1,
                              "m >= pi(n-1)", n1, s.s_plus, tol));
    out.push_back(implication("improved_sminus", s.m + s.b_value >= s.inertia.negative * n1,
                              "m >= nu(n-1) - B", n1, s.s_minus, tol));
    out.push_back(implication("improved_splus", s.m + s.b_value >= s.inertia.positive * n1,
                              "m >= pi(n-1) - B", n1, s.s_plus, tol));
    out.push_back(implication("hyper_energetic", s.energy > 2.0 * n1, "E > 2(n-1)", n1, min_s, tol));
    out.push_back(implication("energy_2n3", s.energy >= 2.0 * s.n - 3.0, "E >= 2n-3", n1, min_s, tol));
    if (s.m >= 1)
        out.push_back(compare("brualdi", 2.0 * std::sqrt(static_cast<double>(s.m)), s.energy, tol));
    else
        out.push_back(inapplicable("brualdi", "requires at least one edge"));
    return out;
}

std::vector<BoundEntry> ando_lin_check(const Graph& g, const SpectralSummary& s, int chi,
                                       const Tolerances& tol) {
    (void)g;
    if (s.m < 1) {
        const std::string why = "requires at least one edge";
        return {inapplicable("ando_lin_splus", why), inapplicable("ando_lin_sminus", why),
                inapplicable("edwards_elphick", why)};
    }
    std::vector<BoundEntry> out;
    out.push_back(compare("ando_lin_splus", 1.0 + s.s_plus / s.s_minus, chi, tol));
    out.push_back(compare("ando_lin_sminus", 1.0 + s.s_minus / s.s_plus, chi, tol));
    const double denom = 2.0 * s.m - s.mu1() * s.mu1();
    if (denom <= 0.0)
        out.push_back(inapplicable("edwards_elphick", "degenerate denominator"));
    else
        out.push_back(compare("edwards_elphick", 2.0 * s.m / denom, chi, tol));
    return out;
}

BoundsReport full_report(const Graph& g, std::optional<int> chi, const Tolerances& tol) {
    BoundsReport r;
    r.graph6 = graph6_encode(g);
    r.summary = summarize(g, tol);
    r.kappa = components(g).kappa;
    r.chi = chi;
    if (g.vertex_count() == 0) return r;  // null graph: empty report
    r.conjecture_slack = conjecture_slack(g, r.summary);

    const SpectralSummary& s = r.summary;
    r.entries.push_back(hong_bound(g, s, tol));
    r.entries.push_back(nikiforov_bound(g, s, tol));
    r.entries.push_back(conjecture_bound(g, s, tol));
    r.entries.push_back(smax_quarter_bound(g, s, tol));
    r.entries.push_back(constantine_bound(g, s, tol));
    for (auto& e : cyclomatic_window(g, s, tol)) r.entries.push_back(std::move(e));
    for (auto& e : energy_lemmas(g, s, tol)) r.entries.push_back(std::move(e));
    for (auto& e : sufficient_conditions(g, s, tol)) r.entries.push_back(std::move(e));
    r.entries.push_back(compare("max_s_at_least_m", s.m, std::max(s.s_minus, s.s_plus), tol));
    r.entries.push_back(barbell_spectrum_check(g, tol));
    if (chi) {
        for (auto& e : ando_lin_check(g, s, *chi, tol)) r.entries.push_back(std::move(e));
        r.entries.push_back(brooks_check(g, *chi));
    }
    return r;
}

const std::vector<std::pair<std::string, std::string>>& bound_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"hong", "mu1^2 <= 2m - n + 1 (no isolated vertices; equality on K_n and stars)"},
        {"nikiforov", "mu1 <= (d-1)/2 + sqrt(2m - n*d + (1+d)^2/4), d = min degree"},
        {"conjecture", "min(s-, s+) >= n - kappa"},
        {"smax_quarter", "s- <= n^2/4"},
        {"constantine", "mu_n^2 <= floor(n/2)*ceil(n/2)"},
        {"cyclomatic_window_sminus", "|s- - m| <= c, c = m - n + kappa"},
        {"cyclomatic_window_splus", "|s+ - m| <= c"},
        {"energy_upper_sminus", "s- <= tau*E/2"},
        {"energy_upper_splus", "s+ <= mu1*E/2"},
        {"energy_lower_sminus", "s- >= E^2/(4 nu)"},
        {"energy_lower_splus", "s+ >= E^2/(4 pi)"},
        {"lemma3_sminus", "m >= nu(n-1) implies s- >= n-1"},
        {"lemma3_splus", "m >= pi(n-1) implies s+ >= n-1"},
        {"improved_sminus", "m >= nu(n-1) - B implies s- >= n-1"},
        {"improved_splus", "m >= pi(n-1) - B implies s+ >= n-1"},
        {"hyper_energetic", "E > 2(n-1) implies min(s-, s+) > n-1"},
        {"energy_2n3", "E >= 2n-3 implies min(s-, s+) >= n-1"},
        {"brualdi", "E >= 2 sqrt(m)"},
        {"max_s_at_least_m", "max(s-, s+) >= m"},
        {"barbell_spectrum", "barbell spectrum matches the closed-form roots (when barbell)"},
    };
    return catalog;
}

const std::vector<std::pair<std::string, std::string>>& bound_catalog_chi() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"ando_lin_splus", "chi >= 1 + s+/s-"},
        {"ando_lin_sminus", "chi >= 1 + s-/s+"},
        {"edwards_elphick", "chi >= 2m/(2m - mu1^2)"},
        {"brooks", "chi <= max degree (connected, not complete, not an odd cycle)"},
    };
    return catalog;
}

std::string report_to_json(const BoundsReport& r, int indent) {
    ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.summary.n;
    j["m"] = r.summary.m;
    j["kappa"] = r.kappa;
    j["eigenvalues"] = r.summary.eigenvalues;
    j["inertia"] = {{"pi", r.summary.inertia.positive},
                    {"nu", r.summary.inertia.negative},
                    {"gamma", r.summary.inertia.zero}};
    j["s_plus"] = r.summary.s_plus;
    j["s_minus"] = r.summary.s_minus;
    j["energy"] = r.summary.energy;
    j["tau"] = r.summary.tau;
    j["b_value"] = r.summary.b_value;
    j["conjecture_slack"] = r.conjecture_slack;
    if (r.chi) j["chi"] = *r.chi;
    ordered_json bounds = ordered_json::object();
    for (const auto& e : r.entries) {
        ordered_json je;
        je["left"] = e.left;
        je["right"] = e.right;
        je["status"] = to_string(e.status);
        je["equality"] = e.equality;
        if (!e.note.empty()) je["note"] = e.note;
        bounds[e.id] = std::move(je);
    }
    j["bounds"] = std::move(bounds);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

std::string report_csv_header(bool with_chi) {
    std::ostringstream out;
    out << "graph6,n,m,kappa,s_plus,s_minus,energy,tau,b_value,conjecture_slack";
    if (with_chi) out << ",chi";
    auto emit = [&](const std::vector<std::pair<std::string, std::string>>& ids) {
        for (const auto& [id, desc] : ids)
            out << ',' << id << "_left," << id << "_right," << id << "_status";
    };
    emit(bound_catalog());
    if (with_chi) emit(bound_catalog_chi());
    return out.str();
}

std::string report_csv_row(const BoundsReport& r, bool with_chi) {
    std::ostringstream out;
    out.precision(12);
    out << r.graph6 << ',' << r.summary.n << ',' << r.summary.m << ',' << r.kappa << ','
        << r.summary.s_plus << ',' << r.summary.s_minus << ',' << r.summary.energy << ','
        << r.summary.tau << ',' << r.summary.b_value << ',' << r.conjecture_slack;
    if (with_chi) out << ',' << (r.chi ? std::to_string(*r.chi) : std::string());
    auto emit = [&](const std::vector<std::pair<std::string, std::string>>& ids) {
        for (const auto& [id, desc] : ids) {
            const BoundEntry* found = nullptr;
            for (const auto& e : r.entries)
                if (e.id == id) {
                    found = &e;
                    break;
                }
            if (found)
                out << ',' << found->left << ',' << found->right << ',' << to_string(found->status);
            else
                out << ",,,";
        }
    };
    emit(bound_catalog());
    if (with_chi) emit(bound_catalog_chi());
    return out.str();
}

}  // namespace sgraph
