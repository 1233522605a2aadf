#include <doctest.h>

#include <cmath>

#include "sgraph/bounds.hpp"
#include "sgraph/families.hpp"
#include "sgraph/graph6.hpp"
#include "sgraph/spectral.hpp"

using namespace sgraph;

namespace {

BoundEntry find_entry(const std::vector<BoundEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return e;
    REQUIRE_MESSAGE(false, "missing entry " << id);
    return {};
}

}  // namespace

TEST_CASE("hong bound") {
    SUBCASE("equality on K6") {
        const Graph g = complete(6);
        const BoundEntry e = hong_bound(g, summarize(g));
        CHECK(e.status == BoundStatus::satisfied);
        CHECK(e.equality);
        CHECK(e.left == doctest::Approx(25.0));
        CHECK(e.right == doctest::Approx(25.0));
    }
    SUBCASE("equality on the star K_{1,7}") {
        const Graph g = star(8);
        const BoundEntry e = hong_bound(g, summarize(g));
        CHECK(e.equality);
        CHECK(e.right == doctest::Approx(7.0));
    }
    SUBCASE("strict on C5: 4 < 6") {
        const Graph g = cycle(5);
        const BoundEntry e = hong_bound(g, summarize(g));
        CHECK(e.status == BoundStatus::satisfied);
        CHECK_FALSE(e.equality);
        CHECK(e.left == doctest::Approx(4.0));
        CHECK(e.right == doctest::Approx(6.0));
    }
    SUBCASE("isolated vertex makes it inapplicable") {
        const Graph g = disjoint_union(complete(3), Graph(1));
        CHECK(hong_bound(g, summarize(g)).status == BoundStatus::inapplicable);
    }
}

TEST_CASE("nikiforov bound") {
    SUBCASE("equality on regular graphs") {
        for (const Graph& g : {complete(4), cycle(5), cycle(6), circulant(10, {1, 2, 3})}) {
            const BoundEntry e = nikiforov_bound(g, summarize(g));
            CHECK(e.status == BoundStatus::satisfied);
            CHECK(e.equality);
        }
    }
    SUBCASE("star K_{1,5}: bound is sqrt 5, equality") {
        const Graph g = star(6);
        const BoundEntry e = nikiforov_bound(g, summarize(g));
        CHECK(e.right == doctest::Approx(std::sqrt(5.0)));
        CHECK(e.equality);
    }
    SUBCASE("P4: mu1 <= sqrt 3") {
        const Graph g = path(4);
        const BoundEntry e = nikiforov_bound(g, summarize(g));
        CHECK(e.left == doctest::Approx(1.6180339887));
        CHECK(e.right == doctest::Approx(std::sqrt(3.0)));
        CHECK(e.status == BoundStatus::satisfied);
    }
}

TEST_CASE("conjecture slack") {
    CHECK(conjecture_slack(path(6), summarize(path(6))) == doctest::Approx(0.0).scale(1.0));
    CHECK(conjecture_slack(complete(7), summarize(complete(7))) == doctest::Approx(0.0).scale(1.0));
    // 2K4: kappa = 2, s- = 6 = n - kappa
    const Graph g = disjoint_union(complete(4), complete(4));
    CHECK(conjecture_slack(g, summarize(g)) == doctest::Approx(0.0).scale(1.0));
    // against the n-1 baseline it would be negative:
    CHECK(summarize(g).s_minus == doctest::Approx(6.0));
}

TEST_CASE("s- <= n^2/4 and Constantine") {
    SUBCASE("K_{3,3} attains n^2/4") {
        const Graph g = complete_bipartite(3, 3);
        const BoundEntry e = smax_quarter_bound(g, summarize(g));
        CHECK(e.equality);
        CHECK(e.left == doctest::Approx(9.0));
    }
    SUBCASE("K5") {
        const Graph g = complete(5);
        const BoundEntry e = smax_quarter_bound(g, summarize(g));
        CHECK(e.left == doctest::Approx(4.0));
        CHECK(e.right == doctest::Approx(6.25));
        CHECK(e.status == BoundStatus::satisfied);
    }
    SUBCASE("edgeless graph") {
        const Graph g(4);
        const BoundEntry e = smax_quarter_bound(g, summarize(g));
        CHECK(e.left == doctest::Approx(0.0));
        CHECK(e.status == BoundStatus::satisfied);
    }
    SUBCASE("Constantine equality on K_{2,3} and C4") {
        const Graph k23 = complete_bipartite(2, 3);
        const BoundEntry e = constantine_bound(k23, summarize(k23));
        CHECK(e.left == doctest::Approx(6.0));  // mu_n = -sqrt 6
        CHECK(e.right == doctest::Approx(6.0));
        CHECK(e.equality);

        const Graph c4 = cycle(4);
        const BoundEntry e2 = constantine_bound(c4, summarize(c4));
        CHECK(e2.left == doctest::Approx(4.0));
        CHECK(e2.equality);
    }
    SUBCASE("K7: 1 <= 12") {
        const Graph g = complete(7);
        const BoundEntry e = constantine_bound(g, summarize(g));
        CHECK(e.left == doctest::Approx(1.0));
        CHECK(e.right == doctest::Approx(12.0));
    }
}

TEST_CASE("cyclomatic window") {
    SUBCASE("forests collapse to equality with m") {
        const Graph t(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
        const auto entries = cyclomatic_window(t, summarize(t));
        for (const auto& e : entries) {
            CHECK(e.right == doctest::Approx(0.0));
            CHECK(e.status == BoundStatus::satisfied);
        }
    }
    SUBCASE("C5: window [4, 6] holds s- = 5.236") {
        const auto entries = cyclomatic_window(cycle(5), summarize(cycle(5)));
        const BoundEntry& sm = find_entry(entries, "cyclomatic_window_sminus");
        CHECK(sm.left == doctest::Approx(5.2360679775 - 5.0));
        CHECK(sm.right == doctest::Approx(1.0));
        CHECK(sm.status == BoundStatus::satisfied);
    }
    SUBCASE("K4 sits on the lower edge: s- = 3 = m - c") {
        const auto entries = cyclomatic_window(complete(4), summarize(complete(4)));
        const BoundEntry& sm = find_entry(entries, "cyclomatic_window_sminus");
        CHECK(sm.left == doctest::Approx(3.0));  // |3 - 6|
        CHECK(sm.right == doctest::Approx(3.0));
        CHECK(sm.status == BoundStatus::satisfied);
        CHECK(sm.equality);
    }
}

TEST_CASE("energy lemmas") {
    SUBCASE("star K_{1,4}: s- = 4 = tau E / 2 exactly") {
        const Graph g = star(5);
        const auto entries = energy_lemmas(g, summarize(g));
        const BoundEntry& up = find_entry(entries, "energy_upper_sminus");
        CHECK(up.left == doctest::Approx(4.0));
        CHECK(up.right == doctest::Approx(4.0));
        CHECK(up.equality);
    }
    SUBCASE("K_n: E^2/(4 nu) = n - 1 = s- exactly") {
        for (int n : {3, 5, 8}) {
            const Graph g = complete(n);
            const auto entries = energy_lemmas(g, summarize(g));
            const BoundEntry& lo = find_entry(entries, "energy_lower_sminus");
            CHECK(lo.left == doctest::Approx(n - 1.0));
            CHECK(lo.right == doctest::Approx(n - 1.0));
            CHECK(lo.equality);
        }
    }
    SUBCASE("C5: s- sides tight (equal negative eigenvalues), s+ sides strict") {
        const auto entries = energy_lemmas(cycle(5), summarize(cycle(5)));
        CHECK(find_entry(entries, "energy_upper_sminus").equality);
        CHECK(find_entry(entries, "energy_lower_sminus").equality);
        CHECK_FALSE(find_entry(entries, "energy_upper_splus").equality);
        CHECK_FALSE(find_entry(entries, "energy_lower_splus").equality);
        for (const auto& e : entries) CHECK(e.status == BoundStatus::satisfied);
    }
    SUBCASE("edgeless graphs are inapplicable") {
        const Graph g(3);
        for (const auto& e : energy_lemmas(g, summarize(g)))
            CHECK(e.status == BoundStatus::inapplicable);
    }
}

TEST_CASE("sufficient conditions") {
    SUBCASE("K_{2,2,2}: pi = 1, lemma 3 dual fires and holds") {
        const Graph g = complete_q_partite({2, 2, 2});
        const SpectralSummary s = summarize(g);
        CHECK(s.inertia.positive == 1);
        CHECK(s.m == 12);
        const auto entries = sufficient_conditions(g, s);
        const BoundEntry& e = find_entry(entries, "lemma3_splus");
        CHECK(e.status == BoundStatus::satisfied);  // premise m >= pi(n-1) = 5 holds
        CHECK(e.right >= 5.0 - 1e-9);
    }
    SUBCASE("barbell k=5: pi = 2, m = 21 >= 2(n-1) = 18") {
        const Graph g = barbell(5);
        const SpectralSummary s = summarize(g);
        CHECK(s.inertia.positive == 2);
        CHECK(s.m == 21);
        const BoundEntry& e = find_entry(sufficient_conditions(g, s), "lemma3_splus");
        CHECK(e.status == BoundStatus::satisfied);
    }
    SUBCASE("tree: lemma3_sminus premise fails for n >= 4") {
        const Graph g = path(6);  // m = 5 < nu(n-1) = 15
        const BoundEntry& e = find_entry(sufficient_conditions(g, summarize(g)), "lemma3_sminus");
        CHECK(e.status == BoundStatus::inapplicable);
    }
    SUBCASE("hyper-energetic witness: circulant(10, {1,2,3})") {
        const Graph g = circulant(10, {1, 2, 3});
        const SpectralSummary s = summarize(g);
        CHECK(s.energy > 2.0 * (s.n - 1));
        const BoundEntry& e = find_entry(sufficient_conditions(g, s), "hyper_energetic");
        CHECK(e.status == BoundStatus::satisfied);
        // conclusion strict: min(s-, s+) > n - 1
        CHECK(std::min(s.s_minus, s.s_plus) > s.n - 1.0);
    }
}

TEST_CASE("ando-lin and edwards-elphick") {
    SUBCASE("K5: 1 + s+/s- = 5 = chi, equality") {
        const Graph g = complete(5);
        const auto entries = ando_lin_check(g, summarize(g), 5);
        const BoundEntry& e = find_entry(entries, "ando_lin_splus");
        CHECK(e.left == doctest::Approx(5.0));
        CHECK(e.equality);
        const BoundEntry& ee = find_entry(entries, "edwards_elphick");
        CHECK(ee.left == doctest::Approx(20.0 / (20.0 - 16.0)));
        CHECK(ee.equality);
    }
    SUBCASE("C5: chi = 3 >= 1 + s+/s- = 1.9098...") {
        const auto entries = ando_lin_check(cycle(5), summarize(cycle(5)), 3);
        const BoundEntry& e = find_entry(entries, "ando_lin_splus");
        CHECK(e.left == doctest::Approx(1.0 + 4.7639320225 / 5.2360679775));
        CHECK(e.status == BoundStatus::satisfied);
    }
    SUBCASE("bipartite with an edge: 1 + s+/s- = 2 = chi exactly") {
        for (const Graph& g : {path(5), complete_bipartite(3, 4), star(6)}) {
            const BoundEntry& e = find_entry(ando_lin_check(g, summarize(g), 2), "ando_lin_splus");
            CHECK(e.equality);
            CHECK(e.left == doctest::Approx(2.0));
        }
    }
    SUBCASE("edgeless is inapplicable") {
        const Graph g(3);
        for (const auto& e : ando_lin_check(g, summarize(g), 1))
            CHECK(e.status == BoundStatus::inapplicable);
    }
}

TEST_CASE("full report") {
    SUBCASE("K4: hong equality true") {
        const BoundsReport r = full_report(complete(4));
        bool found = false;
        for (const auto& e : r.entries)
            if (e.id == "hong") {
                found = true;
                CHECK(e.equality);  // 9 = 2*6 - 4 + 1
                CHECK(e.status == BoundStatus::satisfied);
            }
        CHECK(found);
        CHECK(r.violation_count() == 0);
    }
    SUBCASE("P3: everything applicable satisfied, slack 0") {
        const BoundsReport r = full_report(path(3));
        CHECK(r.violation_count() == 0);
        CHECK(r.conjecture_slack == doctest::Approx(0.0).scale(1.0));
    }
    SUBCASE("null graph: empty report") {
        const BoundsReport r = full_report(Graph());
        CHECK(r.entries.empty());
        CHECK(r.summary.n == 0);
    }
    SUBCASE("barbell closed-form entry when the input is a barbell") {
        const BoundsReport r = full_report(barbell(4));
        bool found = false;
        for (const auto& e : r.entries)
            if (e.id == "barbell_spectrum") {
                found = true;
                CHECK(e.status == BoundStatus::satisfied);
                CHECK(e.left <= 1e-8);
            }
        CHECK(found);
    }
    SUBCASE("every catalog id appears exactly once") {
        const BoundsReport r = full_report(cycle(6), 2);
        for (const auto& [id, desc] : bound_catalog()) {
            int count = 0;
            for (const auto& e : r.entries) count += e.id == id ? 1 : 0;
            CHECK_MESSAGE(count == 1, id);
        }
        for (const auto& [id, desc] : bound_catalog_chi()) {
            int count = 0;
            for (const auto& e : r.entries) count += e.id == id ? 1 : 0;
            CHECK_MESSAGE(count == 1, id);
        }
    }
}

TEST_CASE("report serialization") {
    const BoundsReport r = full_report(cycle(5), 3);
    SUBCASE("json") {
        const std::string j = report_to_json(r);
        CHECK(j.find("\"graph6\":\"Dhc\"") != std::string::npos);
        CHECK(j.find("\"s_minus\":5.23606797") != std::string::npos);
        CHECK(j.find("\"chi\":3") != std::string::npos);
        CHECK(j.find("\"hong\"") != std::string::npos);
    }
    SUBCASE("csv header matches row shape") {
        const std::string header = report_csv_header(true);
        const std::string row = report_csv_row(r, true);
        CHECK(std::count(header.begin(), header.end(), ',') ==
              std::count(row.begin(), row.end(), ','));
        CHECK(row.substr(0, 4) == "Dhc,");
    }
}

TEST_CASE("tolerance override rescales classification bands only") {
    const Tolerances loose = Tolerances{}.scaled(1e-2);
    CHECK(loose.comparison == doctest::Approx(1e-2));
    CHECK(loose.equality == doctest::Approx(1e-1));
    CHECK(loose.slack == doctest::Approx(1e-1));
    CHECK(loose.residual == Tolerances{}.residual);
    // With an absurdly loose band, a strict bound reads as "equality".
    const Graph g = cycle(5);
    const BoundEntry strict = hong_bound(g, summarize(g));
    const BoundEntry banded = hong_bound(g, summarize(g), Tolerances{}.scaled(1.0));
    CHECK_FALSE(strict.equality);
    CHECK(banded.equality);
}
