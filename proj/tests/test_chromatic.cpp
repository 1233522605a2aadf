#include <doctest.h>

#include "sgraph/chromatic.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/families.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/spectral.hpp"
#include "test_util.hpp"

#include <random>

using namespace sgraph;

namespace {

Graph petersen() {
    // outer C5 on 0..4, inner pentagram on 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, e);
}

bool proper(const Graph& g, const std::vector<int>& witness, int chi) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (witness[static_cast<std::size_t>(v)] < 0 || witness[static_cast<std::size_t>(v)] >= chi)
            return false;
    for (const auto& [u, v] : g.edges())
        if (witness[static_cast<std::size_t>(u)] == witness[static_cast<std::size_t>(v)])
            return false;
    return true;
}

}  // namespace

TEST_CASE("chromatic number on known graphs") {
    for (int n : {1, 2, 5, 8}) CHECK(chromatic_number(complete(n)).chi == n);
    CHECK(chromatic_number(cycle(5)).chi == 3);
    CHECK(chromatic_number(cycle(6)).chi == 2);
    CHECK(chromatic_number(cycle(9)).chi == 3);
    CHECK(chromatic_number(complete_bipartite(3, 7)).chi == 2);
    CHECK(chromatic_number(path(9)).chi == 2);
    CHECK(chromatic_number(Graph(5)).chi == 1);
    CHECK(chromatic_number(Graph()).chi == 0);
    CHECK(chromatic_number(petersen()).chi == 3);
    CHECK(chromatic_number(complete_q_partite({2, 2, 2, 2})).chi == 4);
}

TEST_CASE("witness is a proper coloring with exactly chi colors") {
    std::mt19937 rng(3);
    for (int t = 0; t < 60; ++t) {
        const Graph g = testutil::random_graph(rng, 1 + t % 9);
        const ColoringResult r = chromatic_number(g);
        CHECK(proper(g, r.witness, r.chi));
        // exactly chi colors used
        std::vector<bool> used(static_cast<std::size_t>(r.chi), false);
        for (int c : r.witness) used[static_cast<std::size_t>(c)] = true;
        for (bool u : used) CHECK(u);
    }
}

TEST_CASE("determinism") {
    std::mt19937 rng(9);
    for (int t = 0; t < 20; ++t) {
        const Graph g = testutil::random_graph(rng, 8);
        const ColoringResult a = chromatic_number(g);
        const ColoringResult b = chromatic_number(g);
        CHECK(a.chi == b.chi);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("budget exhaustion raises a resource error") {
    CHECK_THROWS_AS(chromatic_number(petersen(), 3), resource_error);
    CHECK_THROWS_AS(chromatic_number(complete(3), 0), std::invalid_argument);
}

TEST_CASE("brooks check") {
    SUBCASE("petersen: chi = 3 <= Delta = 3") {
        const BoundEntry e = brooks_check(petersen(), 3);
        CHECK(e.status == BoundStatus::satisfied);
        CHECK(e.equality);
    }
    SUBCASE("odd cycles and complete graphs are the exceptions") {
        CHECK(brooks_check(cycle(7), 3).status == BoundStatus::inapplicable);
        CHECK(brooks_check(cycle(7), 3).note == "exception: odd cycle");
        CHECK(brooks_check(complete(6), 6).status == BoundStatus::inapplicable);
        CHECK(brooks_check(complete(6), 6).note == "exception: complete graph");
        // even cycles are not exceptional
        CHECK(brooks_check(cycle(6), 2).status == BoundStatus::satisfied);
    }
    SUBCASE("disconnected input is inapplicable") {
        CHECK(brooks_check(disjoint_union(cycle(4), cycle(4)), 2).status ==
              BoundStatus::inapplicable);
    }
}

TEST_CASE("regular-graph chain: s- >= 2m/chi >= 2m/d = n") {
    // connected d-regular graphs that are neither complete nor odd cycles
    for (const Graph& g : {cycle(6), cycle(8), complete_bipartite(3, 3), petersen(),
                           circulant(8, {1, 2}), circulant(10, {1, 2, 3})}) {
        const DegreeStats d = degree_stats(g);
        REQUIRE(d.regular());
        const int chi = chromatic_number(g).chi;
        const SpectralSummary s = summarize(g);
        const double d_val = *d.max_degree;
        CHECK(chi <= d_val);  // brooks
        CHECK(s.s_minus >= 2.0 * s.m / chi - 1e-9);
        CHECK(2.0 * s.m / chi >= 2.0 * s.m / d_val - 1e-9);
        CHECK(2.0 * s.m / d_val == doctest::Approx(s.n));
        CHECK(s.s_minus >= s.n - 1e-9);
        CHECK(s.s_plus >= s.n - 1e-9);
    }
}
