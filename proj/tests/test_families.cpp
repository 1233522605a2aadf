#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sgraph/bounds.hpp"
#include "sgraph/canonical_form.hpp"
#include "sgraph/families.hpp"
#include "sgraph/spectral.hpp"
#include "test_util.hpp"

using namespace sgraph;

namespace {

// The barbell characteristic polynomial is (x+1)^(2k-4) times this quartic
// bracket; the four explicit roots must vanish here ((x = -1) covers the rest).
double barbell_charpoly_bracket(int k, double x) {
    return (x + 1.0) * (x + 1.0) * (x - k + 1.0) * (x - k + 1.0) -
           (x - k + 2.0) * (x - k + 2.0);
}

}  // namespace

TEST_CASE("basic constructors") {
    CHECK(complete_q_partite({1, 1, 1, 1}) == complete(4));
    CHECK(complete_q_partite({3, 4}) == complete_bipartite(3, 4));
    CHECK(star(6) == complete_bipartite(1, 5));
    CHECK(cycle(3) == complete(3));
    CHECK(path(2) == complete(2));

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_q_partite({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(star(1), std::invalid_argument);
}

TEST_CASE("barbell structure") {
    for (int k : {3, 4, 7}) {
        const Graph g = barbell(k);
        CHECK(g.vertex_count() == 2 * k);
        CHECK(g.edge_count() == k * (k - 1) + 1);
        CHECK(is_connected(g));
        CHECK(barbell_clique_size(g) == k);
    }
    CHECK_THROWS_AS(barbell(2), std::invalid_argument);

    // detection rejects near-misses
    CHECK(barbell_clique_size(complete(6)) == 0);
    CHECK(barbell_clique_size(cycle(6)) == 0);
    CHECK(barbell_clique_size(disjoint_union(complete(3), complete(3))) == 0);
}

TEST_CASE("barbell k=3: the paper's exact root quantity") {
    const double k = 3.0;
    const double value = (k - 3.0 - std::sqrt(k * k + 2.0 * k - 3.0));
    CHECK(value * value == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("barbell predicted spectrum invariants and solver agreement") {
    for (int k = 3; k <= 12; ++k) {
        const BarbellPrediction p = barbell_predicted_spectrum(k);
        REQUIRE(static_cast<int>(p.eigenvalues.size()) == 2 * k);
        double sum = 0.0, sumsq = 0.0;
        int positives = 0;
        for (double v : p.eigenvalues) {
            sum += v;
            sumsq += v * v;
            positives += v > 0.0 ? 1 : 0;
        }
        CHECK(std::abs(sum) < 1e-9);
        CHECK(sumsq == doctest::Approx(2.0 * (k * (k - 1) + 1)).epsilon(1e-12));
        CHECK(positives == 2);

        // multiset agreement with the eigensolver (both sorted descending)
        const auto ev = eigenvalues(barbell(k));
        double dev = 0.0;
        for (std::size_t i = 0; i < ev.size(); ++i)
            dev = std::max(dev, std::abs(ev[i] - p.eigenvalues[i]));
        CHECK(dev <= 1e-9);

        // the quartic factor of the characteristic polynomial vanishes on the
        // four explicit roots; sorted descending they sit at positions
        // 0, 1 (near k and k-1), 2 (in (-1,0)) and 2k-1 (in (-2,-1))
        const double scale = std::pow(static_cast<double>(k), 4);
        for (double root : {p.eigenvalues[0], p.eigenvalues[1], p.eigenvalues[2],
                            p.eigenvalues[2 * static_cast<std::size_t>(k) - 1]})
            CHECK(std::abs(barbell_charpoly_bracket(k, root)) / scale < 1e-9);
    }
}

TEST_CASE("disjoint union") {
    const Graph g = disjoint_union(complete(4), complete(4));
    const SpectralSummary s = summarize(g);
    CHECK(s.s_minus == doctest::Approx(6.0));  // 2k - 2 = 6 < n - 1 = 7

    // spectrum is the multiset union
    const Graph a = cycle(5), b = path(3);
    auto ev = eigenvalues(disjoint_union(a, b));
    auto ea = eigenvalues(a);
    const auto eb = eigenvalues(b);
    ea.insert(ea.end(), eb.begin(), eb.end());
    std::sort(ea.begin(), ea.end(), std::greater<>());
    REQUIRE(ev.size() == ea.size());
    for (std::size_t i = 0; i < ev.size(); ++i)
        CHECK(ev[i] == doctest::Approx(ea[i]).epsilon(1e-9).scale(1.0));

    // kappa is additive; appending K1 appends a zero eigenvalue
    CHECK(components(disjoint_union(g, complete(3))).kappa == 3);
    const SpectralSummary z = summarize(disjoint_union(cycle(5), Graph(1)));
    CHECK(z.inertia.zero == 1);
}

TEST_CASE("circulants") {
    CHECK(circulant(6, {1}) == cycle(6));
    CHECK(isomorphic(circulant(5, {1, 2}), complete(5)));
    const Graph g = circulant(10, {1, 2, 3});
    CHECK(degree_stats(g).regular());
    CHECK(*degree_stats(g).min_degree == 6);
    CHECK(eigenvalues(g)[0] == doctest::Approx(6.0));
    CHECK_THROWS_AS(circulant(10, {6}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(10, {0}), std::invalid_argument);
    // n even with n/2 in the set: antipodal matching, degree 2|S| - 1
    CHECK(*degree_stats(circulant(6, {1, 3})).min_degree == 3);
}

TEST_CASE("line graphs") {
    CHECK(isomorphic(line_graph(complete(3)), complete(3)));
    CHECK(isomorphic(line_graph(star(6)), complete(5)));
    CHECK(isomorphic(line_graph(cycle(5)), cycle(5)));
    CHECK(line_graph(Graph(3)).vertex_count() == 0);

    // classical floor: line-graph eigenvalues never drop below -2
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        const Graph g = testutil::random_graph(rng, 3 + t % 6);
        const auto ev = eigenvalues(line_graph(g));
        if (!ev.empty()) CHECK(ev.back() >= -2.0 - 1e-9);
    }
}

TEST_CASE("complete multipartite graphs have exactly one positive eigenvalue") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> qd(2, 5), pd(1, 4);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> parts(static_cast<std::size_t>(qd(rng)));
        for (auto& p : parts) p = pd(rng);
        const SpectralSummary s = summarize(complete_q_partite(parts));
        CHECK(s.inertia.positive == 1);
    }
}

TEST_CASE("every family instance up to n = 40 satisfies the conjecture") {
    std::vector<Graph> instances;
    for (int n = 1; n <= 40; n += 3) instances.push_back(complete(n));
    for (int n = 3; n <= 39; n += 4) instances.push_back(cycle(n));
    for (int n = 2; n <= 40; n += 5) {
        instances.push_back(path(n));
        instances.push_back(star(n));
    }
    for (int a = 1; a <= 19; a += 3) instances.push_back(complete_bipartite(a, a + 1));
    instances.push_back(complete_q_partite({2, 3, 4}));
    instances.push_back(complete_q_partite({5, 5, 5, 5}));
    instances.push_back(complete_q_partite({1, 2, 3, 4, 5}));
    for (int k = 3; k <= 20; k += 2) instances.push_back(barbell(k));
    instances.push_back(circulant(10, {1, 2, 3}));
    instances.push_back(circulant(16, {1, 3, 5}));
    instances.push_back(line_graph(complete(5)));
    instances.push_back(line_graph(cycle(9)));

    for (const Graph& g : instances) {
        REQUIRE(g.vertex_count() <= 40);
        const SpectralSummary s = summarize(g);
        const double slack = conjecture_slack(g, s);
        CHECK_MESSAGE(slack >= -1e-6, "n=" << g.vertex_count() << " m=" << g.edge_count());
        // proved classes: hyper-energetic instances must be strict
        if (is_connected(g) && s.energy > 2.0 * (s.n - 1) + 1e-9)
            CHECK(std::min(s.s_minus, s.s_plus) > s.n - 1.0);
    }
}

TEST_CASE("odd cycles up to C21: slack stays positive, no rate asserted") {
    for (int n = 5; n <= 21; n += 2) {
        const SpectralSummary s = summarize(cycle(n));
        const double slack = std::min(s.s_minus, s.s_plus) - (s.n - 1);
        CHECK(slack >= -1e-6);
        CHECK(slack <= 1.3);  // observed: C5 largest at about 0.76
    }
}
