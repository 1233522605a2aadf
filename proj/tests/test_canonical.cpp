#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sgraph/canonical.hpp"
#include "sgraph/canonical_form.hpp"
#include "sgraph/families.hpp"
#include "sgraph/graph6.hpp"
#include "sgraph/spectral.hpp"
#include "test_util.hpp"

using namespace sgraph;

// The 7-vertex example graph: blow-up of the paw G3 with a = (2,1,1,3).
static Graph figure_one_graph() { return blow_up(p2_catalog().at(3), {2, 1, 1, 3}); }

TEST_CASE("twin quotient basics") {
    SUBCASE("complete bipartite collapses to K2") {
        const CanonicalDecomposition d = canonical_graph(complete_bipartite(3, 5));
        CHECK(d.quotient == complete(2));
        CHECK(d.multiplicities == std::vector<int>{3, 5});
    }
    SUBCASE("the 7-vertex example collapses to G3 with a = (2,1,1,3)") {
        const CanonicalDecomposition d = canonical_graph(figure_one_graph());
        CHECK(isomorphic(d.quotient, p2_catalog().at(3)));
        CHECK(d.multiplicities == std::vector<int>{2, 1, 1, 3});
        CHECK(d.vertex_map == std::vector<int>{0, 0, 1, 2, 3, 3, 3});
    }
    SUBCASE("twin-free graphs are their own quotient") {
        for (const Graph& g : {path(4), cycle(5), cycle(7)}) {
            const CanonicalDecomposition d = canonical_graph(g);
            CHECK(d.is_identity());
            CHECK(d.quotient == g);
        }
    }
    SUBCASE("edgeless graphs collapse to a point") {
        const CanonicalDecomposition d = canonical_graph(Graph(5));
        CHECK(d.quotient.vertex_count() == 1);
        CHECK(d.multiplicities == std::vector<int>{5});
    }
}

TEST_CASE("quotient invariants on random graphs") {
    std::mt19937 rng(17);
    for (int t = 0; t < 500; ++t) {
        const Graph g = testutil::random_graph(rng, 1 + t % 12, 0.4);
        const CanonicalDecomposition d = canonical_graph(g);

        int total = 0;
        for (int a : d.multiplicities) total += a;
        CHECK(total == g.vertex_count());

        // quotient is twin-free, i.e. the operation is idempotent
        CHECK(canonical_graph(d.quotient).is_identity());

        // blowing the quotient back up reproduces the graph up to isomorphism
        CHECK(isomorphic(blow_up(d.quotient, d.multiplicities), g));
    }
}

TEST_CASE("catalog integrity") {
    const P2Catalog& cat = p2_catalog();
    CHECK(isomorphic(cat.at(1), complete(3)));
    CHECK(isomorphic(cat.at(2), path(4)));
    CHECK(isomorphic(cat.at(4), path(5)));
    CHECK(isomorphic(cat.at(5), cycle(5)));
    for (int i = 1; i <= 9; ++i) {
        const Graph& g = cat.at(i);
        CHECK(is_connected(g));
        CHECK(canonical_graph(g).is_identity());
        CHECK(summarize(g).inertia.negative == 2);
    }
    // distinct up to isomorphism
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) CHECK_FALSE(isomorphic(cat.at(i), cat.at(j)));
    // exactly four have minimum degree >= 2: K3, C5, G6 and G9
    int delta2 = 0;
    for (int i = 1; i <= 9; ++i)
        delta2 += *degree_stats(cat.at(i)).min_degree >= 2 ? 1 : 0;
    CHECK(delta2 == 4);
}

TEST_CASE("catalog B values") {
    auto b_of = [](int i) { return summarize(p2_catalog().at(i)).b_value; };
    CHECK(b_of(9) == doctest::Approx(7.0).epsilon(1e-10));        // exact for the prism
    CHECK(b_of(5) == doctest::Approx(5.4721359550).epsilon(1e-8));
    CHECK(b_of(5) >= 5.0);
    CHECK(b_of(6) == doctest::Approx(4.0494483327).epsilon(1e-8));
    CHECK(b_of(6) >= 2.0);
    CHECK(b_of(7) == doctest::Approx(3.5311288741).epsilon(1e-8));
    CHECK(b_of(7) > 3.0);
    CHECK(b_of(8) == doctest::Approx(5.6846584384).epsilon(1e-8));
    CHECK(b_of(8) >= 2.0);
    CHECK(b_of(3) == doctest::Approx(2.1563251747).epsilon(1e-8));
    CHECK(b_of(3) > 2.0);
    CHECK(b_of(1) == doctest::Approx(1.0));  // K3: positives {2}, negatives {-1,-1}
    CHECK(b_of(2) == doctest::Approx(2.0));  // P4
}

TEST_CASE("inertia is preserved under blow-up (200 random draws)") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(1, 9), mult(1, 3);
    for (int t = 0; t < 200; ++t) {
        const Graph& base = p2_catalog().at(pick(rng));
        std::vector<int> a(static_cast<std::size_t>(base.vertex_count()));
        for (auto& x : a) x = mult(rng);
        const Inertia original = summarize(base).inertia;
        const Inertia blown = summarize(blow_up(base, a)).inertia;
        CHECK(original.positive == blown.positive);
        CHECK(original.negative == blown.negative);
    }
}

TEST_CASE("lemma verification records") {
    SUBCASE("G5 with a = (1,2,2,2,2): B route applies, bound holds") {
        const LemmaVerification v = verify_lemma_family(5, {1, 2, 2, 2, 2});
        CHECK(v.applicable);
        CHECK(v.lemma == "B lower bound");
        CHECK(v.premise_ok);  // m >= 2(n-1) - 5
        CHECK(v.bound_holds);
        CHECK(v.n == 9);
        CHECK(v.m == 1 * 2 + 2 * 2 + 2 * 2 + 2 * 2 + 2 * 1);  // cycle products
    }
    SUBCASE("G3 with a = (1,1,2,1): pendant-adjacent vertex has a >= 2") {
        const LemmaVerification v = verify_lemma_family(3, {1, 1, 2, 1});
        CHECK(v.applicable);
        CHECK(v.bound_holds);
    }
    SUBCASE("G3 with a = (2,2,1,2) is outside the lemma hypotheses") {
        const LemmaVerification v = verify_lemma_family(3, {2, 2, 1, 2});
        CHECK_FALSE(v.applicable);
    }
    SUBCASE("G9 itself: s- = 8 >= 5") {
        const LemmaVerification v = verify_lemma_family(9, {1, 1, 1, 1, 1, 1});
        CHECK(v.s_minus == doctest::Approx(8.0));  // prism spectrum {3,1,0,0,-2,-2}
        CHECK(v.bound_holds);
        CHECK(v.b_actual == doctest::Approx(7.0));
    }
    SUBCASE("all a_v >= 2 on a delta >= 2 catalog graph: m >= 2n premise") {
        const LemmaVerification v = verify_lemma_family(6, {2, 2, 2, 2, 2});
        CHECK(v.lemma == "canonical-degree");
        CHECK(v.premise_ok);
        CHECK(v.m >= 2 * v.n);
        CHECK(v.bound_holds);
    }
    CHECK_THROWS_AS(verify_lemma_family(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_family(10, {}), std::invalid_argument);
}

TEST_CASE("two-negative-eigenvalue sweep") {
    const SweepReport r = theorem_maintwoeigs_sweep(10);
    CHECK_FALSE(r.partial);
    CHECK(r.checked > 0);
    CHECK(r.recorded > 0);
    CHECK(r.violations == 0);
    CHECK(r.min_slack_checked >= -1e-6);

    // every blow-up drawn from the catalog keeps nu = 2 (spot sample)
    std::mt19937 rng(88);
    std::uniform_int_distribution<int> pick(1, 9), mult(1, 2);
    for (int t = 0; t < 40; ++t) {
        const Graph& base = p2_catalog().at(pick(rng));
        std::vector<int> a(static_cast<std::size_t>(base.vertex_count()));
        for (auto& x : a) x = mult(rng);
        CHECK(summarize(blow_up(base, a)).inertia.negative == 2);
    }

    CHECK_THROWS_AS(theorem_maintwoeigs_sweep(2), std::invalid_argument);
    CHECK(theorem_maintwoeigs_sweep(15).partial);
}

TEST_CASE("cd >= c + d - 1 for positive integers") {
    for (int c = 1; c <= 20; ++c)
        for (int d = 1; d <= 20; ++d) CHECK(c * d >= c + d - 1);
}
