#include <doctest.h>

#include <vector>

#include "hopforge/gen.hpp"
#include "hopforge/supershortcut.hpp"
#include "hopforge/util.hpp"
#include "hopforge/validate.hpp"

#include "test_helpers.hpp"

using namespace hopforge;



TEST_CASE("shortcut_path_d4: tiny paths need no plan edges") {
    for (int k : {1, 2, 3, 4, 5}) CHECK(shortcut_path_d4(k).edges.empty());
    CHECK_THROWS_AS(shortcut_path_d4(0), std::invalid_argument);
}

TEST_CASE("shortcut_path_d4: exhaustive diameter check for all k <= 512") {
    for (int k = 2; k <= 512; ++k) {
        auto plan = shortcut_path_d4(k);
        for (auto [i, j] : plan.edges) {
            CHECK(i < j); // monotone, forward-only
            CHECK(j <= k - 1);
            CHECK(i >= 0);
        }
        CHECK(testutil::plan_diameter(plan) <= 4);
    }
}

TEST_CASE("shortcut_path_d4: sampled large k, diameter <= 4 and edges <= c * k * log*(k)") {
    // c fixed once from the construction's level structure (3 arrays per level,
    // one level per log* step); measured values stay under 3.
    const double c = 3.0;
    for (int k : {1024, 3000, 8192, 65536}) {
        auto plan = shortcut_path_d4(k);
        CHECK(testutil::plan_diameter(plan) <= 4);
        double bound = c * k * iter_log2(k);
        CHECK(static_cast<double>(plan.edges.size()) <= bound);
        MESSAGE("k=", k, " edges=", plan.edges.size(), " c*k*log*=", bound);
    }
}

TEST_CASE("shortcut_path_d4: binary-lift fallback has hopbound 2 and O(k log k) edges") {
    for (int k : {64, 257, 1024}) {
        auto plan = shortcut_path_d4(k, d4_scheme::binary_lift);
        CHECK(testutil::plan_diameter(plan) <= 2);
        CHECK(static_cast<double>(plan.edges.size()) <= 1.5 * k * std::log2(k));
    }
}

TEST_CASE("supershortcut: cover of singletons produces nothing") {
    graph g(5, false);
    chain_cover cc(5, 5);
    for (int i = 0; i < 5; ++i) {
        chain c;
        c.id = i;
        c.verts = {i};
        cc.chains.push_back(c);
    }
    cc.rebuild_index();
    CHECK(supershortcut(g, cc).size() == 0);
}

TEST_CASE("supershortcut: single chain = P_n reuses graph edges and reaches every pair in 4 hops") {
    graph g = gen_path(100);
    chain_cover cc(100, 1);
    chain c;
    c.id = 0;
    for (vertex v = 0; v < 100; ++v) c.verts.push_back(v);
    cc.chains.push_back(c);
    cc.rebuild_index();
    auto h = supershortcut(g, cc);
    for (const sc_edge& e : h.edges) CHECK(e.v != e.u + 1); // consecutive edges already in G
    graph aug = augment(g, h);
    for (vertex s = 0; s < g.n; ++s) {
        auto d = bfs_from(aug, s);
        for (vertex t = s + 1; t < g.n; ++t) CHECK(d[t] <= 4);
    }
}

TEST_CASE("supershortcut: every ordered on-chain pair within 4 hops on random covers") {
    for (std::uint64_t seed : {1ULL, 9ULL}) {
        graph g = gen_random_dag(80, 0.08, seed);
        auto cc = disjoint_chains(greedy_ell_cover(g, 6), g.n);
        auto h = supershortcut(g, cc);
        reach_matrix tc = transitive_closure(g);
        for (const sc_edge& e : h.edges) CHECK(tc(e.u, e.v)); // H stays inside the closure
        graph aug = augment(g, h);
        for (const chain& c : cc.chains) {
            for (std::size_t i = 0; i < c.verts.size(); ++i) {
                auto d = bfs_from(aug, c.verts[i]);
                for (std::size_t j = i + 1; j < c.verts.size(); ++j) {
                    REQUIRE(d[c.verts[j]] != kNoDist);
                    CHECK(d[c.verts[j]] <= 4);
                }
            }
        }
        // total size within the log* budget
        std::int64_t n = g.n;
        CHECK(static_cast<double>(h.size()) <= 4.0 * n * std::max(1, iter_log2(static_cast<double>(n))));
    }
}
