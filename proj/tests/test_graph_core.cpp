#include <doctest.h>

#include <sstream>

#include "hopforge/gen.hpp"
#include "hopforge/graph.hpp"
#include "hopforge/perturb.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/scc.hpp"
#include "hopforge/search.hpp"
#include "hopforge/validate.hpp"
#include "oracles.hpp"

using namespace hopforge;

namespace {

graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges, bool weighted = false) {
    graph g(n, weighted);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("condense: DAG input is the identity mapping with zero star edges") {
    graph g = gen_random_dag(24, 0.2, 3);
    auto c = condense(g);
    CHECK(c.comp_count == g.n);
    CHECK(c.star_edges.size() == 0);
    CHECK(is_acyclic(c.dag));
}

TEST_CASE("condense: 3-cycle gives one component and four star edges") {
    graph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    auto c = condense(g);
    CHECK(c.comp_count == 1);
    REQUIRE(c.star_edges.size() == 4);
    // hub is vertex 0; edges 0->1, 1->0, 0->2, 2->0 in some order
    int hub_out = 0, hub_in = 0;
    for (const auto& e : c.star_edges.edges) {
        CHECK((e.u == 0 || e.v == 0));
        if (e.u == 0) ++hub_out;
        if (e.v == 0) ++hub_in;
    }
    CHECK(hub_out == 2);
    CHECK(hub_in == 2);
}

TEST_CASE("condense: random digraph condensation is acyclic, star edges give hopdistance <= 2 inside components") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        graph g = gen_random_digraph(64, 0.05, seed);
        auto c = condense(g);
        CHECK(is_acyclic(c.dag));
        // star edges are transitive-closure edges and keep each SCC at distance <= 2
        graph aug = augment(g, c.star_edges);
        reach_matrix tc = transitive_closure(g);
        for (const auto& e : c.star_edges.edges) CHECK(tc(e.u, e.v));
        for (vertex s = 0; s < g.n; ++s) {
            auto d = bfs_from(aug, s);
            for (vertex t = 0; t < g.n; ++t)
                if (t != s && c.comp_of[s] == c.comp_of[t]) {
                    REQUIRE(d[t] != kNoDist);
                    CHECK(d[t] <= 2);
                }
        }
    }
}

TEST_CASE("transitive_closure basics") {
    graph p3 = gen_path(3);
    reach_matrix r = transitive_closure(p3);
    CHECK(r(0, 2));
    CHECK_FALSE(r(2, 0));
    CHECK(r(0, 0));

    graph empty(4, false);
    reach_matrix re = transitive_closure(empty);
    for (vertex u = 0; u < 4; ++u)
        for (vertex v = 0; v < 4; ++v) CHECK(re(u, v) == (u == v));
}

TEST_CASE("transitive_closure matches per-source DFS on random graphs") {
    for (std::uint64_t seed : {2ULL, 9ULL}) {
        graph g = gen_random_dag(32, 0.1, seed);
        reach_matrix r = transitive_closure(g);
        for (vertex s = 0; s < g.n; ++s) {
            auto seen = oracle::dfs_reach(g, s);
            for (vertex t = 0; t < g.n; ++t) CHECK(r(s, t) == (seen[t] != 0));
        }
        graph dg = gen_random_digraph(24, 0.08, seed);
        reach_matrix rd = transitive_closure(dg);
        for (vertex s = 0; s < dg.n; ++s) {
            auto seen = oracle::dfs_reach(dg, s);
            for (vertex t = 0; t < dg.n; ++t) CHECK(rd(s, t) == (seen[t] != 0));
        }
    }
}

TEST_CASE("all-pairs BFS distances: path with and without a shortcut") {
    graph p5 = gen_path(5);
    auto d0 = all_pairs_bfs(p5);
    CHECK(d0[0 * 5 + 4] == 4);
    shortcut_set h;
    h.add(0, 4);
    auto d1 = all_pairs_bfs(augment(p5, h));
    CHECK(d1[0 * 5 + 4] == 1);
}

TEST_CASE("all-pairs BFS matches Floyd-Warshall with extra closure edges") {
    graph g = gen_random_dag(32, 0.12, 5);
    reach_matrix tc = transitive_closure(g);
    rng r(17);
    shortcut_set h;
    while (h.size() < 10) {
        vertex u = static_cast<vertex>(r.next_below(g.n));
        vertex v = static_cast<vertex>(r.next_below(g.n));
        if (u != v && tc(u, v)) h.add(u, v);
    }
    graph aug = augment(g, h);
    auto mine = all_pairs_bfs(aug);
    auto fw = oracle::floyd_warshall(aug);
    for (std::size_t i = 0; i < mine.size(); ++i) {
        std::int64_t expect = fw[i] >= oracle::kInf ? kNoDist : fw[i];
        CHECK(mine[i] == expect);
    }
}

TEST_CASE("lexicographic dijkstra: hopdistance on a weighted path") {
    graph g(3, true);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);

    auto base = all_pairs_dijkstra_lex(g);
    CHECK(base.d(0, 2) == 2);
    CHECK(base.h(0, 2) == 2);

    shortcut_set h;
    h.weighted = true;
    h.add(0, 2, 2);
    graph aug = augment(g, h);
    auto after = all_pairs_dijkstra_lex(aug);
    CHECK(after.d(0, 2) == 2);
    CHECK(after.h(0, 2) == 1);
}

TEST_CASE("lexicographic dijkstra matches exhaustive path enumeration on small weighted DAGs") {
    for (std::uint64_t seed : {3ULL, 11ULL, 23ULL}) {
        graph g = gen_random_weighted_dag(24, 0.12, 8, seed);
        auto got = all_pairs_dijkstra_lex(g);
        for (vertex s = 0; s < g.n; ++s) {
            std::vector<std::int64_t> dist, hops;
            oracle::enumerate_min_dist_hops(g, s, dist, hops);
            for (vertex t = 0; t < g.n; ++t) {
                if (dist[t] >= oracle::kInf) {
                    CHECK(got.h(s, t) == kNoDist);
                } else {
                    REQUIRE(got.h(s, t) != kNoDist);
                    CHECK(got.d(s, t) == dist[t]);
                    CHECK(got.h(s, t) == hops[t]);
                }
            }
        }
    }
}

TEST_CASE("validate_shortcut_set: trivial cases") {
    graph p3 = gen_path(3);
    shortcut_set h;
    h.add(0, 2);
    CHECK(validate_shortcut_set(p3, h, 1).valid);

    graph p5 = gen_path(5);
    shortcut_set empty;
    auto rep = validate_shortcut_set(p5, empty, 3);
    CHECK_FALSE(rep.valid);
    CHECK(rep.kind == failure_kind::hopbound_violation);
    CHECK(rep.worst_u == 0);
    CHECK(rep.worst_v == 4);
    CHECK(rep.worst_value == 4);

    shortcut_set bad;
    bad.add(2, 0); // not in tc of a path
    auto rep2 = validate_shortcut_set(p5, bad, 10);
    CHECK_FALSE(rep2.valid);
    CHECK(rep2.kind == failure_kind::non_tc_edge);
}

TEST_CASE("validator diameter properties on random graphs") {
    for (std::uint64_t seed : {4ULL, 19ULL}) {
        graph g = gen_layered(40, 4, 0.5, seed);
        std::int32_t diam = diameter(g);
        REQUIRE(diam >= 2);
        shortcut_set empty;
        CHECK(validate_shortcut_set(g, empty, diam).valid);
        CHECK_FALSE(validate_shortcut_set(g, empty, diam - 1).valid);
    }
}

TEST_CASE("validate_hopset: weight corruption and hopbound violations are distinguished") {
    graph g(3, true);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 3);

    shortcut_set good;
    good.weighted = true;
    good.add(0, 2, 5);
    CHECK(validate_hopset(g, good, 1).valid);

    shortcut_set corrupt;
    corrupt.weighted = true;
    corrupt.add(0, 2, 4); // shorter than dist_G -> corrupts distances
    auto rep = validate_hopset(g, corrupt, 3);
    CHECK_FALSE(rep.valid);
    CHECK(rep.kind == failure_kind::distance_corrupted);

    shortcut_set none;
    none.weighted = true;
    auto rep2 = validate_hopset(g, none, 1);
    CHECK_FALSE(rep2.valid);
    CHECK(rep2.kind == failure_kind::hopbound_violation);
}

TEST_CASE("validate_hopset accepts weighted hopsets on unweighted graphs") {
    // unweighted graphs are weight-1 graphs; hopset edges still carry their
    // exact distances and must be honored by the augmented searches
    graph g = gen_path(5);
    shortcut_set h;
    h.weighted = true;
    h.add(0, 4, 4);
    h.add(0, 2, 2);
    auto rep = validate_hopset(g, h, 3); // (1,4) still takes three hops
    CHECK(rep.valid);
    CHECK(rep.measured_bound == 3);

    shortcut_set bad;
    bad.weighted = true;
    bad.add(0, 4, 3); // shorter than the true distance
    CHECK(validate_hopset(g, bad, 4).kind == failure_kind::distance_corrupted);
}

TEST_CASE("adding edges never increases distances (monotonicity property)") {
    for (std::uint64_t seed : {6ULL, 13ULL}) {
        graph g = gen_random_dag(28, 0.1, seed);
        reach_matrix tc = transitive_closure(g);
        auto before = all_pairs_bfs(g);
        rng r(seed * 31 + 1);
        shortcut_set h;
        for (int i = 0; i < 12; ++i) {
            vertex u = static_cast<vertex>(r.next_below(g.n));
            vertex v = static_cast<vertex>(r.next_below(g.n));
            if (u != v && tc(u, v)) h.add(u, v);
        }
        auto after = all_pairs_bfs(augment(g, h));
        for (std::size_t i = 0; i < before.size(); ++i) {
            if (before[i] == kNoDist) {
                CHECK(after[i] == kNoDist);
            } else {
                CHECK(after[i] <= before[i]);
                CHECK(after[i] >= 0);
            }
        }
    }
}

TEST_CASE("hopdist >= 1 for distinct reachable pairs and hopdist <= dist when weights >= 1") {
    graph g = gen_random_weighted_dag(20, 0.15, 5, 21);
    auto r = all_pairs_dijkstra_lex(g);
    for (vertex s = 0; s < g.n; ++s)
        for (vertex t = 0; t < g.n; ++t) {
            if (s == t || r.h(s, t) == kNoDist) continue;
            CHECK(r.h(s, t) >= 1);
            CHECK(r.h(s, t) <= r.d(s, t));
        }
}

TEST_CASE("perturb_unique: diamond resolves to a single shortest path") {
    graph g(4, true);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 3, 1);
    g.add_edge(0, 2, 1);
    g.add_edge(2, 3, 1);
    auto p = perturb_unique(g, shortcut_set{});
    auto dh = dijkstra_lex_from(p, 0);
    std::vector<char> reach(4, 0);
    for (vertex v = 0; v < 4; ++v) reach[v] = dh.hops[v] != kNoDist;
    auto cnt = oracle::count_shortest_paths(p, 0, dh.dist, reach);
    CHECK(cnt[3] == 1);
}

TEST_CASE("perturb_unique: already-unique shortest paths keep their vertex sequences") {
    graph g(4, true);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(0, 3, 10); // strictly worse alternative
    auto p = perturb_unique(g, shortcut_set{});
    auto dh = dijkstra_lex_from(p, 0);
    // the unique shortest 0->3 path still has 3 hops, i.e. goes 0,1,2,3
    CHECK(dh.hops[3] == 3);
}

TEST_CASE("perturb_unique: shortest-path count is exactly 1 per reachable pair (counting DP)") {
    for (std::uint64_t seed : {1ULL, 8ULL, 15ULL, 29ULL}) {
        graph g = gen_random_weighted_dag(20, 0.2, 4, seed);
        auto p = perturb_unique(g, shortcut_set{});
        for (vertex s = 0; s < g.n; ++s) {
            auto dh = dijkstra_lex_from(p, s);
            std::vector<char> reach(g.n, 0);
            for (vertex v = 0; v < g.n; ++v) reach[v] = dh.hops[v] != kNoDist;
            auto cnt = oracle::count_shortest_paths(p, s, dh.dist, reach);
            for (vertex t = 0; t < g.n; ++t)
                if (t != s && reach[t]) CHECK(cnt[t] == 1);
        }
    }
}

TEST_CASE("perturb_unique: the unique shortest path is a minimum-hop shortest path of G ∪ H") {
    graph g = gen_random_weighted_dag(18, 0.2, 4, 33);
    auto base = all_pairs_dijkstra_lex(g);
    auto p = perturb_unique(g, shortcut_set{});
    auto ph = all_pairs_dijkstra_lex(p);
    for (vertex s = 0; s < g.n; ++s)
        for (vertex t = 0; t < g.n; ++t) {
            if (s == t || base.h(s, t) == kNoDist) continue;
            // hop count of the perturbed unique path == hopdist of the original
            CHECK(ph.h(s, t) == base.h(s, t));
        }
}

TEST_CASE("perturb_unique_random: spot check uniqueness") {
    graph g = gen_random_weighted_dag(16, 0.2, 4, 55);
    graph p = perturb_unique_random(g, shortcut_set{}, 99);
    for (vertex s = 0; s < g.n; ++s) {
        auto dh = dijkstra_lex_from(p, s);
        std::vector<char> reach(g.n, 0);
        for (vertex v = 0; v < g.n; ++v) reach[v] = dh.hops[v] != kNoDist;
        auto cnt = oracle::count_shortest_paths(p, s, dh.dist, reach);
        for (vertex t = 0; t < g.n; ++t)
            if (t != s && reach[t]) CHECK(cnt[t] == 1);
    }
}

TEST_CASE("graph io: parse warnings for self-loops and duplicates, round trip") {
    std::istringstream in("4 5\n0 1\n1 1\n0 1\n1 2\n2 3\n");
    auto res = parse_graph(in);
    CHECK(res.g.edge_count() == 3);
    CHECK(res.warnings.size() == 2);

    graph g = gen_random_dag(30, 0.1, 77);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream back(out.str());
    auto res2 = parse_graph(back);
    CHECK(res2.warnings.empty());
    CHECK(res2.g.n == g.n);
    REQUIRE(res2.g.edge_count() == g.edge_count());
    for (vertex u = 0; u < g.n; ++u)
        for (const auto& a : g.out[u]) CHECK(res2.g.has_edge(u, a.to));
}

TEST_CASE("shortcut set io round trip with weights") {
    shortcut_set h;
    h.weighted = true;
    h.add(0, 3, 7);
    h.add(1, 4, 2);
    std::ostringstream out;
    write_shortcut_set(out, h, 5);
    std::istringstream in(out.str());
    auto h2 = parse_shortcut_set(in, 5);
    REQUIRE(h2.size() == 2);
    CHECK(h2.weighted);
    CHECK(h2.edges[0].w == 7);
    CHECK(h2.edges[1].v == 4);
}
