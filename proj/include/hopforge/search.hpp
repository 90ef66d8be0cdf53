#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/util.hpp"

namespace hopforge {

// Unweighted BFS distances from s; kNoDist for unreachable vertices.
template <class W>
std::vector<std::int32_t> bfs_from(const digraph<W>& g, vertex s) {
    std::vector<std::int32_t> dist(g.n, kNoDist);
    std::vector<vertex> queue;
    queue.reserve(g.n);
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        vertex v = queue[qi];
        for (const auto& a : g.out[v])
            if (dist[a.to] == kNoDist) {
                dist[a.to] = dist[v] + 1;
                queue.push_back(a.to);
            }
    }
    return dist;
}

// Flat n*n matrix of BFS distances, row s at [s*n .. s*n+n).
template <class W>
std::vector<std::int32_t> all_pairs_bfs(const digraph<W>& g, int threads = 1) {
    std::vector<std::int32_t> d(static_cast<std::size_t>(g.n) * g.n, kNoDist);
    parallel_for(
        g.n,
        [&](int s) {
            auto row = bfs_from(g, s);
            std::copy(row.begin(), row.end(), d.begin() + static_cast<std::size_t>(s) * g.n);
        },
        threads);
    return d;
}

// Longest BFS distance over all reachable ordered pairs (0 for n <= 1).
template <class W>
std::int32_t diameter(const digraph<W>& g) {
    std::int32_t best = 0;
    for (vertex s = 0; s < g.n; ++s) {
        auto d = bfs_from(g, s);
        for (std::int32_t x : d) best = std::max(best, x);
    }
    return best;
}

// Shortest distance and, among shortest paths, the fewest edges.
// Label-setting over lexicographic (dist, hops) keys; weights must be > 0.
template <class W>
struct dist_hops {
    std::vector<W> dist;
    std::vector<std::int32_t> hops; // kNoDist where unreachable
};

template <class W>
dist_hops<W> dijkstra_lex_from(const digraph<W>& g, vertex s) {
    dist_hops<W> r;
    r.dist.assign(g.n, W{});
    r.hops.assign(g.n, kNoDist);
    std::vector<char> settled(g.n, 0);

    struct entry {
        W d;
        std::int32_t h;
        vertex v;
    };
    auto worse = [](const entry& a, const entry& b) {
        if (a.d != b.d) return b.d < a.d;
        return a.h > b.h;
    };
    std::priority_queue<entry, std::vector<entry>, decltype(worse)> pq(worse);
    r.dist[s] = W{};
    r.hops[s] = 0;
    pq.push({W{}, 0, s});
    while (!pq.empty()) {
        entry top = pq.top();
        pq.pop();
        if (settled[top.v]) continue;
        settled[top.v] = 1;
        for (const auto& a : g.out[top.v]) {
            W nd = top.d + a.w;
            std::int32_t nh = top.h + 1;
            if (r.hops[a.to] == kNoDist || nd < r.dist[a.to] ||
                (!(r.dist[a.to] < nd) && nh < r.hops[a.to])) {
                if (!settled[a.to]) {
                    r.dist[a.to] = nd;
                    r.hops[a.to] = nh;
                    pq.push({nd, nh, a.to});
                }
            }
        }
    }
    return r;
}

template <class W>
struct all_dist_hops {
    int n = 0;
    std::vector<W> dist;                // n*n, valid where hops != kNoDist
    std::vector<std::int32_t> hops;     // n*n
    bool reachable(vertex s, vertex t) const { return hops[static_cast<std::size_t>(s) * n + t] != kNoDist; }
    W d(vertex s, vertex t) const { return dist[static_cast<std::size_t>(s) * n + t]; }
    std::int32_t h(vertex s, vertex t) const { return hops[static_cast<std::size_t>(s) * n + t]; }
};

template <class W>
all_dist_hops<W> all_pairs_dijkstra_lex(const digraph<W>& g, int threads = 1) {
    all_dist_hops<W> r;
    r.n = g.n;
    r.dist.assign(static_cast<std::size_t>(g.n) * g.n, W{});
    r.hops.assign(static_cast<std::size_t>(g.n) * g.n, kNoDist);
    parallel_for(
        g.n,
        [&](int s) {
            auto row = dijkstra_lex_from(g, s);
            std::copy(row.dist.begin(), row.dist.end(), r.dist.begin() + static_cast<std::size_t>(s) * g.n);
            std::copy(row.hops.begin(), row.hops.end(), r.hops.begin() + static_cast<std::size_t>(s) * g.n);
        },
        threads);
    return r;
}

} // namespace hopforge
