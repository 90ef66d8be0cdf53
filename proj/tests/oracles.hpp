#pragma once

// Independent brute-force oracles used only by tests. These deliberately use
// the dumbest correct algorithm available and never share code with the
// implementation paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "hopforge/graph.hpp"

namespace oracle {

using hopforge::digraph;
using hopforge::graph;
using hopforge::vertex;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Cubic all-pairs shortest paths; ignores weights when unweighted.
inline std::vector<std::int64_t> floyd_warshall(const graph& g) {
    const int n = g.n;
    std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, kInf);
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v) * n + v] = 0;
    for (vertex u = 0; u < n; ++u)
        for (const auto& a : g.out[u]) {
            std::int64_t w = g.weighted ? a.w : 1;
            d[static_cast<std::size_t>(u) * n + a.to] = std::min(d[static_cast<std::size_t>(u) * n + a.to], w);
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t via = d[static_cast<std::size_t>(i) * n + k] + d[static_cast<std::size_t>(k) * n + j];
                if (via < d[static_cast<std::size_t>(i) * n + j]) d[static_cast<std::size_t>(i) * n + j] = via;
            }
    return d;
}

// Reachable set from s by plain DFS.
template <class W>
std::vector<char> dfs_reach(const digraph<W>& g, vertex s) {
    std::vector<char> seen(g.n, 0);
    std::vector<vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        vertex v = stack.back();
        stack.pop_back();
        for (const auto& a : g.out[v])
            if (!seen[a.to]) {
                seen[a.to] = 1;
                stack.push_back(a.to);
            }
    }
    return seen;
}

// Enumerates every simple path from s and keeps, per target, the smallest
// (total weight, edge count) pair. Exponential; for tiny sparse graphs only.
inline void enumerate_min_dist_hops(const graph& g, vertex s,
                                    std::vector<std::int64_t>& dist,
                                    std::vector<std::int64_t>& hops) {
    const int n = g.n;
    dist.assign(n, kInf);
    hops.assign(n, kInf);
    dist[s] = 0;
    hops[s] = 0;
    std::vector<char> on_path(n, 0);
    std::function<void(vertex, std::int64_t, std::int64_t)> go = [&](vertex v, std::int64_t d, std::int64_t h) {
        on_path[v] = 1;
        for (const auto& a : g.out[v]) {
            if (on_path[a.to]) continue;
            std::int64_t nd = d + (g.weighted ? a.w : 1);
            std::int64_t nh = h + 1;
            if (nd < dist[a.to] || (nd == dist[a.to] && nh < hops[a.to])) {
                dist[a.to] = nd;
                hops[a.to] = nh;
            }
            go(a.to, nd, nh);
        }
        on_path[v] = 0;
    };
    go(s, 0, 0);
}

// Number of distinct minimum-weight s->t paths, computed by DP over vertices
// in order of settled distance (positive weights).
template <class W>
std::vector<std::uint64_t> count_shortest_paths(const digraph<W>& g, vertex s,
                                                const std::vector<W>& dist,
                                                const std::vector<char>& reach) {
    const int n = g.n;
    std::vector<vertex> order;
    for (vertex v = 0; v < n; ++v)
        if (reach[v]) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](vertex a, vertex b) { return dist[a] < dist[b]; });
    std::vector<std::uint64_t> cnt(n, 0);
    cnt[s] = 1;
    for (vertex v : order) {
        if (!cnt[v]) continue;
        for (const auto& a : g.out[v]) {
            if (!reach[a.to]) continue;
            if (dist[v] + a.w == dist[a.to]) cnt[a.to] += cnt[v];
        }
    }
    return cnt;
}

// Exact maximum number of "marked" vertices on any simple path, by full
// enumeration. For cross-checking the DP verifier on tiny DAGs.
inline int max_marked_on_any_path(const graph& g, const std::vector<char>& marked) {
    int best = 0;
    for (vertex v = 0; v < g.n; ++v) best = std::max(best, marked[v] ? 1 : 0);
    std::function<void(vertex, int)> go = [&](vertex v, int acc) {
        best = std::max(best, acc);
        for (const auto& a : g.out[v]) go(a.to, acc + (marked[a.to] ? 1 : 0));
    };
    for (vertex v = 0; v < g.n; ++v) go(v, marked[v] ? 1 : 0);
    return best;
}

} // namespace oracle
