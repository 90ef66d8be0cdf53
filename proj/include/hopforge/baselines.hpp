#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "hopforge/chains.hpp"
#include "hopforge/graph.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/rng.hpp"
#include "hopforge/scc.hpp"
#include "hopforge/search.hpp"
#include "hopforge/sqrt_shortcut.hpp"
#include "hopforge/supershortcut.hpp"

namespace hopforge {

// Folklore sampling: h vertex pairs drawn uniformly without replacement;
// a pair joins H iff it lies in the transitive closure. In weighted mode the
// surviving pairs carry their exact distance.
inline shortcut_set folklore(const graph& g, std::int64_t h_count, std::uint64_t seed) {
    shortcut_set h;
    h.weighted = g.weighted;
    if (h_count <= 0 || g.n <= 1) return h;
    const std::int64_t n = g.n;
    const std::int64_t total = n * (n - 1);
    reach_matrix tc = transitive_closure(g);

    rng r(seed);
    std::vector<std::int64_t> picks;
    if (h_count >= total) {
        picks.resize(total);
        for (std::int64_t i = 0; i < total; ++i) picks[i] = i;
    } else {
        // partial Fisher-Yates over pair indices
        std::vector<std::int64_t> ids(static_cast<std::size_t>(total));
        for (std::int64_t i = 0; i < total; ++i) ids[i] = i;
        for (std::int64_t i = 0; i < h_count; ++i) {
            std::int64_t j = i + static_cast<std::int64_t>(r.next_below(total - i));
            std::swap(ids[i], ids[j]);
            picks.push_back(ids[i]);
        }
    }

    all_dist_hops<weight_t> base;
    if (g.weighted) base = all_pairs_dijkstra_lex(g);
    for (std::int64_t id : picks) {
        vertex u = static_cast<vertex>(id / (n - 1));
        std::int64_t rest = id % (n - 1);
        vertex v = static_cast<vertex>(rest >= u ? rest + 1 : rest);
        if (!tc(u, v)) continue;
        if (g.weighted)
            h.add(u, v, base.d(u, v));
        else
            h.add(u, v);
    }
    return h;
}

// The stated validation bound for folklore sampling: ceil(4 (n/sqrt(h)) ln n).
inline std::int64_t folklore_bound(int n, std::int64_t h_count) {
    double b = 4.0 * (static_cast<double>(n) / std::sqrt(static_cast<double>(std::max<std::int64_t>(1, h_count)))) *
               std::log(static_cast<double>(std::max(2, n)));
    return static_cast<std::int64_t>(std::ceil(b));
}

// Randomized chain-cover pipeline: chain cover, supershortcut, then sampled
// chains x sampled nodes connected through entry edges. Sampling constants
// c1 = c2 = 2 by default.
struct kp_options {
    double c1 = 2.0; // chain sample multiplier
    double c2 = 2.0; // node sample multiplier
    d4_scheme scheme = d4_scheme::log_star;
};

inline shortcut_set kp_randomized(const graph& g, int depth, std::uint64_t seed,
                                  const kp_options& opts = {}) {
    shortcut_set out;
    if (g.n <= 1) return out;
    condensed_dag cd = condense(g);
    const graph& dag = cd.dag;
    const int n = cd.comp_count;
    out = cd.star_edges;
    if (n == 1) return out;

    int ell = std::max(1, std::min(n, static_cast<int>(std::ceil(2.0 * n / depth))));
    chain_cover cover = disjoint_chains(greedy_ell_cover(dag, ell), n);
    shortcut_set ss = supershortcut(dag, cover, opts.scheme);
    for (const sc_edge& e : ss.edges) out.add(cd.hub[e.u], cd.hub[e.v]);
    if (depth >= n) return out; // supershortcut alone suffices

    const double logn = std::log(static_cast<double>(std::max(2, n)));
    std::int64_t chain_samples = static_cast<std::int64_t>(std::ceil(opts.c1 * n * logn / (static_cast<double>(depth) * depth)));
    std::int64_t node_samples = static_cast<std::int64_t>(std::ceil(opts.c2 * n * logn / depth));

    rng r(seed);
    std::vector<int> chain_ids(cover.chains.size());
    for (std::size_t i = 0; i < chain_ids.size(); ++i) chain_ids[i] = static_cast<int>(i);
    for (std::size_t i = 0; i + 1 < chain_ids.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(r.next_below(chain_ids.size() - i));
        std::swap(chain_ids[i], chain_ids[j]);
    }
    if (chain_samples < static_cast<std::int64_t>(chain_ids.size()))
        chain_ids.resize(static_cast<std::size_t>(chain_samples));

    std::vector<vertex> nodes(n);
    for (int i = 0; i < n; ++i) nodes[i] = i;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(r.next_below(nodes.size() - i));
        std::swap(nodes[i], nodes[j]);
    }
    if (node_samples < n) nodes.resize(static_cast<std::size_t>(node_samples));

    reach_matrix tc = transitive_closure(dag);
    std::set<std::pair<vertex, vertex>> edges;
    for (vertex v : nodes)
        for (int c : chain_ids) {
            auto e = entry(tc, v, cover.chains[c]);
            if (e && e->second != v) edges.insert({v, e->second});
        }
    for (auto [u, v] : edges) out.add(cd.hub[u], cd.hub[v]);
    return out;
}

inline std::int64_t kp_bound(int depth, bool acyclic_input) {
    std::int64_t dag_bound = 10 * static_cast<std::int64_t>(depth);
    return acyclic_input ? dag_bound : 3 * dag_bound + 2;
}

} // namespace hopforge
