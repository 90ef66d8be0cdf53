#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/scc.hpp"

namespace hopforge {

// A chain is a path in the transitive closure; consecutive vertices are
// tc-related, not necessarily adjacent in G.
struct chain {
    int id = 0;
    std::vector<vertex> verts;
    std::size_t length() const { return verts.size(); }
};

struct chain_cover {
    int ell = 0;
    std::vector<chain> chains;          // vertex-disjoint
    std::vector<std::int32_t> chain_of; // -1 when not on any chain
    std::vector<std::int32_t> pos_of;

    chain_cover() = default;
    chain_cover(int n, int ell_) : ell(ell_), chain_of(n, -1), pos_of(n, -1) {}

    int n() const { return static_cast<int>(chain_of.size()); }

    void rebuild_index() {
        std::fill(chain_of.begin(), chain_of.end(), -1);
        std::fill(pos_of.begin(), pos_of.end(), -1);
        for (const chain& c : chains)
            for (std::size_t i = 0; i < c.verts.size(); ++i) {
                chain_of[c.verts[i]] = c.id;
                pos_of[c.verts[i]] = static_cast<std::int32_t>(i);
            }
    }
};

// Multiset of ell paths in G (possibly empty), in selection order.
struct path_multiset {
    int ell = 0;
    std::vector<std::vector<vertex>> paths;
};

// ---------------------------------------------------------------------------
// greedy_ell_cover: `ell` rounds of maximum-new-coverage path extraction on a
// DAG. Ties broken toward the lexicographically smallest vertex sequence.
// After the rounds, every path in g has at most n/ell uncovered vertices
// (each round grabbed at least as many new vertices as any path still shows).
// ---------------------------------------------------------------------------
template <class W>
path_multiset greedy_ell_cover(const digraph<W>& g, int ell) {
    if (ell < 1 || ell > std::max(1, g.n)) throw std::invalid_argument("greedy_ell_cover: need 1 <= ell <= n");
    if (!is_acyclic(g)) throw std::invalid_argument("greedy_ell_cover: input must be acyclic");
    auto topo = topological_order(g);

    path_multiset pm;
    pm.ell = ell;
    std::vector<char> covered(g.n, 0);
    std::vector<std::int64_t> dp(g.n);
    std::vector<vertex> next(g.n);

    for (int round = 0; round < ell; ++round) {
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            vertex v = *it;
            // stopping beats any zero-gain continuation (it is the shorter,
            // lex-smaller sequence), so only dp > 0 successors are picked
            std::int64_t best = 0;
            vertex pick = -1;
            for (const auto& a : g.out[v]) {
                if (dp[a.to] > best || (dp[a.to] == best && best > 0 && a.to < pick)) {
                    best = dp[a.to];
                    pick = a.to;
                }
            }
            dp[v] = (covered[v] ? 0 : 1) + best;
            next[v] = pick;
        }
        vertex start = -1;
        std::int64_t best = 0;
        for (vertex v = 0; v < g.n; ++v)
            if (dp[v] > best) {
                best = dp[v];
                start = v;
            }
        std::vector<vertex> path;
        if (start != -1) {
            for (vertex v = start; v != -1; v = next[v]) {
                path.push_back(v);
                covered[v] = 1;
            }
        }
        pm.paths.push_back(std::move(path));
    }
    return pm;
}

// First path (in selection order) that contains a vertex keeps it; the
// retained vertices of each path form one chain. Empty chains are dropped.
inline chain_cover disjoint_chains(const path_multiset& pm, int n) {
    chain_cover cc(n, pm.ell);
    std::vector<std::int32_t> owner(n, -1);
    for (std::size_t i = 0; i < pm.paths.size(); ++i)
        for (vertex v : pm.paths[i])
            if (owner[v] == -1) owner[v] = static_cast<std::int32_t>(i);
    for (std::size_t i = 0; i < pm.paths.size(); ++i) {
        chain c;
        for (vertex v : pm.paths[i])
            if (owner[v] == static_cast<std::int32_t>(i)) c.verts.push_back(v);
        if (c.verts.empty()) continue;
        c.id = static_cast<int>(cc.chains.size());
        cc.chains.push_back(std::move(c));
    }
    cc.rebuild_index();
    return cc;
}

// Splits every chain into segments of at most max_len vertices.
inline chain_cover split_chains(const chain_cover& cc, int max_len) {
    if (max_len < 1) throw std::invalid_argument("split_chains: max_len >= 1");
    chain_cover out(cc.n(), cc.ell);
    for (const chain& c : cc.chains) {
        for (std::size_t i = 0; i < c.verts.size(); i += max_len) {
            chain piece;
            piece.id = static_cast<int>(out.chains.size());
            std::size_t end = std::min(c.verts.size(), i + max_len);
            piece.verts.assign(c.verts.begin() + i, c.verts.begin() + end);
            out.chains.push_back(std::move(piece));
        }
    }
    out.rebuild_index();
    return out;
}

// Exact maximum, over all paths in the DAG, of the number of path vertices
// not covered by `covered`. Longest-path DP with 0/1 vertex weights.
template <class W>
std::int64_t max_uncovered_on_any_path(const digraph<W>& g, const std::vector<char>& covered) {
    auto topo = topological_order(g);
    std::vector<std::int64_t> dp(g.n, 0);
    std::int64_t best = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        vertex v = *it;
        std::int64_t suffix = 0;
        for (const auto& a : g.out[v]) suffix = std::max(suffix, dp[a.to]);
        dp[v] = (covered[v] ? 0 : 1) + suffix;
        best = std::max(best, dp[v]);
    }
    return best;
}

template <class W>
std::int64_t verify_cover(const digraph<W>& g, const chain_cover& cc) {
    std::vector<char> covered(g.n, 0);
    for (const chain& c : cc.chains)
        for (vertex v : c.verts) covered[v] = 1;
    return max_uncovered_on_any_path(g, covered);
}

template <class W>
std::int64_t verify_cover(const digraph<W>& g, const path_multiset& pm) {
    std::vector<char> covered(g.n, 0);
    for (const auto& p : pm.paths)
        for (vertex v : p) covered[v] = 1;
    return max_uncovered_on_any_path(g, covered);
}

// e(u, C): the earliest vertex of the chain reachable from u, as a closure
// edge. (u, u) when u itself is on the chain; absent when nothing is.
inline std::optional<std::pair<vertex, vertex>> entry(const reach_matrix& reach, vertex u, const chain& c) {
    for (vertex v : c.verts) {
        if (v == u || reach(u, v)) return std::make_pair(u, v);
    }
    return std::nullopt;
}

// Dense entry table: row u holds, per chain id, the entry vertex or -1.
inline std::vector<std::int32_t> entry_table(const reach_matrix& reach, const chain_cover& cc) {
    const int n = reach.n();
    const int k = static_cast<int>(cc.chains.size());
    std::vector<std::int32_t> tab(static_cast<std::size_t>(n) * k, -1);
    for (int ci = 0; ci < k; ++ci) {
        const chain& c = cc.chains[ci];
        for (vertex u = 0; u < n; ++u) {
            for (vertex v : c.verts) {
                if (v == u || reach(u, v)) {
                    tab[static_cast<std::size_t>(u) * k + ci] = v;
                    break;
                }
            }
        }
    }
    return tab;
}

// ---------------------------------------------------------------------------
// Serialization: line 1 "k", then k lines of space-separated vertex ids.
// ---------------------------------------------------------------------------
inline void write_chain_cover(std::ostream& os, const chain_cover& cc) {
    os << cc.chains.size() << '\n';
    for (const chain& c : cc.chains) {
        for (std::size_t i = 0; i < c.verts.size(); ++i) os << (i ? " " : "") << c.verts[i];
        os << '\n';
    }
}

inline chain_cover read_chain_cover(std::istream& is, int n) {
    int k;
    if (!(is >> k)) throw std::runtime_error("read_chain_cover: bad header");
    std::string line;
    std::getline(is, line);
    chain_cover cc(n, k);
    for (int i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("read_chain_cover: unexpected end");
        std::istringstream ls(line);
        chain c;
        c.id = i;
        vertex v;
        while (ls >> v) c.verts.push_back(v);
        cc.chains.push_back(std::move(c));
    }
    cc.rebuild_index();
    return cc;
}

} // namespace hopforge
