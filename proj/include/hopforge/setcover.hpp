#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hopforge/chains.hpp"
#include "hopforge/graph.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/scc.hpp"
#include "hopforge/sqrt_shortcut.hpp"
#include "hopforge/supershortcut.hpp"

namespace hopforge {

// ---------------------------------------------------------------------------
// Consistent DFS forest. One tree per chain, rooted at the chain's first
// vertex, grown over G plus the spine edges (c_i, c_i+1) of every chain.
// Exploration order: a candidate on the current vertex's own chain first
// (earliest chain position), otherwise the smallest vertex id. The resulting
// trees satisfy, for u on the tree's chain and any v reachable from u:
//   (1) v sits in u's subtree,
//   (2) tree paths agree across trees chain-suffix-wise,
//   (3) the vertices of any one chain appear consecutively on root paths.
// ---------------------------------------------------------------------------
struct dfs_forest {
    int n = 0;
    int k = 0;                // number of chains/trees
    int depth_limit = -1;     // -1 = untruncated
    const chain_cover* cover = nullptr;

    // per tree, indexed [tree][vertex]
    std::vector<std::vector<std::int32_t>> parent;   // -1 root, -2 not in tree
    std::vector<std::vector<std::int32_t>> nd;       // distinct chains on the root path
    std::vector<std::vector<std::int32_t>> tf;       // TreeFinder: last spine vertex reaching v
    std::vector<std::vector<char>> alive;
    std::vector<std::vector<std::vector<std::int32_t>>> children;
    std::vector<std::vector<vertex>> preorder;       // per tree

    bool in_tree(int t, vertex v) const { return parent[t][v] != -2; }
    bool is_runhead(int t, vertex v) const {
        if (cover->chain_of[v] < 0) return false;
        std::int32_t p = parent[t][v];
        return p < 0 || cover->chain_of[p] != cover->chain_of[v];
    }
};

template <class W>
dfs_forest consistent_dfs(const digraph<W>& g, const chain_cover& cc) {
    if (!is_acyclic(g)) throw std::invalid_argument("consistent_dfs: input must be acyclic");
    dfs_forest f;
    f.n = g.n;
    f.k = static_cast<int>(cc.chains.size());
    f.cover = &cc;
    f.parent.assign(f.k, std::vector<std::int32_t>(g.n, -2));
    f.nd.assign(f.k, std::vector<std::int32_t>(g.n, 0));
    f.tf.assign(f.k, std::vector<std::int32_t>(g.n, -1));
    f.alive.assign(f.k, std::vector<char>(g.n, 0));
    f.children.assign(f.k, {});
    f.preorder.assign(f.k, {});

    auto spine_next = [&](vertex x) -> vertex {
        std::int32_t c = cc.chain_of[x];
        if (c < 0) return -1;
        std::int32_t p = cc.pos_of[x];
        const auto& verts = cc.chains[c].verts;
        return p + 1 < static_cast<std::int32_t>(verts.size()) ? verts[p + 1] : -1;
    };

    for (int t = 0; t < f.k; ++t) {
        auto& par = f.parent[t];
        auto& ndv = f.nd[t];
        auto& tfv = f.tf[t];
        auto& alv = f.alive[t];
        f.children[t].assign(g.n, {});
        vertex root = cc.chains[t].verts.front();

        // per-vertex candidate lists in exploration priority order
        std::vector<std::vector<vertex>> cand(g.n);
        std::vector<std::size_t> cpos(g.n, 0);
        auto build_cand = [&](vertex x) {
            auto& lst = cand[x];
            lst.clear();
            vertex sn = spine_next(x);
            std::vector<vertex> same, other;
            if (sn >= 0) same.push_back(sn);
            for (const auto& a : g.out[x]) {
                if (cc.chain_of[a.to] >= 0 && cc.chain_of[a.to] == cc.chain_of[x] && a.to != sn)
                    same.push_back(a.to);
                else if (a.to != sn)
                    other.push_back(a.to);
            }
            std::sort(same.begin(), same.end(),
                      [&](vertex a, vertex b) { return cc.pos_of[a] < cc.pos_of[b]; });
            std::sort(other.begin(), other.end());
            lst.insert(lst.end(), same.begin(), same.end());
            lst.insert(lst.end(), other.begin(), other.end());
        };

        std::vector<vertex> stack;
        par[root] = -1;
        ndv[root] = 1;
        tfv[root] = root;
        alv[root] = 1;
        f.preorder[t].push_back(root);
        build_cand(root);
        stack.push_back(root);
        while (!stack.empty()) {
            vertex x = stack.back();
            bool advanced = false;
            while (cpos[x] < cand[x].size()) {
                vertex y = cand[x][cpos[x]++];
                if (par[y] != -2) continue;
                par[y] = x;
                std::int32_t cy = cc.chain_of[y];
                std::int32_t cx = cc.chain_of[x];
                ndv[y] = ndv[x] + (cy >= 0 && cy != cx ? 1 : 0);
                // TreeFinder: the deepest spine vertex on the root path; the
                // chain forms the initial spine, so this is where it was left
                tfv[y] = cy == t ? y : tfv[x];
                alv[y] = 1;
                f.children[t][x].push_back(y);
                f.preorder[t].push_back(y);
                build_cand(y);
                stack.push_back(y);
                advanced = true;
                break;
            }
            if (!advanced) {
                stack.pop_back();
                cpos[x] = 0;
                cand[x].clear();
                cand[x].shrink_to_fit();
            }
        }
    }
    return f;
}

// Removes every vertex whose root path crosses more than D distinct chains.
inline void truncate_forest(dfs_forest& f, int depth) {
    if (depth < 1) throw std::invalid_argument("truncate_forest: depth >= 1");
    for (int t = 0; t < f.k; ++t)
        for (vertex v = 0; v < f.n; ++v)
            if (f.in_tree(t, v) && f.nd[t][v] > depth) f.alive[t][v] = 0;
    f.depth_limit = depth;
}

// ---------------------------------------------------------------------------
// Covering potentials. A relevant subpath (for source chain C) is a tree path
// of T^C from a spine vertex c_j straight off the spine, crossing exactly D
// distinct chains (C included), ending at the first vertex of its D-th chain.
// phi^C(v) counts uncovered relevant subpaths on which v is the first vertex
// of its own chain; phi(X) aggregates over v in X.
// ---------------------------------------------------------------------------
struct cover_potentials {
    int k = 0;
    std::vector<std::vector<std::int64_t>> phi_node; // [tree][vertex]
    std::vector<std::int64_t> phi_chain;             // [chain]
    std::vector<char> picked;
};

inline bool relevant_endpoint(const dfs_forest& f, int t, vertex v) {
    return f.alive[t][v] && f.cover->chain_of[v] >= 0 && f.cover->chain_of[v] != t &&
           f.nd[t][v] == f.depth_limit && f.is_runhead(t, v);
}

inline cover_potentials init_potentials(const dfs_forest& f) {
    if (f.depth_limit < 1) throw std::invalid_argument("init_potentials: truncate the forest first");
    cover_potentials cp;
    cp.k = f.k;
    cp.phi_node.assign(f.k, std::vector<std::int64_t>(f.n, 0));
    cp.phi_chain.assign(f.k, 0);
    cp.picked.assign(f.k, 0);
    std::vector<std::int64_t> cnt(f.n, 0);
    for (int t = 0; t < f.k; ++t) {
        std::fill(cnt.begin(), cnt.end(), 0);
        const auto& pre = f.preorder[t];
        for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
            vertex v = *it;
            if (!f.alive[t][v]) continue;
            std::int64_t c = relevant_endpoint(f, t, v) ? 1 : 0;
            for (std::int32_t ch : f.children[t][v]) {
                if (!f.alive[t][ch]) continue;
                // endpoints under the spine child belong to deeper origins
                if (f.cover->chain_of[v] == t && f.cover->chain_of[ch] == t) continue;
                c += cnt[ch];
            }
            cnt[v] = c;
            bool carries = f.cover->chain_of[v] == t || f.is_runhead(t, v);
            if (carries && c > 0) {
                cp.phi_node[t][v] = c;
                cp.phi_chain[f.cover->chain_of[v]] += c;
            }
        }
    }
    return cp;
}

// Brute-force potentials with an arbitrary covered-chain set; the oracle the
// incremental updates are tested against.
inline cover_potentials potentials_bruteforce(const dfs_forest& f, const std::vector<char>& covered) {
    cover_potentials cp;
    cp.k = f.k;
    cp.phi_node.assign(f.k, std::vector<std::int64_t>(f.n, 0));
    cp.phi_chain.assign(f.k, 0);
    cp.picked = covered;
    for (int t = 0; t < f.k; ++t) {
        for (vertex origin : f.cover->chains[t].verts) {
            if (!f.in_tree(t, origin) || !f.alive[t][origin]) continue;
            // walk off-spine subtrees, collecting first-of-chain vertices
            std::vector<vertex> heads; // run heads on the current path
            std::function<void(vertex, int)> go = [&](vertex x, int chains) {
                // the origin is accounted separately, even when it is the root
                bool head = x != origin && f.is_runhead(t, x);
                if (head) heads.push_back(x);
                bool endpoint = chains == f.depth_limit && f.cover->chain_of[x] >= 0 && head;
                if (endpoint) {
                    bool cov = covered[t] != 0;
                    if (!cov) {
                        // covered iff some vertex on the origin..x path lies on a covered chain
                        vertex w = x;
                        while (w != origin && !cov) {
                            if (f.cover->chain_of[w] >= 0 && covered[f.cover->chain_of[w]]) cov = true;
                            w = f.parent[t][w];
                        }
                        if (f.cover->chain_of[origin] >= 0 && covered[f.cover->chain_of[origin]]) cov = true;
                    }
                    if (!cov) {
                        cp.phi_node[t][origin] += 1;
                        cp.phi_chain[f.cover->chain_of[origin]] += 1;
                        for (vertex h : heads) {
                            cp.phi_node[t][h] += 1;
                            cp.phi_chain[f.cover->chain_of[h]] += 1;
                        }
                    }
                }
                if (chains < f.depth_limit)
                    for (std::int32_t chld : f.children[t][x]) {
                        if (!f.alive[t][chld]) continue;
                        if (x == origin && f.cover->chain_of[chld] == t) continue; // stay off the spine
                        int nc = chains + (f.cover->chain_of[chld] >= 0 &&
                                                   f.cover->chain_of[chld] != f.cover->chain_of[x]
                                               ? 1
                                               : 0);
                        go(chld, nc);
                    }
                if (head) heads.pop_back();
            };
            go(origin, 1);
        }
    }
    return cp;
}

struct setcover_state {
    dfs_forest forest;
    cover_potentials pot;
};

// Pick chain X: every uncovered relevant subpath touching X becomes covered.
// Ancestor potentials shrink by the subtree counts, subtrees are tombstoned.
inline void pick_and_update(setcover_state& st, int x_chain) {
    dfs_forest& f = st.forest;
    cover_potentials& cp = st.pot;
    if (x_chain < 0 || x_chain >= f.k) throw std::invalid_argument("pick_and_update: bad chain id");
    if (cp.picked[x_chain]) throw std::invalid_argument("pick_and_update: chain already picked");
    cp.picked[x_chain] = 1;

    auto zero_subtree = [&](int t, vertex u) {
        std::vector<vertex> stack{u};
        while (!stack.empty()) {
            vertex v = stack.back();
            stack.pop_back();
            if (!f.alive[t][v]) continue;
            f.alive[t][v] = 0;
            if (cp.phi_node[t][v] > 0) {
                cp.phi_chain[f.cover->chain_of[v]] -= cp.phi_node[t][v];
                cp.phi_node[t][v] = 0;
            }
            for (std::int32_t ch : f.children[t][v]) stack.push_back(ch);
        }
    };

    // retire the picked chain's own tree: all of its subpaths contain a node
    // of X (the origin), so they are covered now
    for (vertex v : f.preorder[x_chain]) {
        if (!f.alive[x_chain][v]) continue;
        if (cp.phi_node[x_chain][v] > 0) {
            cp.phi_chain[f.cover->chain_of[v]] -= cp.phi_node[x_chain][v];
            cp.phi_node[x_chain][v] = 0;
        }
        f.alive[x_chain][v] = 0;
    }

    // occurrences of X's vertices in the other trees, in chain order so the
    // run head is handled before the rest of its run
    for (vertex u : f.cover->chains[x_chain].verts) {
        for (int t = 0; t < f.k; ++t) {
            if (t == x_chain || !f.in_tree(t, u) || !f.alive[t][u]) continue;
            std::int64_t amount = cp.phi_node[t][u];
            if (amount > 0) {
                vertex origin = f.tf[t][u];
                for (vertex w = f.parent[t][u]; w >= 0; w = f.parent[t][w]) {
                    // only run heads and the origin spine vertex carry counts
                    if (f.cover->chain_of[w] == t || f.is_runhead(t, w)) {
                        if (cp.phi_node[t][w] < amount)
                            throw std::logic_error("pick_and_update: ancestor count below subtree count");
                        cp.phi_node[t][w] -= amount;
                        cp.phi_chain[f.cover->chain_of[w]] -= amount;
                    }
                    if (w == origin) break;
                }
            }
            zero_subtree(t, u);
        }
    }
}

// Greedy set cover over chains: repeatedly pick the maximum-potential chain
// until none is positive. Ties go to the lowest chain id.
inline std::vector<int> greedy_setcover(setcover_state& st) {
    std::vector<int> picked;
    for (;;) {
        int best = -1;
        std::int64_t val = 0;
        for (int c = 0; c < st.pot.k; ++c)
            if (!st.pot.picked[c] && st.pot.phi_chain[c] > val) {
                val = st.pot.phi_chain[c];
                best = c;
            }
        if (best < 0) break;
        pick_and_update(st, best);
        picked.push_back(best);
    }
    return picked;
}

// ---------------------------------------------------------------------------
// Full pipeline (Theorem: deterministic O(D)-shortcut sets).
// ---------------------------------------------------------------------------
struct det_shortcut_result {
    shortcut_set h;
    int dag_n = 0;
    std::size_t picked_chains = 0;
    std::size_t entry_edges = 0;       // |Ĥ|
    std::size_t supershortcut_edges = 0;
    std::size_t max_chain_len = 0;
};

struct det_shortcut_options {
    bool oracle_check = false; // compare potentials against brute force after every pick
    d4_scheme scheme = d4_scheme::log_star;
};

inline det_shortcut_result det_shortcut(const graph& g, int depth,
                                        const det_shortcut_options& opts = {}) {
    if (depth < 2) throw std::invalid_argument("det_shortcut: D >= 2");
    det_shortcut_result res;
    if (g.n <= 1) return res;
    condensed_dag cd = condense(g);
    const graph& dag = cd.dag;
    const int n = cd.comp_count;
    res.dag_n = n;
    res.h = cd.star_edges;
    if (n == 1) return res;

    int ell = std::max(1, std::min(n, (n + depth - 1) / depth));
    int max_len = (n + ell - 1) / ell;
    chain_cover cover = split_chains(disjoint_chains(greedy_ell_cover(dag, ell), n), max_len);
    for (const chain& c : cover.chains) res.max_chain_len = std::max(res.max_chain_len, c.verts.size());

    shortcut_set ss = supershortcut(dag, cover, opts.scheme);
    res.supershortcut_edges = ss.size();
    for (const sc_edge& e : ss.edges) res.h.add(cd.hub[e.u], cd.hub[e.v]);

    setcover_state st;
    st.forest = consistent_dfs(dag, cover);
    truncate_forest(st.forest, depth);
    st.pot = init_potentials(st.forest);

    std::vector<int> picked;
    if (opts.oracle_check) {
        for (;;) {
            int best = -1;
            std::int64_t val = 0;
            for (int c = 0; c < st.pot.k; ++c)
                if (!st.pot.picked[c] && st.pot.phi_chain[c] > val) {
                    val = st.pot.phi_chain[c];
                    best = c;
                }
            if (best < 0) break;
            pick_and_update(st, best);
            picked.push_back(best);
            auto expect = potentials_bruteforce(st.forest, st.pot.picked);
            for (int t = 0; t < st.pot.k; ++t) {
                if (expect.phi_chain[t] != st.pot.phi_chain[t])
                    throw std::logic_error("det_shortcut: phi(chain) mismatch vs brute force");
                for (vertex v = 0; v < st.forest.n; ++v)
                    if (expect.phi_node[t][v] != st.pot.phi_node[t][v])
                        throw std::logic_error("det_shortcut: phi^C(v) mismatch vs brute force");
            }
        }
    } else {
        picked = greedy_setcover(st);
    }
    res.picked_chains = picked.size();

    // Ĥ = { e(v, C) : v on a picked chain, C picked }
    reach_matrix tc = transitive_closure(dag);
    std::set<std::pair<vertex, vertex>> hat;
    for (int c : picked)
        for (int c2 : picked)
            for (vertex v : cover.chains[c].verts) {
                auto e = entry(tc, v, cover.chains[c2]);
                if (e && e->second != v) hat.insert({v, e->second});
            }
    res.entry_edges = hat.size();
    for (auto [u, v] : hat) res.h.add(cd.hub[u], cd.hub[v]);
    return res;
}

inline std::int64_t det_shortcut_bound(int depth, bool acyclic_input) {
    std::int64_t dag_bound = 10 * static_cast<std::int64_t>(depth);
    return acyclic_input ? dag_bound : 3 * dag_bound + 2;
}

} // namespace hopforge
