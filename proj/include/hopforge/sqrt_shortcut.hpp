#pragma once

#include <cmath>

#include "hopforge/chains.hpp"
#include "hopforge/scc.hpp"
#include "hopforge/supershortcut.hpp"

namespace hopforge {

// Maps a shortcut set on the condensation to original vertex ids via the
// component hubs, and appends the star edges.
inline shortcut_set lift_from_condensation(const condensed_dag& c, const shortcut_set& comp_h) {
    shortcut_set h = c.star_edges;
    for (const sc_edge& e : comp_h.edges) h.add(c.hub[e.u], c.hub[e.v]);
    return h;
}

// √n pipeline: condense, build a ⌈√n⌉-chain cover of the condensation,
// super-shortcut every chain. For a DAG the result has hopbound <= 7⌈√n⌉;
// through SCC stars the general bound is 3·(7⌈√n⌉) + 2.
inline shortcut_set sqrt_shortcut(const graph& g, d4_scheme scheme = d4_scheme::log_star) {
    if (g.n <= 1) return {};
    condensed_dag c = condense(g);
    const int nc = c.comp_count;
    int ell = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(nc))));
    ell = std::max(1, std::min(ell, nc));
    auto pm = greedy_ell_cover(c.dag, ell);
    chain_cover cover = disjoint_chains(pm, nc);
    shortcut_set comp_h = supershortcut(c.dag, cover, scheme);
    return lift_from_condensation(c, comp_h);
}

inline std::int64_t sqrt_shortcut_bound(int n, bool acyclic_input) {
    std::int64_t root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::int64_t dag_bound = 7 * root;
    return acyclic_input ? dag_bound : 3 * dag_bound + 2;
}

} // namespace hopforge
