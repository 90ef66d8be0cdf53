#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/search.hpp"

namespace hopforge {

enum class failure_kind {
    none,
    non_tc_edge,         // a shortcut/hopset edge outside the transitive closure
    hopbound_violation,  // some reachable pair exceeds the bound
    distance_corrupted,  // hopset edge weight != dist_G, or a distance changed
};

inline const char* to_string(failure_kind k) {
    switch (k) {
        case failure_kind::none: return "ok";
        case failure_kind::non_tc_edge: return "non-tc-edge";
        case failure_kind::hopbound_violation: return "hopbound-violation";
        case failure_kind::distance_corrupted: return "distance-corrupted";
    }
    return "?";
}

struct validation_report {
    bool valid = true;
    failure_kind kind = failure_kind::none;
    vertex worst_u = -1;
    vertex worst_v = -1;
    std::int64_t worst_value = 0;   // distance/hopdistance of the worst pair
    std::int64_t measured_bound = 0; // max over all reachable pairs
    std::string detail;
};

inline std::ostream& operator<<(std::ostream& os, const validation_report& r) {
    os << (r.valid ? "valid" : "INVALID") << " kind=" << to_string(r.kind)
       << " measured=" << r.measured_bound;
    if (r.worst_u >= 0) os << " worst=(" << r.worst_u << "," << r.worst_v << ")=" << r.worst_value;
    if (!r.detail.empty()) os << " [" << r.detail << "]";
    return os;
}

// Shortcut-set validity: every H edge in tc(G), and every reachable pair at
// unweighted distance <= beta in G ∪ H.
inline validation_report validate_shortcut_set(const graph& g, const shortcut_set& h,
                                               std::int64_t beta, int threads = 1) {
    validation_report rep;
    reach_matrix tc = transitive_closure(g);
    for (const sc_edge& e : h.edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n || !tc(e.u, e.v)) {
            rep.valid = false;
            rep.kind = failure_kind::non_tc_edge;
            rep.worst_u = e.u;
            rep.worst_v = e.v;
            rep.detail = "edge not in transitive closure";
            return rep;
        }
    }
    graph aug = augment(g, h);
    std::vector<std::int32_t> worst_per_src(g.n, 0);
    std::vector<vertex> worst_t(g.n, -1);
    parallel_for(
        g.n,
        [&](int s) {
            auto d = bfs_from(aug, s);
            for (vertex t = 0; t < g.n; ++t) {
                if (t == s || !tc(s, t)) continue;
                if (d[t] > worst_per_src[s]) {
                    worst_per_src[s] = d[t];
                    worst_t[s] = t;
                }
            }
        },
        threads);
    for (vertex s = 0; s < g.n; ++s) {
        if (worst_per_src[s] > rep.measured_bound) {
            rep.measured_bound = worst_per_src[s];
            rep.worst_u = s;
            rep.worst_v = worst_t[s];
            rep.worst_value = worst_per_src[s];
        }
    }
    if (rep.measured_bound > beta) {
        rep.valid = false;
        rep.kind = failure_kind::hopbound_violation;
    }
    return rep;
}

// Exact-hopset validity: H edge weights equal dist_G, distances in G ∪ H equal
// distances in G, and every reachable pair has hopdistance <= beta.
inline validation_report validate_hopset(const graph& g, const shortcut_set& h,
                                         std::int64_t beta, int threads = 1) {
    validation_report rep;
    if (!g.weighted) {
        // unweighted graphs are fine as weight-1 graphs
    }
    reach_matrix tc = transitive_closure(g);
    for (const sc_edge& e : h.edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n || !tc(e.u, e.v)) {
            rep.valid = false;
            rep.kind = failure_kind::non_tc_edge;
            rep.worst_u = e.u;
            rep.worst_v = e.v;
            rep.detail = "edge not in transitive closure";
            return rep;
        }
    }
    auto base = all_pairs_dijkstra_lex(g, threads);
    for (const sc_edge& e : h.edges) {
        if (e.w != base.d(e.u, e.v)) {
            rep.valid = false;
            rep.kind = failure_kind::distance_corrupted;
            rep.worst_u = e.u;
            rep.worst_v = e.v;
            rep.worst_value = e.w;
            rep.detail = "hopset edge weight differs from dist_G";
            return rep;
        }
    }
    graph aug = augment(g, h);
    aug.weighted = true;
    auto after = all_pairs_dijkstra_lex(aug, threads);
    for (vertex s = 0; s < g.n && rep.valid; ++s) {
        for (vertex t = 0; t < g.n; ++t) {
            if (s == t || !tc(s, t)) continue;
            if (after.d(s, t) != base.d(s, t)) {
                rep.valid = false;
                rep.kind = failure_kind::distance_corrupted;
                rep.worst_u = s;
                rep.worst_v = t;
                rep.worst_value = after.d(s, t);
                rep.detail = "distance changed by hopset";
                break;
            }
            std::int32_t hd = after.h(s, t);
            if (hd > rep.measured_bound) {
                rep.measured_bound = hd;
                rep.worst_u = s;
                rep.worst_v = t;
                rep.worst_value = hd;
            }
        }
    }
    if (rep.valid && rep.measured_bound > beta) {
        rep.valid = false;
        rep.kind = failure_kind::hopbound_violation;
    }
    return rep;
}

} // namespace hopforge
