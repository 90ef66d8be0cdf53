#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/search.hpp"

namespace hopforge {

// Canonical shortest path: among all shortest s->t paths, the one with the
// lexicographically smallest vertex sequence. These are consistent (any
// subpath of a canonical path is itself canonical), which the diagnostics
// below rely on.
class canonical_paths {
public:
    explicit canonical_paths(const graph& aug) : n_(aug.n), aug_(aug), dist_(all_pairs_bfs(aug)) {}

    bool reachable(vertex s, vertex t) const { return d(s, t) != kNoDist; }
    std::int32_t d(vertex s, vertex t) const { return dist_[static_cast<std::size_t>(s) * n_ + t]; }

    // vertex sequence of the canonical s->t path (s == t gives {s})
    std::vector<vertex> path(vertex s, vertex t) const {
        std::vector<vertex> seq{s};
        vertex cur = s;
        while (cur != t) {
            vertex pick = -1;
            for (const auto& a : aug_.out[cur])
                if (d(a.to, t) != kNoDist && d(a.to, t) == d(cur, t) - 1 && (pick == -1 || a.to < pick))
                    pick = a.to;
            if (pick == -1) throw std::logic_error("canonical_paths: target not reachable");
            seq.push_back(pick);
            cur = pick;
        }
        return seq;
    }

private:
    int n_;
    graph aug_;
    std::vector<std::int32_t> dist_;
};

// Path cover Q from the potential-reduction analysis: greedily admit any
// canonical path with at most beta/4 nodes of which at least beta/8 are not
// yet owned. Each admitted path owns its previously-unowned nodes.
struct path_cover_q {
    struct entry {
        vertex s, t;
        std::vector<vertex> nodes;
        std::vector<vertex> owned;
    };
    std::vector<entry> paths;
    std::vector<std::int32_t> owner; // vertex -> index into paths, or -1
};

inline path_cover_q build_path_cover_q(const graph& g, const shortcut_set& h, std::int64_t beta) {
    graph aug = augment(g, h);
    canonical_paths cp(aug);
    path_cover_q q;
    q.owner.assign(g.n, -1);
    for (vertex s = 0; s < g.n; ++s)
        for (vertex t = 0; t < g.n; ++t) {
            if (s == t || !cp.reachable(s, t)) continue;
            std::int64_t nodes = cp.d(s, t) + 1;
            if (4 * nodes > beta) continue; // more than beta/4 nodes
            auto seq = cp.path(s, t);
            std::int64_t unowned = 0;
            for (vertex v : seq)
                if (q.owner[v] == -1) ++unowned;
            if (8 * unowned < beta) continue; // owns fewer than beta/8 nodes
            path_cover_q::entry e;
            e.s = s;
            e.t = t;
            e.nodes = seq;
            for (vertex v : seq)
                if (q.owner[v] == -1) {
                    q.owner[v] = static_cast<std::int32_t>(q.paths.size());
                    e.owned.push_back(v);
                }
            q.paths.push_back(std::move(e));
        }
    return q;
}

// Stickiness σ of the active canonical paths w.r.t. a path cover Q:
// the average size of (suffix(π) ∩ q*) over intersecting (π, q) pairs,
// where suffix(π) holds the last ⌊|π|/4⌋ nodes. σ >= 1 whenever defined.
// Returns numerator/denominator so callers can check the exact ratio.
struct stickiness_result {
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;
    double sigma() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

inline stickiness_result stickiness(const graph& g, const shortcut_set& h, std::int64_t beta,
                                    const path_cover_q& q) {
    graph aug = augment(g, h);
    canonical_paths cp(aug);
    stickiness_result r;
    bool any_active = false;
    std::vector<std::int64_t> per_path(q.paths.size());
    for (vertex s = 0; s < g.n; ++s)
        for (vertex t = 0; t < g.n; ++t) {
            if (s == t || !cp.reachable(s, t) || cp.d(s, t) < beta) continue;
            any_active = true;
            auto seq = cp.path(s, t);
            std::size_t suffix_len = seq.size() / 4;
            std::fill(per_path.begin(), per_path.end(), 0);
            for (std::size_t i = seq.size() - suffix_len; i < seq.size(); ++i) {
                std::int32_t owner = q.owner[seq[i]];
                if (owner >= 0) ++per_path[owner];
            }
            for (std::int64_t c : per_path)
                if (c > 0) {
                    r.numerator += c;
                    r.denominator += 1;
                }
        }
    if (!any_active) throw std::invalid_argument("stickiness: no active pairs, sigma undefined");
    if (r.denominator == 0) throw std::logic_error("stickiness: active path suffixes miss the cover entirely");
    return r;
}

} // namespace hopforge
