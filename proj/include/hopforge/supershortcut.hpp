#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hopforge/chains.hpp"
#include "hopforge/graph.hpp"

namespace hopforge {

// Shortcut plan for the path 0..k-1; consecutive-position edges are assumed
// present. All plan edges go forward (i < j).
struct path_shortcut_plan {
    int k = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
};

enum class d4_scheme {
    log_star,    // hopbound 4, O(k log* k) edges
    binary_lift, // hopbound 2, O(k log k) edges (cross-check fallback)
};

namespace detail {

// Midpoint recursion over a sorted position set: every ordered pair of set
// members gets a route of <= 2 plan hops (x -> mid -> y).
inline void diameter2(const std::vector<std::int32_t>& pos, int lo, int hi,
                      std::vector<std::pair<std::int32_t, std::int32_t>>& out) {
    if (hi - lo < 1) return;
    int mid = (lo + hi) / 2;
    for (int i = lo; i <= hi; ++i) {
        if (i < mid && pos[mid] != pos[i] + 1) out.emplace_back(pos[i], pos[mid]);
        if (i > mid && pos[i] != pos[mid] + 1) out.emplace_back(pos[mid], pos[i]);
    }
    diameter2(pos, lo, mid - 1, out);
    diameter2(pos, mid + 1, hi, out);
}

// Hopbound-4 recursion: blocks of size ~log k, every element jumps to the
// next block's first element, block heads reach every block member, and a
// diameter-2 structure connects the block heads. Levels shrink k -> log k,
// giving O(k log* k) edges total.
inline void d4_rec(std::int32_t lo, std::int32_t hi,
                   std::vector<std::pair<std::int32_t, std::int32_t>>& out) {
    std::int64_t k = static_cast<std::int64_t>(hi) - lo + 1;
    if (k <= 5) return;
    int block = std::max<int>(5, std::bit_width(static_cast<std::uint64_t>(k)));
    std::vector<std::int32_t> heads;
    for (std::int64_t b = lo; b <= hi; b += block) heads.push_back(static_cast<std::int32_t>(b));

    for (std::size_t t = 0; t < heads.size(); ++t) {
        std::int32_t begin = heads[t];
        std::int32_t end = t + 1 < heads.size() ? heads[t + 1] - 1 : hi;
        // every element -> next block head
        if (t + 1 < heads.size()) {
            std::int32_t nh = heads[t + 1];
            for (std::int32_t x = begin; x <= end; ++x)
                if (nh != x + 1) out.emplace_back(x, nh);
        }
        // block head -> every element
        for (std::int32_t y = begin + 2; y <= end; ++y) out.emplace_back(begin, y);
        d4_rec(begin, end, out);
    }
    diameter2(heads, 0, static_cast<int>(heads.size()) - 1, out);
}

} // namespace detail

inline path_shortcut_plan shortcut_path_d4(int k, d4_scheme scheme = d4_scheme::log_star) {
    if (k < 1) throw std::invalid_argument("shortcut_path_d4: k >= 1");
    path_shortcut_plan plan;
    plan.k = k;
    if (k <= 5) return plan; // consecutive edges already give diameter <= 4
    if (scheme == d4_scheme::binary_lift) {
        std::vector<std::int32_t> pos(k);
        for (int i = 0; i < k; ++i) pos[i] = i;
        detail::diameter2(pos, 0, k - 1, plan.edges);
    } else {
        detail::d4_rec(0, k - 1, plan.edges);
    }
    // plans may repeat an edge across recursion levels; keep them unique
    std::sort(plan.edges.begin(), plan.edges.end());
    plan.edges.erase(std::unique(plan.edges.begin(), plan.edges.end()), plan.edges.end());
    return plan;
}

// Super-shortcut a chain cover: consecutive chain edges (when not already
// in g) plus per-chain plan edges, all mapped to vertex ids. Afterwards any
// ordered on-chain pair is within 4 hops in G ∪ H.
template <class W>
shortcut_set supershortcut(const digraph<W>& g, const chain_cover& cc,
                           d4_scheme scheme = d4_scheme::log_star) {
    shortcut_set h;
    std::unordered_set<std::uint64_t> seen;
    auto key = [&](vertex u, vertex v) {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(g.n) + static_cast<std::uint64_t>(v);
    };
    auto push = [&](vertex u, vertex v) {
        if (u == v) return;
        if (!seen.insert(key(u, v)).second) return;
        if (g.has_edge(u, v)) return;
        h.add(u, v);
    };
    for (const chain& c : cc.chains) {
        const auto& vs = c.verts;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) push(vs[i], vs[i + 1]);
        auto plan = shortcut_path_d4(static_cast<int>(vs.size()), scheme);
        for (auto [i, j] : plan.edges) push(vs[i], vs[j]);
    }
    return h;
}

} // namespace hopforge
