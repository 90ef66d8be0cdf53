#pragma once

#include <cstdint>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/scc.hpp"

namespace hopforge {

// Per-source reachability bitsets (reach(u,u) is always true).
class reach_matrix {
public:
    reach_matrix() = default;
    reach_matrix(int n) : n_(n), stride_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * stride_, 0) {
        for (int v = 0; v < n; ++v) set(v, v);
    }

    int n() const { return n_; }

    bool operator()(vertex u, vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }

    void set(vertex u, vertex v) {
        bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ULL << (v & 63);
    }

    // row(u) |= row(v)
    void or_row(vertex u, vertex v) {
        std::uint64_t* a = &bits_[static_cast<std::size_t>(u) * stride_];
        const std::uint64_t* b = &bits_[static_cast<std::size_t>(v) * stride_];
        for (int i = 0; i < stride_; ++i) a[i] |= b[i];
    }

    std::size_t count_pairs() const {
        std::size_t c = 0;
        for (std::uint64_t w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c; // includes the n diagonal bits
    }

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Transitive closure via SCC condensation + bitset DP over the component DAG.
template <class W>
reach_matrix transitive_closure(const digraph<W>& g) {
    condensed_dag c = condense(g);
    const int k = c.comp_count;
    reach_matrix comp_reach(k);
    // component ids are topologically ordered; process sinks first
    for (int v = k - 1; v >= 0; --v)
        for (const auto& a : c.dag.out[v]) comp_reach.or_row(v, a.to);

    reach_matrix r(g.n);
    // members of a component see everything their component sees
    std::vector<std::vector<vertex>> members(k);
    for (vertex v = 0; v < g.n; ++v) members[c.comp_of[v]].push_back(v);
    for (int comp = 0; comp < k; ++comp) {
        for (vertex u : members[comp]) {
            for (int target_comp = 0; target_comp < k; ++target_comp) {
                if (target_comp == comp || comp_reach(comp, target_comp)) {
                    for (vertex v : members[target_comp])
                        if (u != v) r.set(u, v);
                }
            }
        }
    }
    return r;
}

} // namespace hopforge
