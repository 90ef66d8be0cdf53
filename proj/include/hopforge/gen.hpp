#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/rng.hpp"

namespace hopforge {

// Generators are deterministic under (parameters, seed).

inline graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    graph g(n, false);
    for (vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline graph gen_total_order(int n) {
    if (n < 1) throw std::invalid_argument("total_order: n >= 1");
    graph g(n, false);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: rows, cols >= 1");
    graph g(rows * cols, false);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

// Edges (i, j) for i < j, each present with probability p.
inline graph gen_random_dag(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_dag: n >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("random_dag: p in [0,1]");
    rng r(seed);
    graph g(n, false);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (r.bernoulli(p)) g.add_edge(u, v);
    return g;
}

inline graph gen_random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_digraph: n >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("random_digraph: p in [0,1]");
    rng r(seed);
    graph g(n, false);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = 0; v < n; ++v)
            if (u != v && r.bernoulli(p)) g.add_edge(u, v);
    return g;
}

// Layered DAG: vertices in consecutive blocks of `width`, random edges between
// adjacent layers. Every vertex keeps at least one out-edge (and one in-edge)
// across the layer boundary, so the diameter is Θ(n / width).
inline graph gen_layered(int n, int width, double p, std::uint64_t seed) {
    if (n < 1 || width < 1) throw std::invalid_argument("layered: n, width >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("layered: p in [0,1]");
    rng r(seed);
    graph g(n, false);
    const int layers = (n + width - 1) / width;
    auto layer_begin = [&](int l) { return l * width; };
    auto layer_end = [&](int l) { return std::min(n, (l + 1) * width); };
    for (int l = 0; l + 1 < layers; ++l) {
        for (vertex u = layer_begin(l); u < layer_end(l); ++u)
            for (vertex v = layer_begin(l + 1); v < layer_end(l + 1); ++v)
                if (r.bernoulli(p)) g.add_edge(u, v);
        // connectivity fallbacks
        for (vertex u = layer_begin(l); u < layer_end(l); ++u)
            if (g.out[u].empty()) {
                vertex v = layer_begin(l + 1) +
                           static_cast<vertex>(r.next_below(layer_end(l + 1) - layer_begin(l + 1)));
                g.add_edge(u, v);
            }
        for (vertex v = layer_begin(l + 1); v < layer_end(l + 1); ++v)
            if (g.in[v].empty()) {
                vertex u = layer_begin(l) +
                           static_cast<vertex>(r.next_below(layer_end(l) - layer_begin(l)));
                g.add_edge(u, v);
            }
    }
    return g;
}

inline graph with_random_weights(graph g, weight_t wmax, std::uint64_t seed) {
    if (wmax < 1) throw std::invalid_argument("with_random_weights: wmax >= 1");
    rng r(seed ^ 0x5eedULL);
    g.weighted = true;
    for (vertex u = 0; u < g.n; ++u)
        for (auto& a : g.out[u]) {
            a.w = r.next_range(1, wmax);
            for (auto& b : g.in[a.to])
                if (b.to == u) b.w = a.w;
        }
    return g;
}

inline graph gen_random_weighted_dag(int n, double p, weight_t wmax, std::uint64_t seed) {
    return with_random_weights(gen_random_dag(n, p, seed), wmax, seed);
}

} // namespace hopforge
