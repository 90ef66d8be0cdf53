#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace hopforge {

using vertex = std::int32_t;
using weight_t = std::int64_t;

constexpr std::int32_t kNoDist = -1;

template <class W>
struct arc {
    vertex to;
    W w;
};

// Directed graph, vertices 0..n-1, no self-loops, no parallel edges.
// Immutable once built; algorithms treat it as read-only.
template <class W = weight_t>
struct digraph {
    int n = 0;
    bool weighted = false;
    std::vector<std::vector<arc<W>>> out;
    std::vector<std::vector<arc<W>>> in; // arc::to is the edge source here

    digraph() = default;
    digraph(int n_, bool weighted_) : n(n_), weighted(weighted_), out(n_), in(n_) {}

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& a : out) m += a.size();
        return m;
    }

    bool has_edge(vertex u, vertex v) const {
        for (const auto& a : out[u])
            if (a.to == v) return true;
        return false;
    }

    // Returns false (and adds nothing) for self-loops and duplicates.
    bool add_edge(vertex u, vertex v, W w = W{1}) {
        if (u == v) return false;
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("add_edge: vertex out of range");
        if (has_edge(u, v)) return false;
        out[u].push_back({v, w});
        in[v].push_back({u, w});
        return true;
    }
};

using graph = digraph<weight_t>;

// Shortcut/hopset edge. Weight is present only in hopset (weighted) mode.
struct sc_edge {
    vertex u;
    vertex v;
    weight_t w = 1;
};

struct shortcut_set {
    bool weighted = false;
    std::vector<sc_edge> edges;

    std::size_t size() const { return edges.size(); }
    void add(vertex u, vertex v) { edges.push_back({u, v, 1}); }
    void add(vertex u, vertex v, weight_t w) { edges.push_back({u, v, w}); }
};

// G union H. Duplicate edges are dropped (they never affect distances);
// a weighted duplicate with a smaller weight replaces the original. Edge
// weights come from H when H is weighted (hopset mode), else they are 1.
template <class W>
digraph<W> augment(const digraph<W>& g, const shortcut_set& h) {
    digraph<W> a(g.n, g.weighted || h.weighted);
    a.out = g.out;
    a.in = g.in;
    for (const sc_edge& e : h.edges) {
        if (e.u == e.v) continue;
        W w = h.weighted ? W{e.w} : W{1};
        bool dup = false;
        for (auto& ar : a.out[e.u]) {
            if (ar.to == e.v) {
                dup = true;
                if (w < ar.w) {
                    ar.w = w;
                    for (auto& br : a.in[e.v])
                        if (br.to == e.u) br.w = w;
                }
                break;
            }
        }
        if (!dup) {
            a.out[e.u].push_back({e.v, w});
            a.in[e.v].push_back({e.u, w});
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Text format. Graphs: "n m [weighted]" then m lines "u v [w]".
// Shortcut sets: "n k [weighted]" then k lines "u v [w]".
// ---------------------------------------------------------------------------

struct parse_result {
    graph g;
    std::vector<std::string> warnings;
};

inline parse_result parse_graph(std::istream& is) {
    parse_result res;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("parse_graph: empty input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    std::string flag;
    if (!(head >> n >> m)) throw std::runtime_error("parse_graph: bad header");
    bool weighted = false;
    if (head >> flag) {
        if (flag != "weighted") throw std::runtime_error("parse_graph: bad header flag '" + flag + "'");
        weighted = true;
    }
    if (n < 0 || m < 0) throw std::runtime_error("parse_graph: negative header");
    res.g = graph(static_cast<int>(n), weighted);
    long long read = 0;
    while (read < m) {
        if (!std::getline(is, line)) throw std::runtime_error("parse_graph: unexpected end of input");
        std::istringstream ls(line);
        long long u, v;
        long long w = 1;
        if (!(ls >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue; // blank line
            throw std::runtime_error("parse_graph: bad edge line '" + line + "'");
        }
        if (weighted && !(ls >> w)) throw std::runtime_error("parse_graph: missing weight on '" + line + "'");
        ++read;
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("parse_graph: vertex out of range on '" + line + "'");
        if (weighted && w <= 0) throw std::runtime_error("parse_graph: non-positive weight on '" + line + "'");
        if (u == v) {
            res.warnings.push_back("dropped self-loop at vertex " + std::to_string(u));
            continue;
        }
        if (!res.g.add_edge(static_cast<vertex>(u), static_cast<vertex>(v), w))
            res.warnings.push_back("dropped duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return res;
}

inline void write_graph(std::ostream& os, const graph& g) {
    os << g.n << ' ' << g.edge_count();
    if (g.weighted) os << " weighted";
    os << '\n';
    for (vertex u = 0; u < g.n; ++u)
        for (const auto& a : g.out[u]) {
            os << u << ' ' << a.to;
            if (g.weighted) os << ' ' << a.w;
            os << '\n';
        }
}

inline shortcut_set parse_shortcut_set(std::istream& is, int n_expected = -1) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("parse_shortcut_set: empty input");
    std::istringstream head(line);
    long long n = -1, k = -1;
    std::string flag;
    if (!(head >> n >> k)) throw std::runtime_error("parse_shortcut_set: bad header");
    shortcut_set h;
    if (head >> flag) {
        if (flag != "weighted") throw std::runtime_error("parse_shortcut_set: bad header flag");
        h.weighted = true;
    }
    if (n_expected >= 0 && n != n_expected)
        throw std::runtime_error("parse_shortcut_set: vertex count mismatch with graph");
    long long read = 0;
    while (read < k) {
        if (!std::getline(is, line)) throw std::runtime_error("parse_shortcut_set: unexpected end of input");
        std::istringstream ls(line);
        long long u, v, w = 1;
        if (!(ls >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::runtime_error("parse_shortcut_set: bad edge line '" + line + "'");
        }
        if (h.weighted && !(ls >> w)) throw std::runtime_error("parse_shortcut_set: missing weight");
        ++read;
        if (u < 0 || v < 0 || u >= n) throw std::runtime_error("parse_shortcut_set: vertex out of range");
        h.edges.push_back({static_cast<vertex>(u), static_cast<vertex>(v), w});
    }
    return h;
}

inline void write_shortcut_set(std::ostream& os, const shortcut_set& h, int n) {
    os << n << ' ' << h.edges.size();
    if (h.weighted) os << " weighted";
    os << '\n';
    for (const sc_edge& e : h.edges) {
        os << e.u << ' ' << e.v;
        if (h.weighted) os << ' ' << e.w;
        os << '\n';
    }
}

} // namespace hopforge
