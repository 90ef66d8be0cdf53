#pragma once

#include <algorithm>
#include <vector>

#include "hopforge/graph.hpp"

namespace hopforge {

// Tarjan, iterative. Components come out in reverse topological order
// (every component is emitted after all components it can reach).
template <class W>
std::vector<std::vector<vertex>> strongly_connected_components(const digraph<W>& g) {
    const int n = g.n;
    std::vector<std::int32_t> num(n, -1), low(n, 0), edge_pos(n, 0);
    std::vector<vertex> stack, call;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<vertex>> comps;
    std::int32_t counter = 0;

    for (vertex root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        call.push_back(root);
        while (!call.empty()) {
            vertex v = call.back();
            if (num[v] == -1) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (edge_pos[v] < static_cast<std::int32_t>(g.out[v].size())) {
                vertex to = g.out[v][edge_pos[v]].to;
                if (num[to] == -1) {
                    call.push_back(to);
                    descended = true;
                    break;
                }
                if (on_stack[to]) low[v] = std::min(low[v], num[to]);
                ++edge_pos[v];
            }
            if (descended) continue;
            call.pop_back();
            if (!call.empty()) {
                vertex parent = call.back();
                low[parent] = std::min(low[parent], low[v]);
                ++edge_pos[parent];
            }
            if (low[v] == num[v]) {
                std::vector<vertex> comp;
                for (;;) {
                    vertex w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

// Condensation plus the star edges that give every nontrivial SCC internal
// hop-distance <= 2. Hub = lowest-id vertex of the component.
struct condensed_dag {
    int original_n = 0;
    int comp_count = 0;
    std::vector<std::int32_t> comp_of; // original vertex -> component id
    std::vector<vertex> hub;           // component id -> lowest-id member
    graph dag;                         // component graph, acyclic, deduplicated
    shortcut_set star_edges;           // on original vertex ids
};

template <class W>
condensed_dag condense(const digraph<W>& g) {
    condensed_dag c;
    c.original_n = g.n;
    auto comps = strongly_connected_components(g);
    // reverse so component ids are in topological order (sources first)
    std::reverse(comps.begin(), comps.end());
    c.comp_count = static_cast<int>(comps.size());
    c.comp_of.assign(g.n, -1);
    c.hub.resize(c.comp_count);
    for (int i = 0; i < c.comp_count; ++i) {
        c.hub[i] = comps[i].front(); // sorted, so front = lowest id
        for (vertex v : comps[i]) c.comp_of[v] = i;
    }
    c.dag = graph(c.comp_count, false);
    for (vertex u = 0; u < g.n; ++u)
        for (const auto& a : g.out[u]) {
            int cu = c.comp_of[u], cv = c.comp_of[a.to];
            if (cu != cv) c.dag.add_edge(cu, cv);
        }
    for (int i = 0; i < c.comp_count; ++i) {
        for (vertex v : comps[i]) {
            if (v == c.hub[i]) continue;
            c.star_edges.add(c.hub[i], v);
            c.star_edges.add(v, c.hub[i]);
        }
    }
    return c;
}

template <class W>
bool is_acyclic(const digraph<W>& g) {
    for (const auto& comp : strongly_connected_components(g))
        if (comp.size() > 1) return false;
    return true;
}

// Topological order of an acyclic graph (throws on cycles).
template <class W>
std::vector<vertex> topological_order(const digraph<W>& g) {
    std::vector<std::int32_t> indeg(g.n, 0);
    for (vertex u = 0; u < g.n; ++u)
        for (const auto& a : g.out[u]) ++indeg[a.to];
    std::vector<vertex> order;
    order.reserve(g.n);
    std::vector<vertex> queue;
    for (vertex v = 0; v < g.n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t qi = 0;
    while (qi < queue.size()) {
        vertex v = queue[qi++];
        order.push_back(v);
        for (const auto& a : g.out[v])
            if (--indeg[a.to] == 0) queue.push_back(a.to);
    }
    if (static_cast<int>(order.size()) != g.n) throw std::invalid_argument("topological_order: graph has a cycle");
    return order;
}

} // namespace hopforge
