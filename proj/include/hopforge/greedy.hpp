#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/search.hpp"
#include "hopforge/util.hpp"

namespace hopforge {

enum class greedy_mode { shortcut, hopset };

struct greedy_trace_row {
    int round = 0;
    vertex u = -1, v = -1;
    std::int64_t delta = 0;
    std::int64_t phi_after = 0;
    std::int64_t active_pairs = 0;
};

struct greedy_result {
    shortcut_set h;
    std::vector<greedy_trace_row> trace;
    std::int64_t phi_initial = 0;
};

inline void write_trace_csv(std::ostream& os, const std::vector<greedy_trace_row>& trace) {
    os << "round,u,v,delta,phi_after,active_pairs\n";
    for (const auto& r : trace)
        os << r.round << ',' << r.u << ',' << r.v << ',' << r.delta << ',' << r.phi_after << ','
           << r.active_pairs << '\n';
}

struct greedy_options {
    std::int64_t max_rounds = 0; // 0 = automatic ceiling, see below
    int threads = 1;
    bool oracle_check = false;   // recompute phi/Delta from scratch each round and compare
    bool prune_candidates = false; // diagnostic pruning in argmax_edge (verified against the full scan)
};

inline std::int64_t default_round_budget(int n) {
    double n43 = std::pow(static_cast<double>(n), 4.0 / 3.0);
    return static_cast<std::int64_t>(4.0 * n43) + 1024;
}

// ---------------------------------------------------------------------------
// From-scratch reference operations (exact, O(n·m) per potential evaluation).
// The fast engines below must agree with these; tests compare them each round.
// ---------------------------------------------------------------------------

inline std::int64_t potential(const graph& g, const shortcut_set& h, std::int64_t beta,
                              greedy_mode mode) {
    if (beta < 1) throw std::invalid_argument("potential: beta >= 1");
    graph aug = augment(g, h);
    std::int64_t phi = 0;
    if (mode == greedy_mode::shortcut) {
        for (vertex s = 0; s < g.n; ++s) {
            auto d = bfs_from(aug, s);
            for (vertex t = 0; t < g.n; ++t)
                if (t != s && d[t] != kNoDist && d[t] >= beta) phi += d[t];
        }
    } else {
        aug.weighted = true;
        for (vertex s = 0; s < g.n; ++s) {
            auto dh = dijkstra_lex_from(aug, s);
            for (vertex t = 0; t < g.n; ++t)
                if (t != s && dh.hops[t] != kNoDist && dh.hops[t] >= beta) phi += dh.hops[t];
        }
    }
    return phi;
}

// In hopset mode the candidate edge weight is dist_G(u, v), per the algorithm.
inline std::int64_t delta(const graph& g, const shortcut_set& h, std::int64_t beta,
                          greedy_mode mode, vertex u, vertex v) {
    reach_matrix tc = transitive_closure(g);
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n || !tc(u, v))
        throw std::invalid_argument("delta: edge not in the transitive closure");
    shortcut_set h2 = h;
    if (mode == greedy_mode::hopset) {
        auto base = dijkstra_lex_from(g, u);
        h2.weighted = true;
        h2.add(u, v, base.dist[v]);
    } else {
        h2.add(u, v);
    }
    return potential(g, h, beta, mode) - potential(g, h2, beta, mode);
}

namespace detail {

// Vertices lying on some canonical (front-lexicographic-minimal) shortest
// path of an active pair. Used only by the diagnostic pruning mode.
inline std::vector<char> active_canonical_path_vertices(const graph& aug, std::int64_t beta) {
    const int n = aug.n;
    auto dist = all_pairs_bfs(aug);
    auto d = [&](vertex a, vertex b) { return dist[static_cast<std::size_t>(a) * n + b]; };
    std::vector<char> on(n, 0);
    for (vertex s = 0; s < n; ++s)
        for (vertex t = 0; t < n; ++t) {
            if (s == t || d(s, t) == kNoDist || d(s, t) < beta) continue;
            vertex cur = s;
            on[cur] = 1;
            while (cur != t) {
                vertex pick = -1;
                for (const auto& a : aug.out[cur])
                    if (d(a.to, t) != kNoDist && d(a.to, t) == d(cur, t) - 1 && (pick == -1 || a.to < pick))
                        pick = a.to;
                cur = pick;
                on[cur] = 1;
            }
        }
    return on;
}

} // namespace detail

// Exact argmax over all closure pairs; ties broken by smallest (u, v).
// Requires phi > 0. With prune_candidates the scan is restricted to vertices
// on active canonical paths and verified against the full scan.
inline std::pair<std::pair<vertex, vertex>, std::int64_t> argmax_edge(const graph& g,
                                                                      const shortcut_set& h,
                                                                      std::int64_t beta,
                                                                      greedy_mode mode,
                                                                      bool prune_candidates = false) {
    std::int64_t phi = potential(g, h, beta, mode);
    if (phi <= 0) throw std::invalid_argument("argmax_edge: potential is zero");
    reach_matrix tc = transitive_closure(g);
    graph aug = augment(g, h);

    auto scan = [&](const std::vector<char>* restrict_to) {
        std::pair<vertex, vertex> best{-1, -1};
        std::int64_t best_delta = -1;
        for (vertex u = 0; u < g.n; ++u) {
            if (restrict_to && !(*restrict_to)[u]) continue;
            auto du = bfs_from(aug, u);
            for (vertex v = 0; v < g.n; ++v) {
                if (u == v || !tc(u, v)) continue;
                if (restrict_to && !(*restrict_to)[v]) continue;
                if (mode == greedy_mode::shortcut && du[v] != kNoDist && du[v] <= 1) continue;
                std::int64_t dl = delta(g, h, beta, mode, u, v);
                if (dl > best_delta) {
                    best_delta = dl;
                    best = {u, v};
                }
            }
        }
        return std::make_pair(best, best_delta);
    };

    auto full = scan(nullptr);
    if (prune_candidates) {
        auto on = detail::active_canonical_path_vertices(aug, beta);
        auto pruned = scan(&on);
        if (pruned.second != full.second)
            throw std::runtime_error("argmax_edge: pruned scan changed the chosen edge's delta value");
        return pruned;
    }
    return full;
}

// ---------------------------------------------------------------------------
// Fast shortcut-mode engine.
//
// Maintains the full distance matrix of G ∪ H. For a candidate (u, v) and an
// active pair (s, t) with d = dist(s,t), a = dist(s,u)+1, y = dist(v,t):
//     contribution = d          if a + y <  beta      (pair deactivates)
//                  = d - a - y  if beta <= a + y < d  (pair shrinks)
//                  = 0          otherwise.
// Summed per source into a piecewise-linear function of a (difference
// arrays), so scanning all candidate tails u of a fixed head v costs one
// lookup per active source instead of one pass per active pair.
// ---------------------------------------------------------------------------

namespace detail {

constexpr std::int32_t kInf32 = 1 << 29;

class shortcut_engine {
public:
    shortcut_engine(const graph& g, std::int64_t beta, int threads)
        : g_(g), n_(g.n), beta_(beta), threads_(std::max(1, threads)), tc_(transitive_closure(g)) {
        dist_ = all_pairs_bfs(g, threads_);
        for (auto& x : dist_)
            if (x == kNoDist) x = kInf32;
        dist_t_.assign(dist_.size(), 0);
        for (vertex s = 0; s < n_; ++s)
            for (vertex t = 0; t < n_; ++t) dist_t_[idx(t, s)] = dist_[idx(s, t)];
        tails_of_.assign(n_, {});
        for (vertex u = 0; u < n_; ++u)
            for (vertex v = 0; v < n_; ++v)
                if (u != v && tc_(u, v)) tails_of_[v].push_back(u);
    }

    std::int64_t phi() const {
        std::int64_t p = 0;
        for (vertex s = 0; s < n_; ++s)
            for (vertex t = 0; t < n_; ++t) {
                std::int32_t d = dist_[idx(s, t)];
                if (s != t && d < kInf32 && d >= beta_) p += d;
            }
        return p;
    }

    std::int64_t active_pairs() const {
        std::int64_t c = 0;
        for (vertex s = 0; s < n_; ++s)
            for (vertex t = 0; t < n_; ++t) {
                std::int32_t d = dist_[idx(s, t)];
                if (s != t && d < kInf32 && d >= beta_) ++c;
            }
        return c;
    }

    std::int32_t dist(vertex s, vertex t) const { return dist_[idx(s, t)]; }

    // argmax_{(u,v) in tc} Delta, ties to lexicographically smallest (u, v)
    struct pick {
        vertex u = -1, v = -1;
        std::int64_t delta = -1;
    };

    pick find_best() {
        build_activity();
        if (src_list_.empty()) return {};

        // Upper bound per head v: every source pretends to sit next to u.
        // Computed per active target through sorted distance lists.
        std::vector<std::int64_t> tot(n_, 0);
        build_target_index();
        parallel_for(
            n_,
            [&](int v) {
                std::int64_t s = 0;
                for (std::size_t i = 0; i < tgt_list_.size(); ++i) {
                    std::int32_t y = dist_[idx(v, tgt_list_[i])];
                    if (y >= kInf32) continue;
                    s += target_gain_at(i, 1 + y);
                }
                tot[v] = s;
            },
            threads_);

        std::vector<int> heads(n_);
        std::iota(heads.begin(), heads.end(), 0);
        std::sort(heads.begin(), heads.end(), [&](int a, int b) {
            if (tot[a] != tot[b]) return tot[a] > tot[b];
            return a < b;
        });

        std::atomic<std::int64_t> global_best{0};
        std::mutex merge_mu;
        pick best;
        std::atomic<int> cursor{0};

        auto worker = [&]() {
            scratch sc;
            sc.wbuf.assign(static_cast<std::size_t>(src_list_.size()) * (n_ + 2), 0);
            sc.maxa.resize(src_list_.size());
            sc.w1.resize(src_list_.size());
            sc.order.resize(src_list_.size());
            sc.suffix.resize(src_list_.size() + 1);
            sc.lin_c.assign(n_ + 2, 0);
            sc.lin_s.assign(n_ + 2, 0);
            pick local;
            for (;;) {
                int pos = cursor.fetch_add(1);
                if (pos >= n_) break;
                int v = heads[pos];
                if (tot[v] < global_best.load(std::memory_order_relaxed)) continue;
                if (tails_of_[v].empty()) continue;
                scan_head(v, sc, local, global_best);
            }
            std::lock_guard<std::mutex> lk(merge_mu);
            if (local.delta > best.delta ||
                (local.delta == best.delta && local.u != -1 &&
                 (best.u == -1 || std::make_pair(local.u, local.v) < std::make_pair(best.u, best.v))))
                best = local;
        };

        if (threads_ <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < threads_; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        return best;
    }

    void commit(vertex u, vertex v) {
        for (vertex s = 0; s < n_; ++s) {
            std::int32_t su = dist_[idx(s, u)];
            if (su >= kInf32) continue;
            const std::int32_t* vrow = &dist_[idx(v, 0)];
            std::int32_t* srow = &dist_[idx(s, 0)];
            for (vertex t = 0; t < n_; ++t) {
                if (vrow[t] >= kInf32) continue;
                std::int32_t cand = su + 1 + vrow[t];
                if (cand < srow[t]) srow[t] = cand;
            }
        }
        for (vertex s = 0; s < n_; ++s)
            for (vertex t = 0; t < n_; ++t) dist_t_[idx(t, s)] = dist_[idx(s, t)];
    }

private:
    const graph& g_;
    int n_;
    std::int64_t beta_;
    int threads_;
    reach_matrix tc_;
    std::vector<std::int32_t> dist_;   // row-major [s][t]
    std::vector<std::int32_t> dist_t_; // transpose  [t][s]
    std::vector<std::vector<vertex>> tails_of_;

    // per round
    std::vector<std::int32_t> src_list_;                    // active sources
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> act_; // per source: (t, d)
    std::vector<std::int32_t> tgt_list_;                    // active targets
    std::vector<std::vector<std::int32_t>> tgt_d_sorted_;   // per target: sorted d over active sources
    std::vector<std::vector<std::int64_t>> tgt_d_prefix_;

    std::size_t idx(vertex a, vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

    void build_activity() {
        act_.assign(n_, {});
        src_list_.clear();
        for (vertex s = 0; s < n_; ++s) {
            for (vertex t = 0; t < n_; ++t) {
                std::int32_t d = dist_[idx(s, t)];
                if (s != t && d < kInf32 && d >= beta_) act_[s].emplace_back(t, d);
            }
            if (!act_[s].empty()) src_list_.push_back(s);
        }
    }

    void build_target_index() {
        std::vector<std::vector<std::int32_t>> per_target(n_);
        for (vertex s : src_list_)
            for (auto [t, d] : act_[s]) per_target[t].push_back(d);
        tgt_list_.clear();
        tgt_d_sorted_.clear();
        tgt_d_prefix_.clear();
        for (vertex t = 0; t < n_; ++t) {
            if (per_target[t].empty()) continue;
            auto& ds = per_target[t];
            std::sort(ds.begin(), ds.end());
            std::vector<std::int64_t> pre(ds.size() + 1, 0);
            for (std::size_t i = 0; i < ds.size(); ++i) pre[i + 1] = pre[i] + ds[i];
            tgt_list_.push_back(t);
            tgt_d_sorted_.push_back(std::move(ds));
            tgt_d_prefix_.push_back(std::move(pre));
        }
    }

    // sum over active pairs into target t (index i) of the contribution when
    // the candidate route reaches t with total length r
    std::int64_t target_gain_at(std::size_t i, std::int64_t r) const {
        const auto& ds = tgt_d_sorted_[i];
        const auto& pre = tgt_d_prefix_[i];
        if (r < beta_) return pre.back(); // every pair deactivates: sum of d
        // pairs with d > r shrink by d - r
        auto it = std::upper_bound(ds.begin(), ds.end(), static_cast<std::int32_t>(r));
        std::size_t k = static_cast<std::size_t>(it - ds.begin());
        std::int64_t cnt = static_cast<std::int64_t>(ds.size() - k);
        return (pre.back() - pre[k]) - cnt * r;
    }

    struct scratch {
        std::vector<std::int64_t> wbuf;
        std::vector<std::int32_t> maxa;
        std::vector<std::int64_t> w1;
        std::vector<int> order;
        std::vector<std::int64_t> suffix;
        std::vector<std::int64_t> lin_c, lin_s; // kept zeroed between sources
    };

    void scan_head(int v, scratch& sc, pick& local, std::atomic<std::int64_t>& global_best) {
        const int stride = n_ + 2;
        const std::int32_t* vrow = &dist_[idx(v, 0)];
        const std::size_t ns = src_list_.size();

        // build W rows
        for (std::size_t si = 0; si < ns; ++si) {
            vertex s = src_list_[si];
            std::int64_t* w = &sc.wbuf[si * stride];
            std::int32_t hi = 0;
            for (auto [t, d] : act_[s]) {
                std::int32_t y = vrow[t];
                if (y >= kInf32) continue;
                std::int32_t a2 = d - y; // improvement requires a < a2
                if (a2 > hi) hi = a2;
            }
            sc.maxa[si] = std::min<std::int32_t>(hi, n_ + 1);
            if (hi <= 1) {
                sc.maxa[si] = 0; // no improving a; block lookups into stale rows
                sc.w1[si] = 0;
                continue;
            }
            std::fill(w, w + sc.maxa[si] + 1, 0);
            std::int32_t lin_hi = 0;
            // difference events; region [1, a1) contributes d, region
            // [max(1,a1), a2) contributes (d - y) - a
            for (auto [t, d] : act_[s]) {
                std::int32_t y = vrow[t];
                if (y >= kInf32) continue;
                std::int32_t a1 = static_cast<std::int32_t>(beta_ - y);
                std::int32_t a2 = d - y;
                if (a2 <= 1) continue;
                std::int32_t c1 = std::clamp<std::int32_t>(a1, 1, sc.maxa[si] + 1);
                std::int32_t c2 = std::clamp<std::int32_t>(a2, 1, sc.maxa[si] + 1);
                if (c1 > 1) {
                    w[1] += d;
                    w[c1] -= d;
                }
                if (c2 > c1) {
                    sc.lin_c[c1] += d - y;
                    sc.lin_c[c2] -= d - y;
                    sc.lin_s[c1] += 1;
                    sc.lin_s[c2] -= 1;
                    lin_hi = std::max(lin_hi, c2);
                }
            }
            std::int64_t run_c = 0, run_lc = 0, run_ls = 0;
            for (std::int32_t a = 1; a <= sc.maxa[si]; ++a) {
                run_c += w[a];
                run_lc += sc.lin_c[a];
                run_ls += sc.lin_s[a];
                w[a] = run_c + run_lc - static_cast<std::int64_t>(a) * run_ls;
            }
            if (lin_hi > 0)
                for (std::int32_t a = 0; a <= lin_hi; ++a) {
                    sc.lin_c[a] = 0;
                    sc.lin_s[a] = 0;
                }
            sc.w1[si] = sc.maxa[si] >= 1 ? w[1] : 0;
        }

        // source order: biggest first, suffix bounds for early exit
        std::iota(sc.order.begin(), sc.order.end(), 0);
        std::sort(sc.order.begin(), sc.order.end(), [&](int a, int b) { return sc.w1[a] > sc.w1[b]; });
        sc.suffix[ns] = 0;
        for (std::size_t i = ns; i-- > 0;) sc.suffix[i] = sc.suffix[i + 1] + sc.w1[sc.order[i]];
        if (sc.suffix[0] <= 0) return;

        for (vertex u : tails_of_[v]) {
            if (dist_t_[idx(v, u)] < 2) continue; // Delta provably 0 when dist(u,v) <= 1
            std::int64_t bound = global_best.load(std::memory_order_relaxed);
            std::int64_t need = std::max(bound, local.delta);
            if (sc.suffix[0] < need) return; // no tail of this head can win or tie
            std::int64_t acc = 0;
            std::size_t i = 0;
            for (; i < ns; ++i) {
                if (acc + sc.suffix[i] < need) break; // strictly worse: cannot win or tie
                int si = sc.order[i];
                vertex s = src_list_[si];
                std::int32_t dsu = dist_t_[idx(u, s)];
                std::int32_t a = dsu >= kInf32 ? sc.maxa[si] + 1 : dsu + 1;
                if (a <= sc.maxa[si]) acc += sc.wbuf[static_cast<std::size_t>(si) * stride + a];
            }
            if (i < ns) continue; // abandoned: cannot win or tie
            if (acc > local.delta ||
                (acc == local.delta && local.u != -1 &&
                 std::make_pair(u, static_cast<vertex>(v)) < std::make_pair(local.u, local.v))) {
                local.u = u;
                local.v = v;
                local.delta = acc;
                std::int64_t cur = global_best.load(std::memory_order_relaxed);
                while (acc > cur && !global_best.compare_exchange_weak(cur, acc)) {
                }
            }
        }
    }
};

} // namespace detail

// Greedy shortcut sets: add the closure edge with maximum potential reduction
// until phi = 0 (all reachable pairs below beta). The returned set therefore
// has hopbound <= beta - 1.
inline greedy_result greedy_shortcut(const graph& g, std::int64_t beta,
                                     const greedy_options& opts = {}) {
    if (beta < 2) throw std::invalid_argument("greedy_shortcut: beta >= 2");
    greedy_result res;
    detail::shortcut_engine eng(g, beta, opts.threads);
    std::int64_t phi = eng.phi();
    res.phi_initial = phi;
    std::int64_t budget = opts.max_rounds > 0 ? opts.max_rounds : default_round_budget(g.n);
    int round = 0;
    while (phi > 0) {
        if (round >= budget) throw std::runtime_error("greedy_shortcut: round budget exceeded");
        auto best = eng.find_best();
        if (best.u < 0 || best.delta <= 0) throw std::runtime_error("greedy_shortcut: no improving edge found");
        eng.commit(best.u, best.v);
        res.h.add(best.u, best.v);
        std::int64_t phi_after = eng.phi();
        if (opts.oracle_check) {
            std::int64_t expect = potential(g, res.h, beta, greedy_mode::shortcut);
            if (expect != phi_after) throw std::runtime_error("greedy_shortcut: phi mismatch vs from-scratch");
            if (phi - phi_after != best.delta)
                throw std::runtime_error("greedy_shortcut: delta mismatch vs from-scratch");
        }
        if (phi_after >= phi) throw std::runtime_error("greedy_shortcut: potential failed to decrease");
        res.trace.push_back({round, best.u, best.v, best.delta, phi_after, eng.active_pairs()});
        phi = phi_after;
        ++round;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Greedy exact hopsets. Distances never change (edge weights are exact), so
// the graph distances are computed once; only hopdistances evolve.
// ---------------------------------------------------------------------------
inline greedy_result greedy_hopset(const graph& g, std::int64_t beta,
                                   const greedy_options& opts = {}) {
    if (beta < 2) throw std::invalid_argument("greedy_hopset: beta >= 2");
    const int n = g.n;
    constexpr std::int64_t kInfW = std::numeric_limits<std::int64_t>::max() / 4;

    auto base = all_pairs_dijkstra_lex(g, opts.threads);
    std::vector<std::int64_t> dg(static_cast<std::size_t>(n) * n, kInfW);
    std::vector<std::int32_t> hop(static_cast<std::size_t>(n) * n, detail::kInf32);
    auto id = [n](vertex a, vertex b) { return static_cast<std::size_t>(a) * n + b; };
    for (vertex s = 0; s < n; ++s)
        for (vertex t = 0; t < n; ++t)
            if (s != t && base.h(s, t) != kNoDist) {
                dg[id(s, t)] = base.d(s, t);
                hop[id(s, t)] = base.h(s, t);
            }
    for (vertex v = 0; v < n; ++v) {
        dg[id(v, v)] = 0;
        hop[id(v, v)] = 0;
    }

    greedy_result res;
    res.h.weighted = true;

    auto phi_now = [&]() {
        std::int64_t p = 0;
        for (vertex s = 0; s < n; ++s)
            for (vertex t = 0; t < n; ++t)
                if (s != t && hop[id(s, t)] < detail::kInf32 && hop[id(s, t)] >= beta) p += hop[id(s, t)];
        return p;
    };

    std::int64_t phi = phi_now();
    res.phi_initial = phi;
    std::int64_t budget = opts.max_rounds > 0 ? opts.max_rounds : default_round_budget(n);
    int round = 0;

    while (phi > 0) {
        if (round >= budget) throw std::runtime_error("greedy_hopset: round budget exceeded");
        // active pairs grouped by source, with per-source reduction caps
        std::vector<vertex> srcs;
        std::vector<std::vector<std::pair<vertex, std::int32_t>>> act(n);
        std::vector<std::int64_t> cap(n, 0);
        for (vertex s = 0; s < n; ++s) {
            for (vertex t = 0; t < n; ++t) {
                std::int32_t hd = hop[id(s, t)];
                if (s != t && hd < detail::kInf32 && hd >= beta) {
                    act[s].emplace_back(t, hd);
                    cap[s] += hd;
                }
            }
            if (!act[s].empty()) srcs.push_back(s);
        }
        std::sort(srcs.begin(), srcs.end(), [&](vertex a, vertex b) { return cap[a] > cap[b]; });
        std::vector<std::int64_t> suffix(srcs.size() + 1, 0);
        for (std::size_t i = srcs.size(); i-- > 0;) suffix[i] = suffix[i + 1] + cap[srcs[i]];

        vertex bu = -1, bv = -1;
        std::int64_t bd = 0;
        for (vertex u = 0; u < n; ++u)
            for (vertex v = 0; v < n; ++v) {
                if (u == v || dg[id(u, v)] >= kInfW) continue;
                if (hop[id(u, v)] < 2) continue; // cannot shorten anything
                std::int64_t w_uv = dg[id(u, v)];
                std::int64_t acc = 0;
                std::size_t i = 0;
                for (; i < srcs.size(); ++i) {
                    if (acc + suffix[i] <= bd) break; // strict improvement needed (lex order = scan order)
                    vertex s = srcs[i];
                    std::int64_t su = dg[id(s, u)];
                    if (su >= kInfW) continue;
                    std::int32_t hsu = hop[id(s, u)];
                    for (auto [t, hd] : act[s]) {
                        if (su + w_uv + dg[id(v, t)] != dg[id(s, t)]) continue; // not aligned
                        std::int64_t r = static_cast<std::int64_t>(hsu) + 1 + hop[id(v, t)];
                        if (r >= hd) continue;
                        acc += hd - (r >= beta ? r : 0);
                    }
                }
                if (i == srcs.size() && acc > bd) {
                    bd = acc;
                    bu = u;
                    bv = v;
                }
            }
        if (bu < 0) throw std::runtime_error("greedy_hopset: no improving edge found");

        // commit: hopdistances through the new edge
        std::int64_t w_uv = dg[id(bu, bv)];
        for (vertex s = 0; s < n; ++s) {
            std::int64_t su = dg[id(s, bu)];
            if (su >= kInfW) continue;
            std::int32_t hsu = hop[id(s, bu)];
            for (vertex t = 0; t < n; ++t) {
                if (dg[id(bv, t)] >= kInfW) continue;
                if (su + w_uv + dg[id(bv, t)] != dg[id(s, t)]) continue;
                std::int32_t cand = hsu + 1 + hop[id(bv, t)];
                if (cand < hop[id(s, t)]) hop[id(s, t)] = cand;
            }
        }
        res.h.add(bu, bv, w_uv);
        std::int64_t phi_after = phi_now();
        if (opts.oracle_check) {
            std::int64_t expect = potential(g, res.h, beta, greedy_mode::hopset);
            if (expect != phi_after) throw std::runtime_error("greedy_hopset: phi mismatch vs from-scratch");
            if (phi - phi_after != bd) throw std::runtime_error("greedy_hopset: delta mismatch vs from-scratch");
        }
        if (phi_after >= phi) throw std::runtime_error("greedy_hopset: potential failed to decrease");
        std::int64_t active = 0;
        for (vertex s = 0; s < n; ++s)
            for (vertex t = 0; t < n; ++t)
                if (s != t && hop[id(s, t)] < detail::kInf32 && hop[id(s, t)] >= beta) ++active;
        res.trace.push_back({round, bu, bv, bd, phi_after, active});
        phi = phi_after;
        ++round;
    }
    return res;
}

} // namespace hopforge
