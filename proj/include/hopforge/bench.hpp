#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopforge/baselines.hpp"
#include "hopforge/chain_greedy.hpp"
#include "hopforge/gen.hpp"
#include "hopforge/graph.hpp"
#include "hopforge/greedy.hpp"
#include "hopforge/setcover.hpp"
#include "hopforge/sqrt_shortcut.hpp"
#include "hopforge/validate.hpp"

namespace hopforge {

// ---------------------------------------------------------------------------
// Instance families.
// ---------------------------------------------------------------------------
struct instance_spec {
    std::string family = "path"; // path, total-order, grid, random-dag, random-digraph, layered
    int n = 64;
    double p = 0.5;
    int width = 4;
    int rows = 0, cols = 0;      // grid; square-ish from n when absent
    weight_t wmax = 0;           // > 0 makes the instance weighted
};

inline graph build_instance(const instance_spec& spec, std::uint64_t seed) {
    graph g;
    if (spec.family == "path") {
        g = gen_path(spec.n);
    } else if (spec.family == "total-order") {
        g = gen_total_order(spec.n);
    } else if (spec.family == "grid") {
        int r = spec.rows, c = spec.cols;
        if (r <= 0 || c <= 0) {
            r = std::max(1, static_cast<int>(std::round(std::sqrt(static_cast<double>(spec.n)))));
            c = std::max(1, (spec.n + r - 1) / r);
        }
        g = gen_grid(r, c);
    } else if (spec.family == "random-dag") {
        g = gen_random_dag(spec.n, spec.p, seed);
    } else if (spec.family == "random-digraph") {
        g = gen_random_digraph(spec.n, spec.p, seed);
    } else if (spec.family == "layered") {
        g = gen_layered(spec.n, spec.width, spec.p, seed);
    } else {
        throw std::invalid_argument("unknown family: " + spec.family);
    }
    if (spec.wmax > 0) g = with_random_weights(std::move(g), spec.wmax, seed);
    return g;
}

// ---------------------------------------------------------------------------
// Algorithm dispatch. `param` is beta for the greedy pair, D for setcover/kp,
// h for folklore, and is ignored by chain-greedy and sqrt.
// ---------------------------------------------------------------------------
struct algo_run {
    shortcut_set h;
    bool hopset_mode = false;
    std::int64_t stated_bound = 0; // validation bound implied by the algorithm
};

inline algo_run run_algorithm(const std::string& algo, const graph& g, std::int64_t param,
                              std::uint64_t seed, int threads = 1) {
    algo_run out;
    bool acyclic = is_acyclic(g);
    if (algo == "greedy") {
        greedy_options opts;
        opts.threads = threads;
        out.h = greedy_shortcut(g, param, opts).h;
        out.stated_bound = param - 1;
    } else if (algo == "greedy-hopset") {
        greedy_options opts;
        opts.threads = threads;
        out.h = greedy_hopset(g, param, opts).h;
        out.hopset_mode = true;
        out.stated_bound = param - 1;
    } else if (algo == "chain-greedy") {
        out.h = chain_greedy_shortcut(g).h;
        out.stated_bound = chain_greedy_bound(g.n, acyclic);
    } else if (algo == "setcover") {
        out.h = det_shortcut(g, static_cast<int>(param)).h;
        out.stated_bound = det_shortcut_bound(static_cast<int>(param), acyclic);
    } else if (algo == "sqrt") {
        out.h = sqrt_shortcut(g);
        out.stated_bound = sqrt_shortcut_bound(g.n, acyclic);
    } else if (algo == "folklore") {
        out.h = folklore(g, param, seed);
        out.hopset_mode = g.weighted;
        out.stated_bound = folklore_bound(g.n, param);
    } else if (algo == "kp") {
        out.h = kp_randomized(g, static_cast<int>(param), seed);
        out.stated_bound = kp_bound(static_cast<int>(param), acyclic);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Config: a small TOML subset — [[run]] tables with integer, float, string
// and integer-array values, '#' comments.
// ---------------------------------------------------------------------------
struct bench_run {
    std::string algo = "greedy";
    instance_spec instance;
    std::int64_t param = 0;
    std::int64_t beta = 0; // optional explicit validation bound
    std::vector<std::uint64_t> seeds{1};
};

struct bench_config {
    std::vector<bench_run> runs;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

inline bench_config parse_bench_config(std::istream& is) {
    bench_config cfg;
    bench_run* cur = nullptr;
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line == "[[run]]") {
            cfg.runs.emplace_back();
            cur = &cfg.runs.back();
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos || !cur)
            throw std::runtime_error("bench config: bad line " + std::to_string(lineno) + ": " + raw);
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        auto as_int = [&]() -> std::int64_t { return std::stoll(val); };
        auto as_double = [&]() -> double { return std::stod(val); };
        auto as_string = [&]() -> std::string {
            if (val.size() >= 2 && val.front() == '"' && val.back() == '"') return val.substr(1, val.size() - 2);
            return val;
        };
        if (key == "algo") cur->algo = as_string();
        else if (key == "family") cur->instance.family = as_string();
        else if (key == "n") cur->instance.n = static_cast<int>(as_int());
        else if (key == "p") cur->instance.p = as_double();
        else if (key == "width") cur->instance.width = static_cast<int>(as_int());
        else if (key == "rows") cur->instance.rows = static_cast<int>(as_int());
        else if (key == "cols") cur->instance.cols = static_cast<int>(as_int());
        else if (key == "wmax") cur->instance.wmax = as_int();
        else if (key == "param") cur->param = as_int();
        else if (key == "beta") cur->beta = as_int();
        else if (key == "seeds") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw std::runtime_error("bench config: seeds must be an array on line " + std::to_string(lineno));
            cur->seeds.clear();
            std::string inner = val.substr(1, val.size() - 2);
            std::istringstream ss(inner);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok = detail::trim(tok);
                if (!tok.empty()) cur->seeds.push_back(std::stoull(tok));
            }
        } else {
            throw std::runtime_error("bench config: unknown key '" + key + "' on line " + std::to_string(lineno));
        }
    }
    return cfg;
}

// One row per (run, seed). The hopbound column is the validator's measured
// value, never the builder's claim; failures become rows with an error status.
inline void run_experiment(const bench_config& cfg, std::ostream& csv, int threads = 1) {
    csv << "algo,n,m,param,size,hopbound,seed,millis,status\n";
    for (const bench_run& run : cfg.runs) {
        for (std::uint64_t seed : run.seeds) {
            std::string status = "ok";
            std::size_t size = 0;
            std::int64_t hopbound = -1;
            long long millis = 0;
            int n = 0;
            std::size_t m = 0;
            try {
                graph g = build_instance(run.instance, seed);
                n = g.n;
                m = g.edge_count();
                auto t0 = std::chrono::steady_clock::now();
                algo_run r = run_algorithm(run.algo, g, run.param, seed, threads);
                auto t1 = std::chrono::steady_clock::now();
                millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                size = r.h.size();
                std::int64_t bound = run.beta > 0 ? run.beta : r.stated_bound;
                validation_report rep = r.hopset_mode ? validate_hopset(g, r.h, bound, threads)
                                                      : validate_shortcut_set(g, r.h, bound, threads);
                hopbound = rep.measured_bound;
                if (!rep.valid) status = std::string("invalid-") + to_string(rep.kind);
            } catch (const std::exception& e) {
                status = std::string("error: ") + e.what();
                for (char& c : status)
                    if (c == ',' || c == '\n') c = ';';
            }
            csv << run.algo << ',' << n << ',' << m << ',' << run.param << ',' << size << ','
                << hopbound << ',' << seed << ',' << millis << ',' << status << '\n';
        }
    }
}

} // namespace hopforge
