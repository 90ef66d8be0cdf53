// hopforge: build, verify, and benchmark shortcut sets and exact hopsets
// for directed graphs.
//
//   hopforge gen <kind> --n N [...] -o g.txt
//   hopforge build --algo <id> [--beta B | --D D | --h H] -i g.txt -o h.txt
//   hopforge verify -i g.txt -H h.txt --beta B [--hopset]
//   hopforge bench --config c.toml -o results.csv
//
// exit codes: 0 valid/success, 1 invalid, 2 usage error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hopforge/hopforge.hpp"

using namespace hopforge;

namespace {

graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open graph file: " + path);
    auto res = parse_graph(in);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return std::move(res.g);
}

void save_text(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot open output file: " + path);
    out << body;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortcut sets and exact hopsets for directed graphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    std::string kind, gen_out = "g.txt";
    int gn = 64, gwidth = 4, grows = 0, gcols = 0;
    double gp = 0.5;
    std::int64_t gwmax = 0;
    std::uint64_t gseed = 1;
    gen->add_option("kind", kind, "path|total-order|grid|random-dag|random-digraph|layered")->required();
    gen->add_option("--n", gn, "vertex count");
    gen->add_option("--p", gp, "edge probability");
    gen->add_option("--width", gwidth, "layer width (layered)");
    gen->add_option("--rows", grows, "grid rows");
    gen->add_option("--cols", gcols, "grid cols");
    gen->add_option("--wmax", gwmax, "random weights in 1..wmax (0 = unweighted)");
    gen->add_option("--seed", gseed, "rng seed");
    gen->add_option("-o,--out", gen_out, "output file");

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct a shortcut set / hopset");
    std::string algo, build_in, build_out = "h.txt", trace_out, d4_name = "logstar";
    std::int64_t beta = 0, depth = 0, hcount = 0, budget = 0;
    std::uint64_t bseed = 1;
    bool oracle_check = false;
    int threads = 2;
    build->add_option("--algo", algo, "greedy|greedy-hopset|chain-greedy|setcover|sqrt|folklore|kp")->required();
    build->add_option("-i,--in", build_in, "input graph")->required();
    build->add_option("-o,--out", build_out, "output shortcut set");
    build->add_option("--beta", beta, "hopbound target (greedy, greedy-hopset)");
    build->add_option("--D", depth, "diameter target (setcover, kp)");
    build->add_option("--samples", hcount, "sample count (folklore)");
    build->add_option("--seed", bseed, "rng seed (randomized algorithms)");
    build->add_option("--budget", budget, "greedy round budget (0 = automatic)");
    build->add_option("--trace", trace_out, "write the greedy trace csv here");
    build->add_option("--d4", d4_name, "path shortcut scheme: logstar|binarylift");
    build->add_flag("--oracle-check", oracle_check, "verify incremental state against brute force each round");
    build->add_option("--threads", threads, "worker threads");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "validate a shortcut set / hopset");
    std::string ver_in, ver_h;
    std::int64_t ver_beta = 0;
    bool hopset_mode = false;
    verify->add_option("-i,--in", ver_in, "input graph")->required();
    verify->add_option("-H,--shortcuts", ver_h, "shortcut file")->required();
    verify->add_option("--beta", ver_beta, "hopbound to check")->required();
    verify->add_flag("--hopset", hopset_mode, "check exact-hopset validity");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "run an experiment sweep");
    std::string cfg_path, csv_out = "results.csv";
    int bench_threads = 2;
    bench->add_option("--config", cfg_path, "toml config")->required();
    bench->add_option("-o,--out", csv_out, "csv output");
    bench->add_option("--threads", bench_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            instance_spec spec;
            spec.family = kind;
            spec.n = gn;
            spec.p = gp;
            spec.width = gwidth;
            spec.rows = grows;
            spec.cols = gcols;
            spec.wmax = gwmax;
            graph g = build_instance(spec, gseed);
            std::ostringstream body;
            write_graph(body, g);
            save_text(gen_out, body.str());
            std::cerr << "wrote " << gen_out << " (n=" << g.n << ", m=" << g.edge_count() << ")\n";
            return 0;
        }
        if (*build) {
            graph g = load_graph(build_in);
            d4_scheme scheme = d4_name == "binarylift" ? d4_scheme::binary_lift : d4_scheme::log_star;
            shortcut_set h;
            std::vector<greedy_trace_row> trace;
            if (algo == "greedy" || algo == "greedy-hopset") {
                if (beta < 2) throw CLI::ValidationError("--beta >= 2 required");
                greedy_options opts;
                opts.max_rounds = budget;
                opts.threads = threads;
                opts.oracle_check = oracle_check;
                auto r = algo == "greedy" ? greedy_shortcut(g, beta, opts) : greedy_hopset(g, beta, opts);
                h = std::move(r.h);
                trace = std::move(r.trace);
            } else if (algo == "chain-greedy") {
                chain_greedy_options opts;
                opts.max_rounds = budget;
                opts.scheme = scheme;
                h = chain_greedy_shortcut(g, opts).h;
            } else if (algo == "setcover") {
                if (depth < 2) throw CLI::ValidationError("--D >= 2 required");
                det_shortcut_options opts;
                opts.oracle_check = oracle_check;
                opts.scheme = scheme;
                h = det_shortcut(g, static_cast<int>(depth), opts).h;
            } else if (algo == "sqrt") {
                h = sqrt_shortcut(g, scheme);
            } else if (algo == "folklore") {
                h = folklore(g, hcount, bseed);
            } else if (algo == "kp") {
                if (depth < 2) throw CLI::ValidationError("--D >= 2 required");
                kp_options opts;
                opts.scheme = scheme;
                h = kp_randomized(g, static_cast<int>(depth), bseed, opts);
            } else {
                throw CLI::ValidationError("unknown --algo " + algo);
            }
            std::ostringstream body;
            write_shortcut_set(body, h, g.n);
            save_text(build_out, body.str());
            if (!trace_out.empty()) {
                std::ostringstream tr;
                write_trace_csv(tr, trace);
                save_text(trace_out, tr.str());
            }
            std::cerr << "wrote " << build_out << " (" << h.size() << " edges)\n";
            return 0;
        }
        if (*verify) {
            graph g = load_graph(ver_in);
            std::ifstream hin(ver_h);
            if (!hin) throw CLI::ValidationError("cannot open shortcut file: " + ver_h);
            shortcut_set h = parse_shortcut_set(hin, g.n);
            validation_report rep =
                hopset_mode ? validate_hopset(g, h, ver_beta) : validate_shortcut_set(g, h, ver_beta);
            std::cout << rep << "\n";
            return rep.valid ? 0 : 1;
        }
        if (*bench) {
            std::ifstream cin_(cfg_path);
            if (!cin_) throw CLI::ValidationError("cannot open config: " + cfg_path);
            bench_config cfg = parse_bench_config(cin_);
            std::ostringstream csv;
            run_experiment(cfg, csv, bench_threads);
            save_text(csv_out, csv.str());
            std::cerr << "wrote " << csv_out << " (" << cfg.runs.size() << " runs)\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
