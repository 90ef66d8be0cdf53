// Builds one deep layered DAG and runs every construction on it, printing
// size and measured hopbound per algorithm.

#include <iostream>

#include "hopforge/hopforge.hpp"

using namespace hopforge;

int main() {
    const int n = 216;
    graph g = gen_layered(n, 4, 0.5, 42);
    std::cout << "layered DAG: n=" << g.n << " m=" << g.edge_count()
              << " diameter=" << diameter(g) << "\n\n";
    std::cout << "algorithm      |H|    measured  stated-bound\n";

    struct row {
        const char* algo;
        std::int64_t param;
    };
    for (row r : {row{"greedy", 30}, row{"chain-greedy", 0}, row{"setcover", 6},
                  row{"sqrt", 0}, row{"folklore", 216}, row{"kp", 6}}) {
        auto out = run_algorithm(r.algo, g, r.param, 7);
        auto rep = validate_shortcut_set(g, out.h, out.stated_bound);
        std::printf("%-13s %6zu %9lld %10lld  %s\n", r.algo, out.h.size(),
                    static_cast<long long>(rep.measured_bound),
                    static_cast<long long>(out.stated_bound), rep.valid ? "ok" : "INVALID");
    }

    graph wg = with_random_weights(gen_layered(96, 3, 0.5, 7), 8, 7);
    auto hs = greedy_hopset(wg, 12);
    auto rep = validate_hopset(wg, hs.h, 11);
    std::cout << "\nexact hopset on a weighted layered DAG (n=96, beta=12): |H|="
              << hs.h.size() << " measured=" << rep.measured_bound << " "
              << (rep.valid ? "ok" : "INVALID") << "\n";
    return rep.valid ? 0 : 1;
}
