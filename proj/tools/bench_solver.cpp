// Benchmark: serial reference solve vs the parallel root split, verifying
// that both produce identical values and move sets.

#include <chrono>
#include <cstdio>
#include <random>

#include "incidence/hypergraph.hpp"
#include "incidence/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace incidence;

Hypergraph random_graph(int n, double density, std::mt19937& rng,
                        EdgeColor color = EdgeColor::Blue) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({{u, v}, color});
    return Hypergraph::build(n, std::move(edges));
}

double run_once(const Position& p, int workers, SolveResult& out) {
    SolveOptions o;
    o.workers = workers;
    Solver solver(o);
    auto start = std::chrono::steady_clock::now();
    out = solver.solve(p, Player::Left);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
    int workers = 2;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    std::printf("parallel workers: %d\n", workers);
    std::printf("%-28s %12s %12s %10s %8s\n", "board", "serial (s)", "parallel (s)",
                "speedup", "match");

    std::mt19937 rng(20260826);
    std::vector<std::pair<std::string, Position>> boards;
    boards.push_back({"path n=17", Position{make_path(17)}});
    boards.push_back({"union 5+5+5+3", Position{make_union_paths({5, 5, 5, 3})}});
    boards.push_back({"cycle n=15", Position{make_cycle(15)}});
    boards.push_back({"random n=15 d=0.30", Position{random_graph(15, 0.30, rng)}});
    boards.push_back({"random n=14 d=0.50 green",
                      Position{random_graph(14, 0.50, rng, EdgeColor::Green)}});

    for (auto& [name, board] : boards) {
        SolveResult serial, parallel;
        double ts = run_once(board, 1, serial);
        double tp = run_once(board, workers, parallel);
        bool match = serial.value == parallel.value &&
                     serial.optimal_moves == parallel.optimal_moves;
        std::printf("%-28s %12.3f %12.3f %9.2fx %8s\n", name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
