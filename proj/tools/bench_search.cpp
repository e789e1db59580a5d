// Benchmark: serial forest search vs the OpenMP-batched search on the same
// synthetic workload. The two code paths must agree on every decision,
// witness, and statistic; this binary asserts that while timing them.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "genfactor/fpt_solver.hpp"
#include "genfactor/random_gen.hpp"

using namespace genfactor;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Workload {
    std::string name;
    std::vector<Instance> instances;
};

double run(const Workload& w, int threads, std::vector<SolveResult>& out) {
    SolveOptions options;
    options.threads = threads;
    out.clear();
    const double t0 = now_ms();
    for (const Instance& inst : w.instances) out.push_back(solve_instance(inst, options));
    return now_ms() - t0;
}

bool same_results(const std::vector<SolveResult>& a, const std::vector<SolveResult>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].decision.witness.has_value() != b[i].decision.witness.has_value()) return false;
        if (a[i].decision.witness && *a[i].decision.witness != *b[i].decision.witness)
            return false;
        const SolveStats& x = a[i].stats;
        const SolveStats& y = b[i].stats;
        if (x.x_subsets_explored != y.x_subsets_explored ||
            x.forests_explored != y.forests_explored || x.forest_solves != y.forest_solves)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 4;
#ifdef _OPENMP
    threads = std::max(2, omp_get_max_threads());
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 2) threads = 2;

    Rng rng(20240917);
    Workload dense{"dense unit-capacity (fast path)", {}};
    for (int t = 0; t < 6; ++t)
        dense.instances.push_back(random_all_ones_instance(rng, 9, 5, 85));
    Workload general{"small weighted (general path)", {}};
    for (int t = 0; t < 6; ++t)
        general.instances.push_back(random_weighted_instance(rng, 5, 4, 80, 2));

    std::printf("forest-search benchmark, serial vs OpenMP (%d threads)\n", threads);
#ifdef _OPENMP
    std::printf("OpenMP enabled; hardware reports %d processor(s).\n", omp_get_num_procs());
    if (omp_get_num_procs() == 1)
        std::printf("NOTE: single processor — expect batching overhead, not speedup.\n");
#else
    std::printf("built without OpenMP; the parallel path falls back to serial.\n");
#endif
    std::printf("%-36s %12s %12s %9s\n", "workload", "serial ms", "parallel ms", "speedup");

    bool all_match = true;
    for (const Workload* w : {&dense, &general}) {
        std::vector<SolveResult> serial_results, parallel_results;
        const double ts = run(*w, 1, serial_results);
        const double tp = run(*w, threads, parallel_results);
        const bool match = same_results(serial_results, parallel_results);
        all_match = all_match && match;
        std::printf("%-36s %12.2f %12.2f %8.2fx %s\n", w->name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "" : "MISMATCH");
    }

    if (!all_match) {
        std::printf("FAIL: parallel search disagreed with the serial reference\n");
        return 1;
    }
    std::printf("parallel search matched the serial reference on every instance\n");
    return 0;
}
