#include "genfactor/fpt_solver.hpp"

#include <cassert>
#include <stdexcept>

#include "genfactor/forest_solver.hpp"

namespace genfactor {

namespace detail {

bool components_connectable(const Instance& inst, const RollbackDsu& dsu, int from, int source,
                            int target, std::vector<int>& visited, int stamp) {
    const int src = dsu.find(source);
    const int dst = dsu.find(target);
    if (src == dst) return true;
    // Breadth-first search over DSU components using the not-yet-decided
    // edges. `visited` carries per-call stamps so no clearing is needed.
    std::vector<int> frontier{src};
    visited[static_cast<size_t>(src)] = stamp;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int id = from; id < inst.num_edges(); ++id) {
            const Edge& e = inst.edge(id);
            const int a = dsu.find(e.u - 1);
            const int b = dsu.find(inst.num_u() + e.v - 1);
            if (a == b) continue;
            const bool va = visited[static_cast<size_t>(a)] == stamp;
            const bool vb = visited[static_cast<size_t>(b)] == stamp;
            if (va == vb) continue;
            const int fresh = va ? b : a;
            if (fresh == dst) return true;
            visited[static_cast<size_t>(fresh)] = stamp;
            next.push_back(fresh);
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return false;
}

}  // namespace detail

namespace {

bool all_u_lists_are(const Instance& inst, const DegreeList& wanted) {
    for (int i = 1; i <= inst.num_u(); ++i)
        if (inst.list(u_vertex(i)) != wanted) return false;
    return true;
}

void require_normalized(const Instance& inst) {
    for (int i = 1; i <= inst.num_u(); ++i) {
        const DegreeList& l = inst.list(u_vertex(i));
        if (l.empty() || (l.size() == 1 && l[0] == 0))
            throw std::invalid_argument("instance is not normalized (run normalize first)");
    }
    for (int j = 1; j <= inst.num_v(); ++j) {
        const DegreeList& l = inst.list(v_vertex(j));
        if (l.empty() || (l.size() == 1 && l[0] == 0))
            throw std::invalid_argument("instance is not normalized (run normalize first)");
    }
}

struct SearchAccumulator {
    long long forests = 0;
    long long solves = 0;
    std::optional<EdgeWeighting> witness;
};

SearchAccumulator search_forests_serial(const Instance& base, bool count_all) {
    SearchAccumulator acc;
    for_each_spanning_forest(base, [&](std::span<const int> forest) {
        ++acc.forests;
        ++acc.solves;
        ForestSolveResult r = solve_forest_subset(base, forest);
        if (r.decision.yes()) {
            if (!acc.witness) acc.witness = std::move(r.decision.witness);
            return count_all;
        }
        return true;
    });
    return acc;
}

// Batched parallel variant. Decision, witness and counters are identical to
// the serial search: batches are formed in enumeration order, every batch is
// solved in full, and the winner is the first success within the batch (so
// counters advance exactly to the winner, as the serial loop would).
SearchAccumulator search_forests_parallel(const Instance& base, int threads, bool count_all) {
    SearchAccumulator acc;
    const size_t batch_cap = static_cast<size_t>(threads) * 8;
    std::vector<std::vector<int>> batch;

    auto flush = [&]() -> bool {  // returns true when the search is finished
        if (batch.empty()) return false;
        std::vector<std::optional<EdgeWeighting>> found(batch.size());
        const int n = static_cast<int>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int i = 0; i < n; ++i) {
            ForestSolveResult r = solve_forest_subset(base, batch[static_cast<size_t>(i)]);
            if (r.decision.yes()) found[static_cast<size_t>(i)] = std::move(r.decision.witness);
        }
        size_t winner = batch.size();
        for (size_t i = 0; i < batch.size(); ++i)
            if (found[i]) {
                winner = i;
                break;
            }
        if (winner < batch.size() && !acc.witness) acc.witness = std::move(found[winner]);
        if (winner < batch.size() && !count_all) {
            acc.forests += static_cast<long long>(winner) + 1;
            acc.solves += static_cast<long long>(winner) + 1;
            batch.clear();
            return true;
        }
        acc.forests += static_cast<long long>(batch.size());
        acc.solves += static_cast<long long>(batch.size());
        batch.clear();
        return false;
    };

    bool done = false;
    for_each_spanning_forest(base, [&](std::span<const int> forest) {
        batch.emplace_back(forest.begin(), forest.end());
        if (batch.size() < batch_cap) return true;
        done = flush();
        return !done;
    });
    if (!done) flush();
    return acc;
}

SearchAccumulator search_forests(const Instance& base, const SolveOptions& options) {
    const int threads = options.deterministic ? 1 : std::max(1, options.threads);
    if (threads == 1) return search_forests_serial(base, options.count_all);
    return search_forests_parallel(base, threads, options.count_all);
}

SolveResult run_pipeline(const Instance& normalized, const SolveOptions& options, bool fast) {
    require_normalized(normalized);
    if (fast && !all_u_lists_are(normalized, {1}))
        throw std::invalid_argument("shortcut path requires every U-side list to be {1}");

    SolveStats stats;
    stats.k = normalized.num_v();
    stats.fast_path = fast;

    const ModulePartition mp = find_module_partition(normalized);  // throws on non-singleton lists
    const Instance im = contract_modules(normalized, mp);
    for (const Module& m : mp.modules)
        (m.contractible ? stats.modules_found : stats.passthrough_vertices) += 1;
    stats.contracted_edge_count = im.num_edges();

    std::optional<EdgeWeighting> witness;
    if (fast) {
        // Every factor of the contracted instance extends to a fully acyclic
        // one here, so searching maximal spanning forests alone is complete.
        stats.x_subsets_explored = 1;
        SearchAccumulator acc = search_forests(im, options);
        stats.forests_explored = acc.forests;
        stats.forest_solves = acc.solves;
        if (acc.witness) witness = expand_factor(normalized, mp, im, *acc.witness);
    } else {
        for_each_full_edge_set(im, [&](const FullEdgeSelection& sel) {
            ++stats.x_subsets_explored;
            const Instance imx = subtract_full_edges(im, sel);
            SearchAccumulator acc = search_forests(imx, options);
            stats.forests_explored += acc.forests;
            stats.forest_solves += acc.solves;
            if (acc.witness) {
                if (!witness) {
                    const EdgeWeighting on_im = lift_factor_over_X(im, sel, *acc.witness);
                    witness = expand_factor(normalized, mp, im, on_im);
                }
                return options.count_all;
            }
            return true;
        });
    }

    stats.yes = witness.has_value();
    SolveResult result;
    result.stats = stats;
    result.decision = witness ? Decision::found(std::move(*witness)) : Decision::no();
    return result;
}

}  // namespace

SolveResult solve(const Instance& normalized, const SolveOptions& options) {
    return run_pipeline(normalized, options, false);
}

SolveResult solve_singleton_ones(const Instance& normalized, const SolveOptions& options) {
    return run_pipeline(normalized, options, true);
}

SolveResult solve_instance(const Instance& original, const SolveOptions& options) {
    const std::optional<Normalization> nm = normalize(original);
    if (!nm) {
        SolveResult result;
        result.stats.k = original.num_v();
        return result;  // some list emptied out: no factor can exist
    }
    const bool all_ones = all_u_lists_are(nm->normalized, {1});
    bool fast = false;
    switch (options.fast_path) {
        case FastPathMode::automatic: fast = all_ones; break;
        case FastPathMode::on:
            if (!all_ones)
                throw std::invalid_argument(
                    "fast path requested but not every U-side list is {1} after normalization");
            fast = true;
            break;
        case FastPathMode::off: fast = false; break;
    }
    SolveResult result = fast ? solve_singleton_ones(nm->normalized, options)
                              : solve(nm->normalized, options);
    if (result.decision.yes()) {
        EdgeWeighting lifted = inflate_factor(original, *nm, *result.decision.witness);
        const VerifyResult check = verify_factor(original, lifted);
        if (!check.ok)
            throw std::logic_error("internal error: witness failed verification: " +
                                   describe(original, *check.violation));
        result.decision.witness = std::move(lifted);
    }
    return result;
}

}  // namespace genfactor
