#ifndef GENFACTOR_FPT_SOLVER_HPP
#define GENFACTOR_FPT_SOLVER_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "genfactor/instance.hpp"
#include "genfactor/transforms.hpp"
#include "genfactor/union_find.hpp"

namespace genfactor {

enum class FastPathMode { automatic, on, off };

struct SolveOptions {
    FastPathMode fast_path = FastPathMode::automatic;
    int threads = 1;            // OpenMP workers for the forest search
    bool deterministic = false; // force the serial reference search
    bool count_all = false;     // explore the whole space (full counters)
};

struct SolveStats {
    int k = 0;                        // number of V vertices
    int modules_found = 0;            // contractible groups after merging
    int passthrough_vertices = 0;     // U vertices kept as-is (capacity > 1 somewhere)
    int contracted_edge_count = 0;    // edges of the contracted instance
    long long x_subsets_explored = 0; // candidate full-edge sets tried
    long long forests_explored = 0;   // spanning forests enumerated
    long long forest_solves = 0;      // forest sub-instances solved
    bool fast_path = false;
    bool yes = false;
};

struct SolveResult {
    Decision decision;
    SolveStats stats;
};

// Enumerates candidate full-edge sets of `inst`: subsets of the edges with
// capacity >= 1, by ascending size and lexicographically (by edge id) within
// a size. A subset is skipped (with its supersets, via prefix pruning) when
// some vertex already exceeds the largest entry of its degree list:
// d_X(x) > max K(x). Callback: bool(const FullEdgeSelection&); returning
// false stops the enumeration.
template <typename Callback>
void for_each_full_edge_set(const Instance& inst, Callback&& cb);

// Enumerates the edge sets of maximal spanning forests of `inst` (one
// spanning tree per connected component), in the include-edge-first
// backtracking order over edge ids. Callback: bool(std::span<const int>);
// returning false stops the enumeration.
template <typename Callback>
void for_each_spanning_forest(const Instance& inst, Callback&& cb);

// Decision procedure for instances whose U-side lists are all singletons,
// parameterized by the V-side size: contracts largest-possible groups of
// interchangeable U vertices, then searches over (candidate full-edge set,
// spanning forest) pairs, solving one forest instance per pair.
// Requires a normalized instance (as produced by normalize()); the witness
// is indexed by that instance's edges.
SolveResult solve(const Instance& normalized, const SolveOptions& options = {});

// Shortcut for the all-lists-{1} case: no full edge can exist in any factor
// (degrees are 0/1), so only the spanning-forest search remains.
SolveResult solve_singleton_ones(const Instance& normalized, const SolveOptions& options = {});

// Front door: normalizes, dispatches per options.fast_path (automatic picks
// the shortcut exactly when every U list is {1}), and maps the witness back
// to `original`'s edges. FastPathMode::on throws std::invalid_argument if the
// normalized instance is not all-{1}.
SolveResult solve_instance(const Instance& original, const SolveOptions& options = {});

// --- template definitions ---

namespace detail {

template <typename Callback>
bool full_edge_sets_rec(const Instance& inst, const std::vector<int>& cand,
                        const std::vector<Weight>& max_entry, std::vector<Weight>& dx,
                        FullEdgeSelection& sel, size_t start, size_t need, Callback& cb) {
    if (need == 0) return cb(const_cast<const FullEdgeSelection&>(sel));
    for (size_t i = start; i + need <= cand.size(); ++i) {
        const Edge& e = inst.edge(cand[i]);
        const int uslot = e.u - 1;
        const int vslot = inst.num_u() + e.v - 1;
        dx[uslot] += e.capacity;
        dx[vslot] += e.capacity;
        const bool admissible = dx[uslot] <= max_entry[uslot] && dx[vslot] <= max_entry[vslot];
        bool keep_going = true;
        if (admissible) {
            sel.edge_ids.push_back(cand[i]);
            keep_going = full_edge_sets_rec(inst, cand, max_entry, dx, sel, i + 1, need - 1, cb);
            sel.edge_ids.pop_back();
        }
        dx[uslot] -= e.capacity;
        dx[vslot] -= e.capacity;
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

template <typename Callback>
void for_each_full_edge_set(const Instance& inst, Callback&& cb) {
    const int n = inst.num_vertices();
    std::vector<Weight> max_entry(static_cast<size_t>(n));
    bool any_empty = false;
    for (int i = 0; i < inst.num_u(); ++i) {
        const DegreeList& l = inst.list(u_vertex(i + 1));
        if (l.empty()) any_empty = true;
        max_entry[static_cast<size_t>(i)] = l.empty() ? -1 : l.back();
    }
    for (int j = 0; j < inst.num_v(); ++j) {
        const DegreeList& l = inst.list(v_vertex(j + 1));
        if (l.empty()) any_empty = true;
        max_entry[static_cast<size_t>(inst.num_u() + j)] = l.empty() ? -1 : l.back();
    }
    if (any_empty) return;  // every subset (even the empty one) is inadmissible

    std::vector<int> cand;
    for (int id = 0; id < inst.num_edges(); ++id)
        if (inst.edge(id).capacity >= 1) cand.push_back(id);

    std::vector<Weight> dx(static_cast<size_t>(n), 0);
    FullEdgeSelection sel;
    for (size_t size = 0; size <= cand.size(); ++size)
        if (!detail::full_edge_sets_rec(inst, cand, max_entry, dx, sel, 0, size, cb)) return;
}

namespace detail {

// Can `target` be reached from `source` in the graph whose vertices are the
// current DSU components and whose edges are inst.edge(id) for id >= from?
bool components_connectable(const Instance& inst, const RollbackDsu& dsu, int from, int source,
                            int target, std::vector<int>& visited, int stamp);

template <typename Callback>
bool spanning_forests_rec(const Instance& inst, RollbackDsu& dsu, std::vector<int>& chosen,
                          int pos, std::vector<int>& visited, int& stamp, Callback& cb) {
    const int m = inst.num_edges();
    while (pos < m) {
        const Edge& e = inst.edge(pos);
        const int a = e.u - 1;
        const int b = inst.num_u() + e.v - 1;
        if (dsu.same(a, b)) {
            ++pos;  // would close a cycle; never part of a forest here
            continue;
        }
        // Include pos.
        const size_t mark = dsu.checkpoint();
        dsu.unite(a, b);
        chosen.push_back(pos);
        const bool keep_going = spanning_forests_rec(inst, dsu, chosen, pos + 1, visited, stamp, cb);
        chosen.pop_back();
        dsu.rollback(mark);
        if (!keep_going) return false;
        // Exclude pos: only valid if its endpoints can still be connected by
        // later edges (the forest must be maximal).
        ++stamp;
        if (!components_connectable(inst, dsu, pos + 1, a, b, visited, stamp)) return true;
        ++pos;
    }
    return cb(std::span<const int>(chosen));
}

}  // namespace detail

template <typename Callback>
void for_each_spanning_forest(const Instance& inst, Callback&& cb) {
    RollbackDsu dsu(inst.num_vertices());
    std::vector<int> chosen;
    std::vector<int> visited(static_cast<size_t>(inst.num_vertices()), 0);
    int stamp = 0;
    detail::spanning_forests_rec(inst, dsu, chosen, 0, visited, stamp, cb);
}

}  // namespace genfactor

#endif
