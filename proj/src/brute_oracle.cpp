#include "genfactor/brute_oracle.hpp"

#include <algorithm>

namespace genfactor {

namespace {

// Backtracking assignment of edge weights in edge-id order. A branch is cut
// as soon as some endpoint can no longer land inside its degree list:
// K(x) must intersect [committed(x), committed(x) + remaining_capacity(x)].
// (Only the two endpoints of the edge just assigned can newly fail, and at
// the root every vertex is checked once.)
struct Searcher {
    const Instance& inst;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<Weight> committed;  // unified-id weighted degree so far
    std::vector<Weight> remaining;  // unified-id capacity in unassigned edges
    EdgeWeighting weights;

    explicit Searcher(const Instance& i, long long budget_)
        : inst(i), budget(budget_),
          committed(static_cast<size_t>(i.num_vertices()), 0),
          remaining(static_cast<size_t>(i.num_vertices()), 0),
          weights(static_cast<size_t>(i.num_edges()), 0) {
        for (int id = 0; id < inst.num_edges(); ++id) {
            const Edge& e = inst.edge(id);
            remaining[uid_u(e.u)] += e.capacity;
            remaining[uid_v(e.v)] += e.capacity;
        }
    }

    size_t uid_u(int u) const { return static_cast<size_t>(u - 1); }
    size_t uid_v(int v) const { return static_cast<size_t>(inst.num_u() + v - 1); }

    bool reachable(size_t x, Vertex vert) const {
        const DegreeList& list = inst.list(vert);
        const Weight lo = committed[x];
        const Weight hi = committed[x] + remaining[x];
        auto it = std::lower_bound(list.begin(), list.end(), lo);
        return it != list.end() && *it <= hi;
    }

    bool all_reachable_at_root() const {
        for (int i = 1; i <= inst.num_u(); ++i)
            if (!reachable(uid_u(i), u_vertex(i))) return false;
        for (int j = 1; j <= inst.num_v(); ++j)
            if (!reachable(uid_v(j), v_vertex(j))) return false;
        return true;
    }

    // emit returns false to stop the whole search (decision mode).
    template <typename Emit>
    bool assign(int id, Emit&& emit) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (id == inst.num_edges()) return emit(weights);
        const Edge& e = inst.edge(id);
        const size_t a = uid_u(e.u);
        const size_t b = uid_v(e.v);
        for (Weight w = 0; w <= e.capacity; ++w) {
            weights[static_cast<size_t>(id)] = w;
            committed[a] += w;
            committed[b] += w;
            remaining[a] -= e.capacity;
            remaining[b] -= e.capacity;
            const bool viable = reachable(a, u_vertex(e.u)) && reachable(b, v_vertex(e.v));
            bool keep_going = true;
            if (viable) keep_going = assign(id + 1, emit);
            committed[a] -= w;
            committed[b] -= w;
            remaining[a] += e.capacity;
            remaining[b] += e.capacity;
            if (!keep_going) {
                weights[static_cast<size_t>(id)] = 0;
                return false;
            }
        }
        weights[static_cast<size_t>(id)] = 0;
        return true;
    }
};

}  // namespace

OracleResult solve_bruteforce(const Instance& inst, const OracleOptions& options) {
    Searcher s(inst, options.node_budget);
    OracleResult result;
    if (s.all_reachable_at_root()) {
        s.assign(0, [&](const EdgeWeighting& w) {
            result.witness = w;
            return false;
        });
    }
    result.nodes = s.nodes;
    if (s.out_of_budget && !result.witness) {
        result.status = OracleStatus::budget_exceeded;
    } else {
        result.status = result.witness ? OracleStatus::yes : OracleStatus::no;
    }
    return result;
}

EnumerationResult enumerate_all_factors(const Instance& inst, const OracleOptions& options) {
    Searcher s(inst, options.node_budget);
    EnumerationResult result;
    if (s.all_reachable_at_root()) {
        s.assign(0, [&](const EdgeWeighting& w) {
            result.factors.push_back(w);
            return true;
        });
    }
    result.nodes = s.nodes;
    result.complete = !s.out_of_budget;
    return result;
}

}  // namespace genfactor
