#include "genfactor/forest_solver.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "genfactor/transforms.hpp"

namespace genfactor {

ForestInstance::ForestInstance(Instance inst) : inst_(std::move(inst)) {
    std::vector<int> all(static_cast<size_t>(inst_.num_edges()));
    for (int id = 0; id < inst_.num_edges(); ++id) all[static_cast<size_t>(id)] = id;
    if (!edges_form_forest(inst_, all))
        throw std::invalid_argument("instance graph contains a cycle");
}

namespace {

// Leaf-elimination over an acyclic edge subset of `base`. Vertices use
// unified ids: U vertex i -> i-1, V vertex j -> num_u + j - 1 (this matches
// the canonical vertex order). Returned weights are positional in
// `forest_edges`.
struct EliminationOutcome {
    bool yes = false;
    std::vector<Weight> weights;  // per position in forest_edges
    int rule_applications = 0;
};

struct TraceEntry {
    int removed = 0;
    int neighbor = 0;
    int edge_pos = 0;  // position in forest_edges
    Degree1Witnesses witnesses;
};

EliminationOutcome eliminate(const Instance& base, std::span<const int> forest_edges) {
    const int n = base.num_vertices();
    const int nu = base.num_u();
    EliminationOutcome out;

    struct HalfEdge {
        int pos;    // position in forest_edges
        int other;  // unified id of the other endpoint
    };
    std::vector<std::vector<HalfEdge>> adj(static_cast<size_t>(n));
    std::vector<Weight> caps(forest_edges.size());
    for (size_t pos = 0; pos < forest_edges.size(); ++pos) {
        const Edge& e = base.edge(forest_edges[pos]);
        const int a = e.u - 1;
        const int b = nu + e.v - 1;
        adj[static_cast<size_t>(a)].push_back({static_cast<int>(pos), b});
        adj[static_cast<size_t>(b)].push_back({static_cast<int>(pos), a});
        caps[pos] = e.capacity;
    }

    std::vector<DegreeList> lists(static_cast<size_t>(n));
    for (int i = 1; i <= nu; ++i) lists[static_cast<size_t>(i - 1)] = base.list(u_vertex(i));
    for (int j = 1; j <= base.num_v(); ++j)
        lists[static_cast<size_t>(nu + j - 1)] = base.list(v_vertex(j));

    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x) deg[static_cast<size_t>(x)] = static_cast<int>(adj[static_cast<size_t>(x)].size());
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<char> edge_alive(forest_edges.size(), 1);

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int x = 0; x < n; ++x)
        if (deg[static_cast<size_t>(x)] <= 1) ready.push(x);

    std::vector<TraceEntry> trace;
    int alive_count = n;

    auto find_alive_edge = [&](int x) -> HalfEdge {
        for (const HalfEdge& h : adj[static_cast<size_t>(x)])
            if (edge_alive[static_cast<size_t>(h.pos)]) return h;
        assert(false);
        return {-1, -1};
    };

    // Returns false on a dead end (no factor).
    auto remove = [&](int z) -> bool {
        ++out.rule_applications;
        if (deg[static_cast<size_t>(z)] == 0) {
            if (!list_contains(lists[static_cast<size_t>(z)], 0)) return false;
            alive[static_cast<size_t>(z)] = 0;
            --alive_count;
            return true;
        }
        const HalfEdge h = find_alive_edge(z);
        const int y = h.other;
        Degree1Witnesses wit =
            combine_degree1_lists(lists[static_cast<size_t>(z)], lists[static_cast<size_t>(y)],
                                  caps[static_cast<size_t>(h.pos)]);
        if (wit.empty()) return false;
        DegreeList reduced;
        for (const auto& [key, pairs] : wit) reduced.push_back(key);
        lists[static_cast<size_t>(y)] = std::move(reduced);
        trace.push_back({z, y, h.pos, std::move(wit)});
        edge_alive[static_cast<size_t>(h.pos)] = 0;
        alive[static_cast<size_t>(z)] = 0;
        --alive_count;
        if (--deg[static_cast<size_t>(y)] <= 1) ready.push(y);
        return true;
    };

    while (alive_count > 0) {
        if (ready.empty())  // cannot happen on forests: there is always a leaf
            throw std::logic_error("elimination stalled on a non-forest input");
        const int x = ready.top();
        ready.pop();
        if (!alive[static_cast<size_t>(x)]) continue;
        // On an isolated edge, take down the V endpoint before the U one.
        if (x < nu && deg[static_cast<size_t>(x)] == 1) {
            const HalfEdge h = find_alive_edge(x);
            if (deg[static_cast<size_t>(h.other)] == 1) {
                if (!remove(h.other)) return out;
                ready.push(x);
                continue;
            }
        }
        if (!remove(x)) return out;
    }

    // Reconstruct weights by replaying eliminations backwards: when an entry
    // is undone, the neighbor's already-restored weight total is exactly the
    // residual degree the merge recorded, so one of its witness pairs applies.
    out.yes = true;
    out.weights.assign(forest_edges.size(), 0);
    std::vector<Weight> committed(static_cast<size_t>(n), 0);
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        const auto found = it->witnesses.find(committed[static_cast<size_t>(it->neighbor)]);
        assert(found != it->witnesses.end());
        const Weight w = found->second.front().first;  // the edge's weight
        out.weights[static_cast<size_t>(it->edge_pos)] = w;
        committed[static_cast<size_t>(it->removed)] += w;
        committed[static_cast<size_t>(it->neighbor)] += w;
    }
    return out;
}

}  // namespace

ForestSolveResult solve_forest(const ForestInstance& forest) {
    const Instance& inst = forest.instance();
    std::vector<int> all(static_cast<size_t>(inst.num_edges()));
    for (int id = 0; id < inst.num_edges(); ++id) all[static_cast<size_t>(id)] = id;
    return solve_forest_subset(inst, all);
}

ForestSolveResult solve_forest_subset(const Instance& base, std::span<const int> forest_edges) {
    if (!edges_form_forest(base, forest_edges))
        throw std::invalid_argument("edge subset contains a cycle");
    EliminationOutcome outcome = eliminate(base, forest_edges);
    ForestSolveResult result;
    result.rule_applications = outcome.rule_applications;
    if (!outcome.yes) {
        result.decision = Decision::no();
        return result;
    }
    EdgeWeighting full(static_cast<size_t>(base.num_edges()), 0);
    for (size_t pos = 0; pos < forest_edges.size(); ++pos)
        full[static_cast<size_t>(forest_edges[pos])] = outcome.weights[pos];
    result.decision = Decision::found(std::move(full));
    return result;
}

}  // namespace genfactor
