#include "genfactor/transforms.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace genfactor {

ModulePartition find_module_partition(const Instance& inst) {
    for (int i = 1; i <= inst.num_u(); ++i)
        if (inst.list(u_vertex(i)).size() != 1)
            throw std::invalid_argument(
                "degree list of u " + std::to_string(i) +
                " is not a singleton; grouping requires singleton U-lists "
                "(use the brute-force oracle for general lists)");

    // Group key: (constant, sorted neighborhood). Only vertices whose
    // incident capacities are all 1 may be merged.
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    std::vector<Module> singletons;
    for (int i = 1; i <= inst.num_u(); ++i) {
        const Vertex x = u_vertex(i);
        bool unit = true;
        std::vector<int> nbrs;
        for (int id : inst.incident_edges(x)) {
            if (inst.edge(id).capacity != 1) unit = false;
            nbrs.push_back(inst.edge(id).v);
        }
        const int c = inst.list(x)[0];
        if (unit) {
            groups[{c, std::move(nbrs)}].push_back(i);
        } else {
            singletons.push_back(Module{{i}, c, std::move(nbrs), false});
        }
    }

    ModulePartition mp;
    for (auto& [key, members] : groups)
        mp.modules.push_back(Module{std::move(members), key.first, key.second, true});
    for (auto& m : singletons) mp.modules.push_back(std::move(m));
    std::sort(mp.modules.begin(), mp.modules.end(),
              [](const Module& a, const Module& b) { return a.members[0] < b.members[0]; });

    mp.module_of.assign(static_cast<size_t>(inst.num_u()), -1);
    for (size_t g = 0; g < mp.modules.size(); ++g)
        for (int member : mp.modules[g].members)
            mp.module_of[static_cast<size_t>(member - 1)] = static_cast<int>(g);
    return mp;
}

namespace {

void check_partition(const Instance& inst, const ModulePartition& mp) {
    std::vector<char> seen(static_cast<size_t>(inst.num_u()), 0);
    for (const Module& m : mp.modules) {
        if (m.members.empty()) throw std::invalid_argument("empty group in module partition");
        for (int u : m.members) {
            if (u < 1 || u > inst.num_u() || seen[static_cast<size_t>(u - 1)])
                throw std::invalid_argument("module partition does not partition the U side");
            seen[static_cast<size_t>(u - 1)] = 1;
            const DegreeList& l = inst.list(u_vertex(u));
            if (l.size() != 1 || l[0] != m.constant)
                throw std::invalid_argument("group constant does not match a member's degree list");
        }
        if (m.members.size() >= 2) {
            for (int u : m.members) {
                std::vector<int> nbrs;
                for (int id : inst.incident_edges(u_vertex(u))) {
                    if (inst.edge(id).capacity != 1)
                        throw std::invalid_argument("merged group member has a capacity != 1");
                    nbrs.push_back(inst.edge(id).v);
                }
                if (nbrs != m.neighbors)
                    throw std::invalid_argument("merged group members have differing neighborhoods");
            }
        }
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("module partition misses a U vertex");
}

}  // namespace

Instance contract_modules(const Instance& original, const ModulePartition& mp) {
    check_partition(original, mp);
    const int p = static_cast<int>(mp.modules.size());
    std::vector<Edge> edges;
    std::vector<DegreeList> u_lists;
    u_lists.reserve(static_cast<size_t>(p));
    for (int g = 0; g < p; ++g) {
        const Module& m = mp.modules[static_cast<size_t>(g)];
        const int s = static_cast<int>(m.members.size());
        if (s >= 2) {
            for (int v : m.neighbors) edges.push_back({g + 1, v, s});
            u_lists.push_back({m.constant * s});
        } else {
            for (int id : original.incident_edges(u_vertex(m.members[0]))) {
                const Edge& e = original.edge(id);
                edges.push_back({g + 1, e.v, e.capacity});
            }
            u_lists.push_back(original.list(u_vertex(m.members[0])));
        }
    }
    std::vector<DegreeList> v_lists(original.v_lists().begin(), original.v_lists().end());
    return Instance(p, original.num_v(), std::move(edges), std::move(u_lists), std::move(v_lists));
}

EdgeWeighting expand_factor(const Instance& original, const ModulePartition& mp,
                            const Instance& contracted, std::span<const Weight> phi_contracted) {
    const VerifyResult check = verify_factor(contracted, phi_contracted);
    if (!check.ok)
        throw std::invalid_argument("weighting is not a factor of the contracted instance: " +
                                    describe(contracted, *check.violation));

    EdgeWeighting out(static_cast<size_t>(original.num_edges()), 0);
    for (size_t g = 0; g < mp.modules.size(); ++g) {
        const Module& m = mp.modules[g];
        const int s = static_cast<int>(m.members.size());
        const Vertex rep = u_vertex(static_cast<int>(g) + 1);
        if (s == 1) {
            for (int id : original.incident_edges(u_vertex(m.members[0]))) {
                const Edge& e = original.edge(id);
                const auto cid = contracted.find_edge(rep.index, e.v);
                assert(cid);
                out[static_cast<size_t>(id)] = phi_contracted[static_cast<size_t>(*cid)];
            }
            continue;
        }
        // Round-robin distribution over the members, walking the neighbors in
        // ascending order and wrapping modulo the group size.
        Weight prefix = 0;  // S_{i-1}
        for (int v : m.neighbors) {
            const auto cid = contracted.find_edge(rep.index, v);
            assert(cid);
            const Weight take = phi_contracted[static_cast<size_t>(*cid)];
            for (Weight l = 1; l <= take; ++l) {
                const int j = static_cast<int>((prefix + l - 1) % s) + 1;
                const int member = m.members[static_cast<size_t>(j - 1)];
                const auto oid = original.find_edge(member, v);
                assert(oid);
                out[static_cast<size_t>(*oid)] = 1;
            }
            prefix += take;
        }
    }
    return out;
}

Instance subtract_full_edges(const Instance& original, const FullEdgeSelection& sel) {
    std::vector<int> ids = sel.edge_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<char> in_x(static_cast<size_t>(original.num_edges()), 0);
    for (int id : ids) {
        if (id < 0 || id >= original.num_edges())
            throw std::invalid_argument("selected edge id out of range");
        if (original.edge(id).capacity < 1)
            throw std::invalid_argument("selected edge has zero capacity and can never be full");
        in_x[static_cast<size_t>(id)] = 1;
    }

    std::vector<Weight> removed_u(static_cast<size_t>(original.num_u()), 0);
    std::vector<Weight> removed_v(static_cast<size_t>(original.num_v()), 0);
    for (int id : ids) {
        const Edge& e = original.edge(id);
        removed_u[static_cast<size_t>(e.u - 1)] += e.capacity;
        removed_v[static_cast<size_t>(e.v - 1)] += e.capacity;
    }

    std::vector<Edge> edges;
    for (int id = 0; id < original.num_edges(); ++id) {
        if (in_x[static_cast<size_t>(id)]) continue;
        const Edge& e = original.edge(id);
        edges.push_back({e.u, e.v, std::max(e.capacity - 1, 0)});
    }

    auto shift_list = [](const DegreeList& list, Weight removed) {
        DegreeList out;
        for (int c : list)
            if (c >= removed) out.push_back(c - removed);
        return out;
    };
    std::vector<DegreeList> u_lists, v_lists;
    for (int i = 1; i <= original.num_u(); ++i)
        u_lists.push_back(shift_list(original.list(u_vertex(i)), removed_u[static_cast<size_t>(i - 1)]));
    for (int j = 1; j <= original.num_v(); ++j)
        v_lists.push_back(shift_list(original.list(v_vertex(j)), removed_v[static_cast<size_t>(j - 1)]));
    return Instance(original.num_u(), original.num_v(), std::move(edges), std::move(u_lists),
                    std::move(v_lists));
}

EdgeWeighting lift_factor_over_X(const Instance& original, const FullEdgeSelection& sel,
                                 std::span<const Weight> phi_sub) {
    const Instance sub = subtract_full_edges(original, sel);
    const VerifyResult check = verify_factor(sub, phi_sub);
    if (!check.ok)
        throw std::invalid_argument("weighting is not a factor of the subtracted instance: " +
                                    describe(sub, *check.violation));
    std::vector<char> in_x(static_cast<size_t>(original.num_edges()), 0);
    for (int id : sel.edge_ids) in_x[static_cast<size_t>(id)] = 1;

    EdgeWeighting out(static_cast<size_t>(original.num_edges()), 0);
    size_t sub_id = 0;
    for (int id = 0; id < original.num_edges(); ++id) {
        if (in_x[static_cast<size_t>(id)]) {
            out[static_cast<size_t>(id)] = original.edge(id).capacity;
        } else {
            out[static_cast<size_t>(id)] = phi_sub[sub_id];
            ++sub_id;
        }
    }
    const VerifyResult lifted = verify_factor(original, out);
    if (!lifted.ok)
        throw std::logic_error("lifted weighting failed verification: " +
                               describe(original, *lifted.violation));
    return out;
}

int v_major_position(const Instance& inst, int edge_id) {
    const Edge& e = inst.edge(edge_id);
    return (e.v - 1) * inst.num_u() + (e.u - 1);
}

int compare_weightings_v_major(const Instance& inst, std::span<const Weight> a,
                               std::span<const Weight> b) {
    std::vector<int> order(static_cast<size_t>(inst.num_edges()));
    for (int id = 0; id < inst.num_edges(); ++id) order[static_cast<size_t>(id)] = id;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return v_major_position(inst, x) < v_major_position(inst, y);
    });
    for (int id : order) {
        const Weight wa = a[static_cast<size_t>(id)];
        const Weight wb = b[static_cast<size_t>(id)];
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    return 0;
}

namespace {

// One cycle of the subgraph formed by `active` edges, as a closed edge walk,
// or empty if the subgraph is a forest. Peels degree<=1 vertices; whatever
// remains has minimum degree 2, so a walk that never reverses its last edge
// must revisit a vertex, closing a cycle.
std::vector<int> find_cycle(const Instance& inst, const std::vector<char>& active) {
    const int n = inst.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (edge, other)
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int id = 0; id < inst.num_edges(); ++id) {
        if (!active[static_cast<size_t>(id)]) continue;
        const Edge& e = inst.edge(id);
        const int a = e.u - 1;
        const int b = inst.num_u() + e.v - 1;
        adj[static_cast<size_t>(a)].push_back({id, b});
        adj[static_cast<size_t>(b)].push_back({id, a});
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    std::vector<char> peeled(static_cast<size_t>(n), 0);
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
        if (deg[static_cast<size_t>(x)] <= 1) queue.push_back(x);
    while (!queue.empty()) {
        const int x = queue.back();
        queue.pop_back();
        if (peeled[static_cast<size_t>(x)]) continue;
        peeled[static_cast<size_t>(x)] = 1;
        for (auto [eid, y] : adj[static_cast<size_t>(x)])
            if (!peeled[static_cast<size_t>(y)] && --deg[static_cast<size_t>(y)] <= 1)
                queue.push_back(y);
    }
    int start = -1;
    for (int x = 0; x < n && start == -1; ++x)
        if (!peeled[static_cast<size_t>(x)]) start = x;
    if (start == -1) return {};

    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::vector<int> path_edges;
    pos[static_cast<size_t>(start)] = 0;
    int cur = start;
    int prev_edge = -1;
    while (true) {
        int next_edge = -1;
        int next_vertex = -1;
        for (auto [eid, y] : adj[static_cast<size_t>(cur)]) {
            if (peeled[static_cast<size_t>(y)] || eid == prev_edge) continue;
            next_edge = eid;
            next_vertex = y;
            break;
        }
        assert(next_edge != -1);  // the peeled core has minimum degree 2
        if (pos[static_cast<size_t>(next_vertex)] != -1) {
            std::vector<int> cycle(path_edges.begin() + pos[static_cast<size_t>(next_vertex)],
                                   path_edges.end());
            cycle.push_back(next_edge);
            return cycle;
        }
        path_edges.push_back(next_edge);
        pos[static_cast<size_t>(next_vertex)] = static_cast<int>(path_edges.size());
        prev_edge = next_edge;
        cur = next_vertex;
    }
}

}  // namespace

EdgeWeighting acyclify(const Instance& inst, std::span<const Weight> phi,
                       const std::function<void(const AcyclifyStep&)>& observer) {
    const VerifyResult check = verify_factor(inst, phi);
    if (!check.ok)
        throw std::invalid_argument("weighting is not a factor: " + describe(inst, *check.violation));

    EdgeWeighting cur(phi.begin(), phi.end());
    while (true) {
        std::vector<char> in_skeleton(static_cast<size_t>(inst.num_edges()), 0);
        for (int id = 0; id < inst.num_edges(); ++id) {
            const Weight w = cur[static_cast<size_t>(id)];
            if (w > 0 && w < inst.edge(id).capacity) in_skeleton[static_cast<size_t>(id)] = 1;
        }
        std::vector<int> walk = find_cycle(inst, in_skeleton);
        if (walk.empty()) break;

        // Rotate the closed walk so the lowest v-major position comes first;
        // raising that edge is the direction that grows the weighting
        // lexicographically.
        size_t best = 0;
        for (size_t i = 1; i < walk.size(); ++i)
            if (v_major_position(inst, walk[i]) < v_major_position(inst, walk[best])) best = i;
        std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(best), walk.end());

        // Alternate +delta / -delta along the walk; bipartiteness makes the
        // walk even, so every vertex on the cycle keeps its degree.
        Weight delta = 0;
        for (size_t i = 0; i < walk.size(); ++i) {
            const int id = walk[i];
            const Weight headroom = i % 2 == 0 ? inst.edge(id).capacity - cur[static_cast<size_t>(id)]
                                               : cur[static_cast<size_t>(id)];
            delta = i == 0 ? headroom : std::min(delta, headroom);
        }
        assert(walk.size() % 2 == 0);
        assert(delta >= 1);
        for (size_t i = 0; i < walk.size(); ++i)
            cur[static_cast<size_t>(walk[i])] += i % 2 == 0 ? delta : -delta;

        if (observer) observer(AcyclifyStep{walk, delta});
    }
    return cur;
}

namespace {

Instance remove_vertex(const Instance& inst, Vertex x,
                       std::vector<DegreeList> u_lists, std::vector<DegreeList> v_lists) {
    const bool on_u = x.side == Side::U;
    std::vector<Edge> edges;
    for (const Edge& e : inst.edges()) {
        if (on_u && e.u == x.index) continue;
        if (!on_u && e.v == x.index) continue;
        Edge copy = e;
        if (on_u && copy.u > x.index) --copy.u;
        if (!on_u && copy.v > x.index) --copy.v;
        edges.push_back(copy);
    }
    auto& lists = on_u ? u_lists : v_lists;
    lists.erase(lists.begin() + (x.index - 1));
    return Instance(inst.num_u() - (on_u ? 1 : 0), inst.num_v() - (on_u ? 0 : 1),
                    std::move(edges), std::move(u_lists), std::move(v_lists));
}

}  // namespace

std::optional<Instance> apply_degree0_rule(const Instance& inst, Vertex x) {
    if (inst.degree(x) != 0)
        throw std::invalid_argument(to_string(x) + " has positive degree");
    if (!list_contains(inst.list(x), 0)) return std::nullopt;
    return remove_vertex(inst, x, {inst.u_lists().begin(), inst.u_lists().end()},
                         {inst.v_lists().begin(), inst.v_lists().end()});
}

Degree1Witnesses combine_degree1_lists(const DegreeList& list_x, const DegreeList& list_y,
                                       Weight rho) {
    Degree1Witnesses out;
    for (int cy : list_y)
        for (int cx : list_x)
            if (cx <= std::min<Weight>(rho, cy)) out[cy - cx].push_back({cx, cy});
    for (auto& [key, pairs] : out) std::sort(pairs.begin(), pairs.end());
    return out;
}

Degree1Result apply_degree1_rule(const Instance& inst, Vertex x) {
    if (inst.degree(x) != 1)
        throw std::invalid_argument(to_string(x) + " does not have degree 1");
    const int eid = inst.incident_edges(x)[0];
    const Edge& e = inst.edge(eid);
    const Vertex y = x.side == Side::U ? v_vertex(e.v) : u_vertex(e.u);

    Degree1Witnesses witnesses = combine_degree1_lists(inst.list(x), inst.list(y), e.capacity);
    DegreeList new_list;
    for (const auto& [key, pairs] : witnesses) new_list.push_back(key);

    std::vector<DegreeList> u_lists(inst.u_lists().begin(), inst.u_lists().end());
    std::vector<DegreeList> v_lists(inst.v_lists().begin(), inst.v_lists().end());
    (y.side == Side::U ? u_lists : v_lists)[static_cast<size_t>(y.index - 1)] = std::move(new_list);
    return Degree1Result{remove_vertex(inst, x, std::move(u_lists), std::move(v_lists)),
                         std::move(witnesses)};
}

}  // namespace genfactor
