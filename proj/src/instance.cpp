#include "genfactor/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include "genfactor/union_find.hpp"

namespace genfactor {

bool list_contains(const DegreeList& list, int value) {
    return std::binary_search(list.begin(), list.end(), value);
}

DegreeList canonical_list(DegreeList values) {
    for (int c : values)
        if (c < 0) throw std::invalid_argument("negative entry in degree list");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::string to_string(Vertex x) {
    return (x.side == Side::U ? "u " : "v ") + std::to_string(x.index);
}

Instance::Instance(int num_u, int num_v, std::vector<Edge> edges,
                   std::vector<DegreeList> u_lists, std::vector<DegreeList> v_lists)
    : num_u_(num_u), num_v_(num_v), edges_(std::move(edges)),
      u_lists_(std::move(u_lists)), v_lists_(std::move(v_lists)) {
    if (num_u_ < 0 || num_v_ < 0) throw std::invalid_argument("negative vertex count");
    if (u_lists_.size() != static_cast<size_t>(num_u_) ||
        v_lists_.size() != static_cast<size_t>(num_v_))
        throw std::invalid_argument("degree list count does not match vertex count");
    for (auto& l : u_lists_) l = canonical_list(std::move(l));
    for (auto& l : v_lists_) l = canonical_list(std::move(l));
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    u_incident_.assign(static_cast<size_t>(num_u_), {});
    v_incident_.assign(static_cast<size_t>(num_v_), {});
    for (int id = 0; id < num_edges(); ++id) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (e.u < 1 || e.u > num_u_ || e.v < 1 || e.v > num_v_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) + ")");
        if (e.capacity < 0)
            throw std::invalid_argument("negative capacity on edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        if (id > 0) {
            const Edge& prev = edges_[static_cast<size_t>(id - 1)];
            if (prev.u == e.u && prev.v == e.v)
                throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ")");
        }
        u_incident_[static_cast<size_t>(e.u - 1)].push_back(id);
        v_incident_[static_cast<size_t>(e.v - 1)].push_back(id);
    }
}

const DegreeList& Instance::list(Vertex x) const {
    const auto& lists = x.side == Side::U ? u_lists_ : v_lists_;
    if (x.index < 1 || x.index > static_cast<int>(lists.size()))
        throw std::out_of_range("vertex index out of range: " + to_string(x));
    return lists[static_cast<size_t>(x.index - 1)];
}

std::span<const int> Instance::incident_edges(Vertex x) const {
    const auto& inc = x.side == Side::U ? u_incident_ : v_incident_;
    if (x.index < 1 || x.index > static_cast<int>(inc.size()))
        throw std::out_of_range("vertex index out of range: " + to_string(x));
    return inc[static_cast<size_t>(x.index - 1)];
}

int Instance::degree(Vertex x) const { return static_cast<int>(incident_edges(x).size()); }

Weight Instance::capacity_degree(Vertex x) const {
    Weight total = 0;
    for (int id : incident_edges(x)) total += edge(id).capacity;
    return total;
}

std::optional<int> Instance::find_edge(int u, int v) const {
    for (int id : incident_edges(u_vertex(u)))
        if (edge(id).v == v) return id;
    return std::nullopt;
}

Vertex Instance::endpoint(int edge_id, Side side) const {
    const Edge& e = edge(edge_id);
    return side == Side::U ? u_vertex(e.u) : v_vertex(e.v);
}

Instance lift_unweighted(int num_u, int num_v, std::span<const std::pair<int, int>> edges,
                         std::vector<DegreeList> u_lists, std::vector<DegreeList> v_lists) {
    std::vector<Edge> weighted;
    weighted.reserve(edges.size());
    for (auto [u, v] : edges) weighted.push_back({u, v, 1});
    return Instance(num_u, num_v, std::move(weighted), std::move(u_lists), std::move(v_lists));
}

Weight weighted_degree(const Instance& inst, std::span<const Weight> phi, Vertex x) {
    Weight total = 0;
    for (int id : inst.incident_edges(x)) total += phi[static_cast<size_t>(id)];
    return total;
}

bool is_full_edge(const Instance& inst, std::span<const Weight> phi, int edge_id) {
    const Weight w = phi[static_cast<size_t>(edge_id)];
    return w > 0 && w == inst.edge(edge_id).capacity;
}

std::vector<int> skeleton_edges(const Instance& inst, std::span<const Weight> phi) {
    std::vector<int> out;
    for (int id = 0; id < inst.num_edges(); ++id) {
        const Weight w = phi[static_cast<size_t>(id)];
        if (w > 0 && w < inst.edge(id).capacity) out.push_back(id);
    }
    return out;
}

std::vector<int> full_skeleton_edges(const Instance& inst, std::span<const Weight> phi) {
    std::vector<int> out;
    for (int id = 0; id < inst.num_edges(); ++id)
        if (phi[static_cast<size_t>(id)] > 0) out.push_back(id);
    return out;
}

bool edges_form_forest(const Instance& inst, std::span<const int> edge_ids) {
    RollbackDsu dsu(inst.num_vertices());
    for (int id : edge_ids) {
        const Edge& e = inst.edge(id);
        if (!dsu.unite(e.u - 1, inst.num_u() + e.v - 1)) return false;
    }
    return true;
}

VerifyResult verify_factor(const Instance& inst, std::span<const Weight> phi) {
    if (phi.size() != static_cast<size_t>(inst.num_edges()))
        throw std::invalid_argument("weighting size does not match edge count");
    for (int id = 0; id < inst.num_edges(); ++id) {
        const Weight w = phi[static_cast<size_t>(id)];
        if (w < 0 || w > inst.edge(id).capacity)
            return {false, Violation{Violation::Kind::edge_capacity, id, {}, w}};
    }
    for (int i = 1; i <= inst.num_u(); ++i) {
        const Vertex x = u_vertex(i);
        const Weight d = weighted_degree(inst, phi, x);
        if (!list_contains(inst.list(x), d))
            return {false, Violation{Violation::Kind::vertex_degree, -1, x, d}};
    }
    for (int j = 1; j <= inst.num_v(); ++j) {
        const Vertex x = v_vertex(j);
        const Weight d = weighted_degree(inst, phi, x);
        if (!list_contains(inst.list(x), d))
            return {false, Violation{Violation::Kind::vertex_degree, -1, x, d}};
    }
    return {true, std::nullopt};
}

std::string describe(const Instance& inst, const Violation& violation) {
    if (violation.kind == Violation::Kind::edge_capacity) {
        const Edge& e = inst.edge(violation.edge_id);
        return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): weight " +
               std::to_string(violation.value) + " outside [0," + std::to_string(e.capacity) + "]";
    }
    return "vertex " + to_string(violation.vertex) + ": weighted degree " +
           std::to_string(violation.value) + " not admissible";
}

std::optional<Normalization> normalize(const Instance& original) {
    const int nu = original.num_u();
    const int nv = original.num_v();
    std::vector<char> u_alive(static_cast<size_t>(nu), 1), v_alive(static_cast<size_t>(nv), 1);
    std::vector<DegreeList> u_lists(original.u_lists().begin(), original.u_lists().end());
    std::vector<DegreeList> v_lists(original.v_lists().begin(), original.v_lists().end());

    auto edge_alive = [&](const Edge& e) {
        return u_alive[static_cast<size_t>(e.u - 1)] && v_alive[static_cast<size_t>(e.v - 1)];
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int side = 0; side < 2; ++side) {
            const int n = side == 0 ? nu : nv;
            auto& alive = side == 0 ? u_alive : v_alive;
            auto& lists = side == 0 ? u_lists : v_lists;
            for (int i = 1; i <= n; ++i) {
                if (!alive[static_cast<size_t>(i - 1)]) continue;
                const Vertex x = side == 0 ? u_vertex(i) : v_vertex(i);
                Weight cap = 0;
                for (int id : original.incident_edges(x))
                    if (edge_alive(original.edge(id))) cap += original.edge(id).capacity;
                DegreeList& l = lists[static_cast<size_t>(i - 1)];
                const size_t before = l.size();
                l.erase(std::remove_if(l.begin(), l.end(), [&](int c) { return c > cap; }), l.end());
                if (l.size() != before) changed = true;
                if (l.empty()) return std::nullopt;
                if (l.size() == 1 && l[0] == 0) {
                    alive[static_cast<size_t>(i - 1)] = 0;
                    changed = true;
                }
            }
        }
    }

    Normalization nm;
    std::vector<int> u_new(static_cast<size_t>(nu), 0), v_new(static_cast<size_t>(nv), 0);
    std::vector<DegreeList> kept_u_lists, kept_v_lists;
    for (int i = 1; i <= nu; ++i)
        if (u_alive[static_cast<size_t>(i - 1)]) {
            nm.u_kept.push_back(i);
            u_new[static_cast<size_t>(i - 1)] = static_cast<int>(nm.u_kept.size());
            kept_u_lists.push_back(u_lists[static_cast<size_t>(i - 1)]);
        }
    for (int j = 1; j <= nv; ++j)
        if (v_alive[static_cast<size_t>(j - 1)]) {
            nm.v_kept.push_back(j);
            v_new[static_cast<size_t>(j - 1)] = static_cast<int>(nm.v_kept.size());
            kept_v_lists.push_back(v_lists[static_cast<size_t>(j - 1)]);
        }
    std::vector<Edge> kept_edges;
    for (int id = 0; id < original.num_edges(); ++id) {
        const Edge& e = original.edge(id);
        if (!edge_alive(e)) continue;
        nm.edge_kept.push_back(id);
        kept_edges.push_back({u_new[static_cast<size_t>(e.u - 1)],
                              v_new[static_cast<size_t>(e.v - 1)], e.capacity});
    }
    nm.normalized = Instance(static_cast<int>(nm.u_kept.size()), static_cast<int>(nm.v_kept.size()),
                             std::move(kept_edges), std::move(kept_u_lists), std::move(kept_v_lists));
    return nm;
}

EdgeWeighting inflate_factor(const Instance& original, const Normalization& nm,
                             std::span<const Weight> phi) {
    if (phi.size() != static_cast<size_t>(nm.normalized.num_edges()))
        throw std::invalid_argument("weighting size does not match normalized edge count");
    EdgeWeighting full(static_cast<size_t>(original.num_edges()), 0);
    for (size_t id = 0; id < phi.size(); ++id)
        full[static_cast<size_t>(nm.edge_kept[id])] = phi[id];
    return full;
}

}  // namespace genfactor
