#ifndef GENFACTOR_INSTANCE_HPP
#define GENFACTOR_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace genfactor {

using Weight = int;

// Set of admissible degrees for one vertex, kept ascending and duplicate-free.
using DegreeList = std::vector<int>;

bool list_contains(const DegreeList& list, int value);

// Sorts, deduplicates and validates (rejects negatives with std::invalid_argument).
DegreeList canonical_list(DegreeList values);

enum class Side : std::uint8_t { U = 0, V = 1 };

// Vertex identity: side tag plus 1-based index within that side.
// Canonical order is (side, index), the U side first.
struct Vertex {
    Side side = Side::U;
    int index = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend bool operator<(const Vertex& a, const Vertex& b) {
        if (a.side != b.side) return a.side < b.side;
        return a.index < b.index;
    }
};

inline Vertex u_vertex(int index) { return {Side::U, index}; }
inline Vertex v_vertex(int index) { return {Side::V, index}; }

std::string to_string(Vertex x);

struct Edge {
    int u = 0;  // 1-based index on the U side
    int v = 0;  // 1-based index on the V side
    Weight capacity = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighting of the edges of an instance, indexed by edge id.
using EdgeWeighting = std::vector<Weight>;

// Bipartite edge-weighted instance with per-vertex degree lists.
// Edges are stored sorted by (u, v); edge ids refer to that order.
class Instance {
public:
    Instance() = default;
    // Validates everything (index ranges, duplicate edges, negative
    // capacities/degrees) and throws std::invalid_argument on bad input.
    Instance(int num_u, int num_v, std::vector<Edge> edges,
             std::vector<DegreeList> u_lists, std::vector<DegreeList> v_lists);

    int num_u() const { return num_u_; }
    int num_v() const { return num_v_; }
    int num_vertices() const { return num_u_ + num_v_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    const DegreeList& list(Vertex x) const;
    std::span<const DegreeList> u_lists() const { return u_lists_; }
    std::span<const DegreeList> v_lists() const { return v_lists_; }

    // Ids of incident edges, ascending.
    std::span<const int> incident_edges(Vertex x) const;
    // Number of incident edges.
    int degree(Vertex x) const;
    // Sum of capacities of incident edges.
    Weight capacity_degree(Vertex x) const;

    std::optional<int> find_edge(int u, int v) const;
    Vertex endpoint(int edge_id, Side side) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.num_u_ == b.num_u_ && a.num_v_ == b.num_v_ && a.edges_ == b.edges_ &&
               a.u_lists_ == b.u_lists_ && a.v_lists_ == b.v_lists_;
    }

private:
    int num_u_ = 0;
    int num_v_ = 0;
    std::vector<Edge> edges_;
    std::vector<DegreeList> u_lists_;
    std::vector<DegreeList> v_lists_;
    std::vector<std::vector<int>> u_incident_;
    std::vector<std::vector<int>> v_incident_;
};

// Builds a capacity-1 instance from plain (u, v) pairs.
// Throws std::invalid_argument on duplicates or out-of-range endpoints.
Instance lift_unweighted(int num_u, int num_v, std::span<const std::pair<int, int>> edges,
                         std::vector<DegreeList> u_lists, std::vector<DegreeList> v_lists);

// Degree of x under the weighting phi: sum of phi over incident edges.
Weight weighted_degree(const Instance& inst, std::span<const Weight> phi, Vertex x);

// Edge classification under a weighting.
bool is_full_edge(const Instance& inst, std::span<const Weight> phi, int edge_id);  // phi == rho > 0
std::vector<int> skeleton_edges(const Instance& inst, std::span<const Weight> phi);       // 0 < phi < rho
std::vector<int> full_skeleton_edges(const Instance& inst, std::span<const Weight> phi);  // phi > 0

// True if the given edge subset is acyclic (as a subgraph of inst).
bool edges_form_forest(const Instance& inst, std::span<const int> edge_ids);

struct Violation {
    enum class Kind { edge_capacity, vertex_degree };
    Kind kind = Kind::edge_capacity;
    int edge_id = -1;   // set for edge_capacity
    Vertex vertex{};    // set for vertex_degree
    Weight value = 0;   // the offending phi(e) or weighted degree
};

struct VerifyResult {
    bool ok = true;
    std::optional<Violation> violation;
};

// Checks 0 <= phi(e) <= rho(e) for every edge (in edge-id order), then the
// degree constraint for every vertex (canonical order); reports the first
// violation found. phi.size() must equal num_edges (throws otherwise).
VerifyResult verify_factor(const Instance& inst, std::span<const Weight> phi);

std::string describe(const Instance& inst, const Violation& violation);

struct Decision {
    std::optional<EdgeWeighting> witness;  // engaged iff the answer is YES

    bool yes() const { return witness.has_value(); }
    static Decision no() { return {}; }
    static Decision found(EdgeWeighting w) { return {std::move(w)}; }
};

// Result of pruning an instance down to the vertices that can still matter:
// entries of a degree list above the capacity degree can never be met and are
// dropped; a vertex whose list becomes {0} is deleted with its edges; a list
// that empties out makes the whole instance infeasible. Iterated to fixpoint.
struct Normalization {
    Instance normalized;
    std::vector<int> u_kept;     // normalized u index (1-based offset) -> original u index
    std::vector<int> v_kept;     // likewise for the V side
    std::vector<int> edge_kept;  // normalized edge id -> original edge id
};

// nullopt means no factor can exist.
std::optional<Normalization> normalize(const Instance& original);

// Extends a factor of the normalized instance to the original one
// (deleted edges get weight 0).
EdgeWeighting inflate_factor(const Instance& original, const Normalization& nm,
                             std::span<const Weight> phi);

}  // namespace genfactor

#endif
