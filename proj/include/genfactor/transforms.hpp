#ifndef GENFACTOR_TRANSFORMS_HPP
#define GENFACTOR_TRANSFORMS_HPP

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "genfactor/instance.hpp"

namespace genfactor {

// A group of U vertices merged by the contraction step. A group is
// contractible when its members form a c-module: each member has the single
// degree list {c}, all incident capacities are 1, and all members share the
// same V neighborhood. Vertices that fail the capacity-1 requirement are kept
// as non-contractible singleton groups and copied through unchanged.
struct Module {
    std::vector<int> members;    // original U indices, ascending
    int constant = 0;            // the c in K(u) = {c}
    std::vector<int> neighbors;  // shared V neighborhood, ascending
    bool contractible = false;   // false only for capacity>1 singletons
};

// Partition of the U side into maximal groups, ordered by smallest member.
// module_of[u-1] gives the group index of original vertex u.
struct ModulePartition {
    std::vector<Module> modules;
    std::vector<int> module_of;
};

// Requires every U list to be a singleton (throws std::invalid_argument
// otherwise). Groups unit-capacity vertices by (constant, neighborhood).
ModulePartition find_module_partition(const Instance& inst);

// Replaces every group by one representative vertex u_M with degree list
// {c * |M|} and capacities |M| towards the shared neighborhood; singleton
// groups are copied through. The V side is unchanged. Group i becomes the
// new U vertex i+1.
Instance contract_modules(const Instance& original, const ModulePartition& mp);

// Expands a factor of the contracted instance back to the original one by
// distributing each merged weight round-robin over the group members:
// with members u_1 < ... < u_s, neighbors v_1 < ... < v_t and prefix sums
// S_i = phi'(u_M v_1) + ... + phi'(u_M v_i), member u_j receives the edge
// v_i u_j iff j = ((S_{i-1} + l - 1) mod s) + 1 for some 1 <= l <= phi'(u_M v_i).
// Verifies phi_contracted first and throws std::invalid_argument if invalid.
EdgeWeighting expand_factor(const Instance& original, const ModulePartition& mp,
                            const Instance& contracted, std::span<const Weight> phi_contracted);

// Edge subset intended to be exactly the full edges of some factor.
struct FullEdgeSelection {
    std::vector<int> edge_ids;  // ascending
};

// Removes the selected edges, lowers every remaining capacity by one (floor
// 0), and shifts each degree list by the removed incident capacity:
// K'(x) = { c - d_X(x) : c in K(x), c >= d_X(x) }.
// Selected edges must have capacity >= 1 (throws otherwise).
Instance subtract_full_edges(const Instance& original, const FullEdgeSelection& sel);

// Inverse direction: given a factor of subtract_full_edges(original, sel),
// returns the factor of `original` that is full exactly on `sel` on top of it.
// Verifies the input factor and throws std::invalid_argument if invalid.
EdgeWeighting lift_factor_over_X(const Instance& original, const FullEdgeSelection& sel,
                                 std::span<const Weight> phi_sub);

// Position of an edge in the v-major order used to compare weightings:
// all edges of v_1 first (by u), then v_2, ...
int v_major_position(const Instance& inst, int edge_id);

// Lexicographic comparison of two weightings in v-major edge order
// (<0, 0, >0 like strcmp).
int compare_weightings_v_major(const Instance& inst, std::span<const Weight> a,
                               std::span<const Weight> b);

// One cycle-elimination step, reported to observers: the skeleton cycle that
// was found and the amount shifted around it (alternating +delta / -delta
// starting with +delta on `cycle_edges[0]`).
struct AcyclifyStep {
    std::vector<int> cycle_edges;  // closed walk, consecutive edges share a vertex
    Weight delta = 0;
};

// Repeatedly removes skeleton cycles from a valid factor by shifting weight
// around the cycle, choosing the shift direction and amount that maximizes
// the weighting lexicographically (v-major order). Terminates in at most
// num_edges steps; degrees are preserved, so the result is a valid factor
// whose skeleton is a forest. Throws std::invalid_argument on an invalid phi.
EdgeWeighting acyclify(const Instance& inst, std::span<const Weight> phi,
                       const std::function<void(const AcyclifyStep&)>& observer = {});

// Deletes an isolated vertex, provided 0 is in its degree list (returns
// nullopt when it is not, i.e. the instance is infeasible).
// Throws std::invalid_argument if the vertex has positive degree.
std::optional<Instance> apply_degree0_rule(const Instance& inst, Vertex x);

// Merge table built when eliminating a degree-1 vertex x with neighbor y over
// the edge xy: for every achievable residual degree c' of y, the list of
// (c_x, c_y) pairs with c_x in K(x), c_y in K(y), c_x <= min(rho(xy), c_y)
// and c' = c_y - c_x, each list sorted ascending. c_x is the weight the edge
// xy takes when that pair is chosen.
using Degree1Witnesses = std::map<int, std::vector<std::pair<int, int>>>;

Degree1Witnesses combine_degree1_lists(const DegreeList& list_x, const DegreeList& list_y,
                                       Weight rho);

struct Degree1Result {
    Instance reduced;
    Degree1Witnesses witnesses;  // keyed by the replacement list entries
};

// Eliminates a degree-1 vertex x, replacing its neighbor's list with the
// achievable residual degrees. Throws std::invalid_argument unless
// degree(x) == 1.
Degree1Result apply_degree1_rule(const Instance& inst, Vertex x);

}  // namespace genfactor

#endif
