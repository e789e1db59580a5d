#ifndef GENFACTOR_GADGETS_HPP
#define GENFACTOR_GADGETS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "genfactor/instance.hpp"

namespace genfactor {

// Complete bipartite gadget whose factors select one value out of A and
// broadcast it to every output: U' = {u_1..u_M} with M = max(A),
// V' = {v_0, v_1..v_r}, all capacities 1, K(u_i) = {0, r+1}, K(v_0) = A,
// K(v_j) = {0..M} on the outputs. In every factor all outputs have the same
// degree alpha, alpha is in A, and every alpha in A is attainable.
struct SelectionGadget {
    Instance instance;
    std::vector<int> amounts;  // A, ascending
    int r = 0;
    int hub = 1;                // V index of v_0
    std::vector<int> outputs;   // V indices of v_1..v_r
};

// A must be nonempty (throws std::invalid_argument); r >= 0
// (r = 0 yields no outputs and only makes sense as a building block).
SelectionGadget selection_gadget(const std::vector<int>& amounts, int r);

// Two selection gadgets glued at one output each (the highest-indexed output
// of both): a lower gadget over A and an upper gadget over
// A' = {N*alpha : alpha in A}, N = max(A)+1, with the glued vertex q given
// K(q) = {a + N*a : a in A}. Factors select alpha in A; lower outputs all get
// degree alpha and upper outputs degree N*alpha.
struct DoubleSelectionGadget {
    Instance instance;
    std::vector<int> amounts;       // A, ascending
    int scale = 0;                  // N = max(A)+1
    int q = 0;                      // V index of the glued vertex
    int lower_hub = 0;              // V index of the lower gadget's v_0
    int upper_hub = 0;              // V index of the upper gadget's v_0
    std::vector<int> lower_outputs; // V indices, size r
    std::vector<int> upper_outputs; // V indices, size r'
};

// A nonempty with max(A) >= 1 (throws otherwise); r, r' >= 0.
DoubleSelectionGadget double_selection_gadget(const std::vector<int>& amounts, int r, int rprime);

// k-partite graph with equal part sizes; vertices are addressed as
// (part i in 1..k, index a in 1..n). No intra-part edges.
struct PartitionedGraph {
    int parts = 0;      // k
    int part_size = 0;  // n
    // adjacency[pair_index(i,j)] is an n*n bit matrix: entry (a-1)*n + (b-1)
    // is true iff v_a^i v_b^j is an edge (i < j).
    std::vector<std::vector<char>> adjacency;

    int pair_index(int i, int j) const;  // i < j, 0-based position among C(k,2) pairs
    bool has_edge(int i, int a, int j, int b) const;
    void add_edge(int i, int a, int j, int b);
};

PartitionedGraph make_partitioned_graph(int parts, int part_size);

// Reduction to a factor instance H: one double selection gadget H_i per part
// (A = {1..n}, r = i-1, r' = k-i), the upper output of H_i facing part j
// identified with the lower output of H_j facing part i (i < j); the glued
// vertex h_{i,j} gets the list {N*alpha + beta : v_alpha^i v_beta^j edge}.
// H has a factor iff G has a clique with one vertex per part.
struct CliqueReduction {
    Instance instance;
    // h_vertex[pair_index(i,j)] = V index of h_{i,j}
    std::vector<int> h_vertices;
    // V indices of the three per-part non-shared V vertices (hubs and glue),
    // recorded for inspection/tests: for part i, {lower hub, upper hub, q_i}.
    std::vector<std::array<int, 3>> part_cores;
    int scale = 0;  // N = n+1
};

// Requires parts >= 2 and part_size >= 1 (throws std::invalid_argument).
CliqueReduction reduce_clique(const PartitionedGraph& g);

// Exhaustive search over the n^k transversals; returns the canonically first
// clique (one vertex index per part, 1-based) or nullopt.
std::optional<std::vector<int>> find_clique_bruteforce(const PartitionedGraph& g);

// Text format:
//   p pclique <k> <n> <m>
//   e <i> <a> <j> <b>     edge v_a^i v_b^j, requires i < j
// '#' comments and blank lines ignored. Throws ParseError (see instance_io).
PartitionedGraph parse_pclique(std::string_view text);
std::string serialize_pclique(const PartitionedGraph& g);

}  // namespace genfactor

#endif
