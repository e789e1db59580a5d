#pragma once

// Deterministic random generators for tests and benchmarks. All generators
// are pure functions of the seed, so stored expectations stay valid.

#include <cstdint>
#include <random>
#include <string>

#include "genfactor/gadgets.hpp"
#include "genfactor/instance.hpp"

namespace genfactor {

/// Thin deterministic RNG wrapper. Same seed, same sequence, any platform
/// (std::mt19937 output is specified exactly; we avoid distribution objects,
/// whose mapping is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi] (inclusive). Requires lo <= hi.
    int range(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint32_t>(hi - lo + 1));
    }

    /// True with probability percent/100.
    bool chance(int percent) { return range(0, 99) < percent; }

private:
    std::mt19937 engine_;
};

/// Random instance with capacities in [1, max_capacity], singleton left-side
/// lists (entries in [0, 2]) and right-side lists of up to three entries.
/// Edge set is a random subset of the complete bipartite graph with the
/// given edge probability (percent).
Instance random_weighted_instance(Rng& rng, int num_u, int num_v, int edge_percent,
                                  int max_capacity);

/// Random unit-capacity instance whose left-side lists are all {1}.
Instance random_all_ones_instance(Rng& rng, int num_u, int num_v, int edge_percent);

/// Random instance whose edges form a forest (capacities up to 3, lists of
/// up to 3 entries drawn from [0, 6]).
Instance random_forest_instance(Rng& rng, int num_u, int num_v, int extra_edge_percent);

/// Random constraint model in the text format accepted by parse_egcc. Some
/// values get explicit cardinality lists, others rely on the default.
std::string random_egcc_model(Rng& rng, int num_vars, int num_vals);

/// Random multipartite graph with the given edge probability (percent).
PartitionedGraph random_partitioned_graph(Rng& rng, int parts, int part_size, int edge_percent);

}  // namespace genfactor
