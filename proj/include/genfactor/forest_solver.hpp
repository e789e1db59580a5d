#ifndef GENFACTOR_FOREST_SOLVER_HPP
#define GENFACTOR_FOREST_SOLVER_HPP

#include <span>

#include "genfactor/instance.hpp"

namespace genfactor {

// Instance whose underlying graph is a forest (checked on construction,
// throws std::invalid_argument otherwise).
class ForestInstance {
public:
    explicit ForestInstance(Instance inst);
    const Instance& instance() const { return inst_; }

private:
    Instance inst_;
};

struct ForestSolveResult {
    Decision decision;
    int rule_applications = 0;  // vertex eliminations performed
};

// Exact solver by leaf elimination: repeatedly removes the lowest-canonical
// degree<=1 vertex (on an isolated edge the V endpoint goes first), merging
// degree lists over the disappearing edge, then reconstructs a witness by
// replaying the eliminations backwards. Runs in polynomial time.
ForestSolveResult solve_forest(const ForestInstance& forest);

// Convenience for search loops: solves the sub-instance formed by
// `forest_edges` (which must be acyclic) on the full vertex set of `base`,
// returning weights indexed by base edge ids (zero off the forest).
ForestSolveResult solve_forest_subset(const Instance& base, std::span<const int> forest_edges);

}  // namespace genfactor

#endif
