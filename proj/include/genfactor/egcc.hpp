#ifndef GENFACTOR_EGCC_HPP
#define GENFACTOR_EGCC_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genfactor/instance.hpp"

namespace genfactor {

// Extended global cardinality model: every variable takes one value from its
// domain; for every value d, the number of variables assigned d must lie in
// cards[d]. Variable and value names are kept sorted (std::map) so that the
// derived graph is deterministic.
struct EgccModel {
    std::map<std::string, std::vector<std::string>> variables;  // name -> domain
    std::map<std::string, DegreeList> cards;                    // value -> admissible counts
};

// Parses the JSON model file: an object with exactly the keys "variables"
// and "cards". Duplicate keys anywhere are an error; so is a name used both
// as a variable and as a value. Domains must be non-empty lists of distinct
// strings. Values without a cards entry default to the unconstrained list
// {0..|variables|}. Throws std::runtime_error on any violation.
EgccModel parse_egcc(std::string_view text);

// The bipartite value graph of the model: one U vertex per variable (sorted
// by name), one V vertex per value (sorted by name), a capacity-1 edge for
// every (variable, value-in-domain) pair, K(variable) = {1},
// K(value) = cards[value]. The model is consistent iff this instance has a
// factor.
struct ValueGraph {
    Instance instance;
    std::vector<std::string> variable_names;  // U index - 1 -> name
    std::vector<std::string> value_names;     // V index - 1 -> name
};

ValueGraph build_value_graph(const EgccModel& model);

using Assignment = std::map<std::string, std::string>;

// Reads the chosen value of every variable off a factor of the value graph.
// Throws std::invalid_argument if phi is not a valid factor of it.
Assignment factor_to_assignment(const ValueGraph& graph, std::span<const Weight> phi);

// Checks an assignment directly against the model (domains + counts).
bool assignment_satisfies(const EgccModel& model, const Assignment& assignment);

// End-to-end consistency check; engaged result is a satisfying assignment.
std::optional<Assignment> check_consistency(const EgccModel& model, int threads = 1);

}  // namespace genfactor

#endif
