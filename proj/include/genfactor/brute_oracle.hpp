#ifndef GENFACTOR_BRUTE_ORACLE_HPP
#define GENFACTOR_BRUTE_ORACLE_HPP

#include <optional>
#include <vector>

#include "genfactor/instance.hpp"

namespace genfactor {

enum class OracleStatus { yes, no, budget_exceeded };

struct OracleOptions {
    long long node_budget = 100'000'000;  // search-tree nodes before giving up
};

struct OracleResult {
    OracleStatus status = OracleStatus::no;
    std::optional<EdgeWeighting> witness;  // engaged iff status == yes
    long long nodes = 0;

    bool yes() const { return status == OracleStatus::yes; }
};

// Reference solver, independent of the main pipeline: assigns edge weights in
// edge-id order, trying values 0..rho(e) ascending, so a YES answer carries
// the lexicographically first valid factor in that order. Prunes a branch as
// soon as some vertex can no longer reach any admissible degree
// (K(x) disjoint from [committed, committed + remaining capacity]).
OracleResult solve_bruteforce(const Instance& inst, const OracleOptions& options = {});

struct EnumerationResult {
    bool complete = false;  // false when the node budget ran out
    std::vector<EdgeWeighting> factors;
    long long nodes = 0;
};

// All valid factors, in the same lexicographic order.
EnumerationResult enumerate_all_factors(const Instance& inst, const OracleOptions& options = {});

}  // namespace genfactor

#endif
