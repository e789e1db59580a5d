#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genfactor/brute_oracle.hpp"
#include "genfactor/random_gen.hpp"
#include "test_util.hpp"

using namespace genfactor;

TEST_CASE("oracle matches plain odometer enumeration") {
    Rng rng(1001);
    int yes = 0;
    for (int t = 0; t < 500; ++t) {
        const Instance inst =
            random_weighted_instance(rng, rng.range(1, 4), rng.range(1, 3), 65, 3);
        const auto expected = testutil::all_factors_odometer(inst);

        const EnumerationResult all = enumerate_all_factors(inst);
        REQUIRE(all.complete);
        REQUIRE(all.factors == expected);  // same factors, same order

        const OracleResult one = solve_bruteforce(inst);
        REQUIRE(one.yes() == !expected.empty());
        if (one.yes()) {
            REQUIRE(*one.witness == expected.front());  // canonically first
            ++yes;
        }
    }
    CHECK(yes > 50);
}

TEST_CASE("edgeless instances are decided by the lists alone") {
    Instance ok(1, 1, {}, {{0}}, {{0, 2}});
    CHECK(solve_bruteforce(ok).yes());
    CHECK(enumerate_all_factors(ok).factors == std::vector<EdgeWeighting>{{}});
    Instance bad(1, 1, {}, {{1}}, {{0}});
    CHECK(solve_bruteforce(bad).status == OracleStatus::no);
    CHECK(enumerate_all_factors(bad).factors.empty());
}

TEST_CASE("a tiny node budget reports exhaustion") {
    Instance inst(3, 2, {{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}},
                  {{1}, {1}, {1}}, {{1}, {2}});
    OracleOptions tight;
    tight.node_budget = 1;
    const OracleResult r = solve_bruteforce(inst, tight);
    CHECK(r.status == OracleStatus::budget_exceeded);
    CHECK_FALSE(r.yes());
    const EnumerationResult e = enumerate_all_factors(inst, tight);
    CHECK_FALSE(e.complete);

    // The same search finishes comfortably with the default budget.
    CHECK(solve_bruteforce(inst).status != OracleStatus::budget_exceeded);
}

TEST_CASE("budget exhaustion is not reported when a witness was already found") {
    // The first weighting tried (all zeros) is already valid.
    Instance inst(1, 1, {{1, 1, 1}}, {{0, 1}}, {{0, 1}});
    OracleOptions tight;
    tight.node_budget = 2;
    const OracleResult r = solve_bruteforce(inst, tight);
    CHECK(r.yes());
}

TEST_CASE("node counts are reported and grow with the search space") {
    Instance small(1, 1, {{1, 1, 1}}, {{1}}, {{1}});
    Instance large(2, 2, {{1, 1, 3}, {1, 2, 3}, {2, 1, 3}, {2, 2, 3}}, {{2}, {2}}, {{3}, {3}});
    const auto rs = enumerate_all_factors(small);
    const auto rl = enumerate_all_factors(large);
    CHECK(rs.nodes > 0);
    CHECK(rl.nodes > rs.nodes);
}
