#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "genfactor/brute_oracle.hpp"
#include "genfactor/gadgets.hpp"
#include "genfactor/instance_io.hpp"
#include "genfactor/random_gen.hpp"
#include "test_util.hpp"

using namespace genfactor;

TEST_CASE("selection gadget layout") {
    const SelectionGadget g = selection_gadget({3, 1}, 2);
    CHECK(g.amounts == std::vector<int>{1, 3});
    CHECK(g.hub == 1);
    CHECK(g.outputs == std::vector<int>{2, 3});
    CHECK(g.instance.num_u() == 3);  // max(A)
    CHECK(g.instance.num_v() == 3);  // hub + r outputs
    CHECK(g.instance.num_edges() == 9);
    for (int i = 1; i <= 3; ++i) CHECK(g.instance.list(u_vertex(i)) == DegreeList{0, 3});
    CHECK(g.instance.list(v_vertex(1)) == DegreeList{1, 3});
    CHECK(g.instance.list(v_vertex(2)) == DegreeList{0, 1, 2, 3});
    for (const Edge& e : g.instance.edges()) CHECK(e.capacity == 1);

    CHECK_THROWS_AS(selection_gadget({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(selection_gadget({1}, -1), std::invalid_argument);
}

TEST_CASE("selection gadget broadcasts one admissible amount to every output") {
    for (std::uint32_t amask = 1; amask < 8; ++amask) {
        std::vector<int> amounts;
        for (int a = 1; a <= 3; ++a)
            if (amask & (1u << (a - 1))) amounts.push_back(a);
        for (int r = 1; r <= 2; ++r) {
            const SelectionGadget g = selection_gadget(amounts, r);
            std::set<int> attained;
            for (const auto& phi : testutil::all_factors_odometer(g.instance)) {
                const int alpha = weighted_degree(g.instance, phi, v_vertex(g.hub));
                CHECK(list_contains(g.amounts, alpha));
                for (int out : g.outputs)
                    REQUIRE(weighted_degree(g.instance, phi, v_vertex(out)) == alpha);
                attained.insert(alpha);
            }
            CHECK(attained == std::set<int>(amounts.begin(), amounts.end()));
        }
    }
}

TEST_CASE("double selection gadget layout") {
    const DoubleSelectionGadget g = double_selection_gadget({1, 2}, 0, 1);
    CHECK(g.scale == 3);
    CHECK(g.lower_hub == 1);
    CHECK(g.q == 2);
    CHECK(g.upper_hub == 3);
    CHECK(g.lower_outputs.empty());
    CHECK(g.upper_outputs == std::vector<int>{4});
    CHECK(g.instance.num_u() == 8);   // 2 lower + 6 upper
    CHECK(g.instance.num_v() == 4);
    CHECK(g.instance.num_edges() == 2 * 2 + 6 * 3);
    CHECK(g.instance.list(v_vertex(1)) == DegreeList{1, 2});
    CHECK(g.instance.list(v_vertex(2)) == DegreeList{4, 8});  // alpha + N*alpha
    CHECK(g.instance.list(v_vertex(3)) == DegreeList{3, 6});
    CHECK(g.instance.list(v_vertex(4)) == DegreeList{0, 1, 2, 3, 4, 5, 6});
    for (int i = 1; i <= 2; ++i) CHECK(g.instance.list(u_vertex(i)) == DegreeList{0, 2});
    for (int i = 3; i <= 8; ++i) CHECK(g.instance.list(u_vertex(i)) == DegreeList{0, 3});

    CHECK_THROWS_AS(double_selection_gadget({0}, 1, 1), std::invalid_argument);
}

TEST_CASE("double selection gadget scales the broadcast on the upper outputs") {
    for (std::uint32_t amask = 1; amask < 4; ++amask) {
        std::vector<int> amounts;
        for (int a = 1; a <= 2; ++a)
            if (amask & (1u << (a - 1))) amounts.push_back(a);
        for (int r = 0; r <= 1; ++r) {
            for (int rprime = 0; rprime <= 1; ++rprime) {
                const DoubleSelectionGadget g = double_selection_gadget(amounts, r, rprime);
                std::set<int> attained;
                // Pruned exhaustive enumeration; the raw odometer would need
                // 2^24 weightings here. Equivalence of the two enumerations
                // is covered by the oracle tests.
                const EnumerationResult all = enumerate_all_factors(g.instance);
                REQUIRE(all.complete);
                for (const auto& phi : all.factors) {
                    const int alpha = weighted_degree(g.instance, phi, v_vertex(g.lower_hub));
                    CHECK(list_contains(g.amounts, alpha));
                    REQUIRE(weighted_degree(g.instance, phi, v_vertex(g.q)) ==
                            alpha + g.scale * alpha);
                    for (int out : g.lower_outputs)
                        REQUIRE(weighted_degree(g.instance, phi, v_vertex(out)) == alpha);
                    for (int out : g.upper_outputs)
                        REQUIRE(weighted_degree(g.instance, phi, v_vertex(out)) ==
                                g.scale * alpha);
                    attained.insert(alpha);
                }
                REQUIRE(attained == std::set<int>(amounts.begin(), amounts.end()));
            }
        }
    }
}

TEST_CASE("partitioned graphs index pairs lexicographically") {
    PartitionedGraph g = make_partitioned_graph(3, 2);
    CHECK(g.pair_index(1, 2) == 0);
    CHECK(g.pair_index(1, 3) == 1);
    CHECK(g.pair_index(2, 3) == 2);
    CHECK_THROWS_AS(g.pair_index(2, 2), std::invalid_argument);
    CHECK_FALSE(g.has_edge(1, 1, 2, 1));
    g.add_edge(1, 1, 2, 1);
    CHECK(g.has_edge(1, 1, 2, 1));
    CHECK_FALSE(g.has_edge(1, 1, 2, 2));
    CHECK_THROWS_AS(g.add_edge(1, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("partitioned-graph files round-trip") {
    const std::string text =
        "# tiny partitioned graph\n"
        "p pclique 2 2 2\n"
        "e 1 1 2 1\n"
        "e 1 2 2 2\n";
    const PartitionedGraph g = parse_pclique(text);
    CHECK(g.parts == 2);
    CHECK(g.part_size == 2);
    CHECK(g.has_edge(1, 1, 2, 1));
    CHECK(g.has_edge(1, 2, 2, 2));
    CHECK_FALSE(g.has_edge(1, 1, 2, 2));
    const std::string canon = serialize_pclique(g);
    const PartitionedGraph again = parse_pclique(canon);
    CHECK(serialize_pclique(again) == canon);

    CHECK_THROWS_AS(parse_pclique(""), ParseError);
    CHECK_THROWS_AS(parse_pclique("p pclique 2 2 0\ne 2 1 1 1\n"), ParseError);  // i >= j
    CHECK_THROWS_AS(parse_pclique("p pclique 2 2 1\n"), ParseError);  // count mismatch
    CHECK_THROWS_AS(parse_pclique("p pclique 2 2 2\ne 1 1 2 1\ne 1 1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_pclique("p pclique 2 2 1\ne 1 1 2 9\n"), ParseError);
}

TEST_CASE("clique reduction structure for two parts of size two") {
    PartitionedGraph g = make_partitioned_graph(2, 2);
    g.add_edge(1, 1, 2, 2);
    g.add_edge(1, 2, 2, 1);
    const CliqueReduction red = reduce_clique(g);
    CHECK(red.scale == 3);
    CHECK(red.instance.num_v() == 1 + 3 * 2);  // C(2,2 choose)=1 shared + 3 per part
    CHECK(red.h_vertices == std::vector<int>{1});
    REQUIRE(red.part_cores.size() == 2);
    CHECK(red.part_cores[0] == std::array<int, 3>{2, 3, 4});
    CHECK(red.part_cores[1] == std::array<int, 3>{5, 6, 7});
    CHECK(red.instance.num_u() == 2 * (2 + 6));

    // Shared vertex list encodes the cross edges as N*a + b.
    CHECK(red.instance.list(v_vertex(1)) == DegreeList{3 * 1 + 2, 3 * 2 + 1});
    // Hubs and glue vertices per part.
    CHECK(red.instance.list(v_vertex(2)) == DegreeList{1, 2});
    CHECK(red.instance.list(v_vertex(3)) == DegreeList{3, 6});
    CHECK(red.instance.list(v_vertex(4)) == DegreeList{4, 8});

    // Every U list is {0, s} with 2 <= s <= k + 1.
    for (int i = 1; i <= red.instance.num_u(); ++i) {
        const DegreeList& l = red.instance.list(u_vertex(i));
        REQUIRE(l.size() == 2);
        REQUIRE(l[0] == 0);
        REQUIRE(l[1] >= 2);
        REQUIRE(l[1] <= 3);
    }

    CHECK_THROWS_AS(reduce_clique(make_partitioned_graph(1, 2)), std::invalid_argument);
}

TEST_CASE("clique brute-forcer returns the canonically first transversal") {
    PartitionedGraph g = make_partitioned_graph(2, 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) g.add_edge(1, a, 2, b);
    const auto clique = find_clique_bruteforce(g);
    REQUIRE(clique.has_value());
    CHECK(*clique == std::vector<int>{1, 1});

    PartitionedGraph empty = make_partitioned_graph(2, 2);
    CHECK_FALSE(find_clique_bruteforce(empty).has_value());
}

TEST_CASE("reduction instances are solvable exactly when a clique exists") {
    // All 16 two-part graphs with parts of size two.
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        PartitionedGraph g = make_partitioned_graph(2, 2);
        int bit = 0;
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b, ++bit)
                if (mask & (1u << bit)) g.add_edge(1, a, 2, b);
        const CliqueReduction red = reduce_clique(g);
        const OracleResult o = solve_bruteforce(red.instance);
        REQUIRE(o.status != OracleStatus::budget_exceeded);
        REQUIRE(o.yes() == find_clique_bruteforce(g).has_value());
        if (o.yes()) REQUIRE(verify_factor(red.instance, *o.witness).ok);
    }
}
