#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "genfactor/instance.hpp"
#include "genfactor/instance_io.hpp"
#include "genfactor/random_gen.hpp"
#include "test_util.hpp"

using namespace genfactor;

TEST_CASE("degree list helpers") {
    CHECK(canonical_list({3, 1, 1, 2}) == DegreeList{1, 2, 3});
    CHECK(canonical_list({}) == DegreeList{});
    CHECK_THROWS_AS(canonical_list({1, -2}), std::invalid_argument);
    CHECK(list_contains({0, 2, 5}, 2));
    CHECK_FALSE(list_contains({0, 2, 5}, 3));
}

TEST_CASE("vertex naming and ordering") {
    CHECK(to_string(u_vertex(3)) == "u 3");
    CHECK(to_string(v_vertex(1)) == "v 1");
    CHECK(u_vertex(5) < v_vertex(1));
    CHECK(u_vertex(1) < u_vertex(2));
    CHECK(u_vertex(2) == u_vertex(2));
}

TEST_CASE("instance construction validates and sorts") {
    // Edges arrive unsorted; ids follow (u, v) order afterwards.
    Instance inst(2, 2, {{2, 1, 3}, {1, 2, 1}, {1, 1, 2}}, {{1}, {2}}, {{0, 1}, {1}});
    REQUIRE(inst.num_edges() == 3);
    CHECK(inst.edge(0) == Edge{1, 1, 2});
    CHECK(inst.edge(1) == Edge{1, 2, 1});
    CHECK(inst.edge(2) == Edge{2, 1, 3});
    CHECK(inst.find_edge(2, 1) == 2);
    CHECK_FALSE(inst.find_edge(2, 2).has_value());
    CHECK(inst.degree(u_vertex(1)) == 2);
    CHECK(inst.degree(v_vertex(2)) == 1);
    CHECK(inst.capacity_degree(v_vertex(1)) == 5);
    CHECK(inst.endpoint(2, Side::U) == u_vertex(2));
    CHECK(inst.endpoint(2, Side::V) == v_vertex(1));
    const auto incident = inst.incident_edges(v_vertex(1));
    CHECK(std::vector<int>(incident.begin(), incident.end()) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(Instance(1, 1, {{1, 2, 1}}, {{1}}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 1, {{1, 1, -1}}, {{1}}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 1, {{1, 1, 1}, {1, 1, 2}}, {{1}}, {{1}}),
                    std::invalid_argument);  // duplicate edge
    CHECK_THROWS_AS(Instance(1, 1, {}, {{1}}, {{1}, {0}}), std::invalid_argument);  // list count
    CHECK_THROWS_AS(Instance(1, 1, {}, {{-1}}, {{0}}), std::invalid_argument);
}

TEST_CASE("lift_unweighted builds capacity-1 edges") {
    const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 1}};
    Instance inst = lift_unweighted(1, 2, pairs, {{2}}, {{1}, {1}});
    CHECK(inst.edge(0) == Edge{1, 1, 1});
    CHECK(inst.edge(1) == Edge{1, 2, 1});
}

TEST_CASE("factor verification reports the first violation") {
    Instance inst(2, 1, {{1, 1, 2}, {2, 1, 1}}, {{1}, {1}}, {{2}});
    CHECK(verify_factor(inst, EdgeWeighting{1, 1}).ok);

    const auto cap = verify_factor(inst, EdgeWeighting{3, 0});
    REQUIRE_FALSE(cap.ok);
    CHECK(cap.violation->kind == Violation::Kind::edge_capacity);
    CHECK(cap.violation->edge_id == 0);
    CHECK(cap.violation->value == 3);

    const auto deg = verify_factor(inst, EdgeWeighting{2, 1});
    REQUIRE_FALSE(deg.ok);
    CHECK(deg.violation->kind == Violation::Kind::vertex_degree);
    CHECK(deg.violation->vertex == u_vertex(1));
    CHECK(deg.violation->value == 2);
    CHECK(describe(inst, *deg.violation).find("u 1") != std::string::npos);

    // U violations are reported before V violations.
    const auto both = verify_factor(inst, EdgeWeighting{0, 0});
    REQUIRE_FALSE(both.ok);
    CHECK(both.violation->vertex == u_vertex(1));

    CHECK_THROWS_AS(verify_factor(inst, EdgeWeighting{1}), std::invalid_argument);
}

TEST_CASE("weighted degrees and edge classification") {
    Instance inst(2, 2, {{1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 2, 3}}, {{1}, {1}}, {{1}, {1}});
    const EdgeWeighting phi{2, 1, 0, 1};
    CHECK(weighted_degree(inst, phi, u_vertex(1)) == 3);
    CHECK(weighted_degree(inst, phi, v_vertex(2)) == 2);
    CHECK(is_full_edge(inst, phi, 0));
    CHECK_FALSE(is_full_edge(inst, phi, 1));
    CHECK_FALSE(is_full_edge(inst, phi, 2));
    CHECK(skeleton_edges(inst, phi) == std::vector<int>{1, 3});
    CHECK(full_skeleton_edges(inst, phi) == std::vector<int>{0, 1, 3});
}

TEST_CASE("forest detection on edge subsets") {
    // 4-cycle u1-v1-u2-v2-u1.
    Instance inst(2, 2, {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}}, {{1}, {1}}, {{1}, {1}});
    CHECK(edges_form_forest(inst, std::vector<int>{0, 1, 2}));
    CHECK_FALSE(edges_form_forest(inst, std::vector<int>{0, 1, 2, 3}));
    CHECK(edges_form_forest(inst, std::vector<int>{}));
}

TEST_CASE("normalization drops unreachable entries and dead vertices") {
    // v2 has list {0}: it is deleted together with its edge, which lowers
    // u1's capacity degree; u2's entry 4 exceeds its capacity degree of 2.
    Instance inst(2, 2, {{1, 1, 1}, {1, 2, 1}, {2, 1, 2}}, {{1}, {2, 4}}, {{0, 1, 2, 3}, {0}});
    const auto nm = normalize(inst);
    REQUIRE(nm.has_value());
    CHECK(nm->normalized.num_u() == 2);
    CHECK(nm->normalized.num_v() == 1);
    CHECK(nm->normalized.num_edges() == 2);
    CHECK(nm->normalized.list(u_vertex(1)) == DegreeList{1});
    CHECK(nm->normalized.list(u_vertex(2)) == DegreeList{2});
    CHECK(nm->normalized.list(v_vertex(1)) == DegreeList{0, 1, 2, 3});
    CHECK(nm->u_kept == std::vector<int>{1, 2});
    CHECK(nm->v_kept == std::vector<int>{1});
    CHECK(nm->edge_kept == std::vector<int>{0, 2});

    const EdgeWeighting inflated = inflate_factor(inst, *nm, EdgeWeighting{1, 2});
    CHECK(inflated == EdgeWeighting{1, 0, 2});
}

TEST_CASE("normalization detects infeasibility") {
    // u1 requires degree 2 but its only incident capacity is 1.
    Instance inst(1, 1, {{1, 1, 1}}, {{2}}, {{0, 1}});
    CHECK_FALSE(normalize(inst).has_value());
    // An empty list is infeasible outright.
    Instance empty_list(1, 0, {}, {DegreeList{}}, {});
    CHECK_FALSE(normalize(empty_list).has_value());
}

TEST_CASE("normalization cascades to a fixpoint") {
    // Deleting v1 (list {0}) isolates u1, whose list {1} then empties.
    Instance inst(1, 1, {{1, 1, 1}}, {{1}}, {{0}});
    CHECK_FALSE(normalize(inst).has_value());
}

TEST_CASE("normalized solutions agree with the original ones") {
    Rng rng(7101);
    for (int t = 0; t < 200; ++t) {
        const Instance inst =
            random_weighted_instance(rng, rng.range(1, 4), rng.range(1, 3), 70, 2);
        const auto nm = normalize(inst);
        const auto original_factors = testutil::all_factors_odometer(inst);
        if (!nm.has_value()) {
            CHECK(original_factors.empty());
            continue;
        }
        const auto reduced_factors = testutil::all_factors_odometer(nm->normalized);
        REQUIRE(original_factors.size() == reduced_factors.size());
        for (const auto& phi : reduced_factors) {
            const EdgeWeighting inflated = inflate_factor(inst, *nm, phi);
            CHECK(verify_factor(inst, inflated).ok);
        }
    }
}

TEST_CASE("instance parsing and serialization round-trip") {
    const std::string text =
        "# comment line\n"
        "p genfactor 2 2 3\n"
        "u 1 1\n"
        "u 2 2,3\n"
        "v 1 0,2\n"
        "v 2 -\n"
        "e 1 1 2\n"
        "e 1 2 1\n"
        "e 2 1 1\n";
    const Instance inst = parse_instance(text);
    CHECK(inst.num_u() == 2);
    CHECK(inst.num_v() == 2);
    CHECK(inst.num_edges() == 3);
    CHECK(inst.list(u_vertex(2)) == DegreeList{2, 3});
    CHECK(inst.list(v_vertex(2)) == DegreeList{});
    CHECK(inst.edge(0) == Edge{1, 1, 2});

    const std::string canon = serialize_instance(inst);
    CHECK(parse_instance(canon) == inst);

    // Unsorted list entries are canonicalized by the constructor.
    const Instance shuffled = parse_instance("p genfactor 1 1 1\nu 1 3,1\nv 1 0\ne 1 1 1\n");
    CHECK(shuffled.list(u_vertex(1)) == DegreeList{1, 3});
}

TEST_CASE("instance parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("p wrong 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p genfactor 1 1 0\nu 1 1\nu 1 1\nv 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p genfactor 1 1 1\nu 1 1\nv 1 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_instance("p genfactor 1 1 1\nu 1 1\nv 1 0\ne 1 1 1\ne 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p genfactor 0 0 1\ne 1 1 1\n"), ParseError);
    try {
        parse_instance("p genfactor 1 1 0\nu 1 oops\nv 1 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("factor files round-trip and bind against instances") {
    Instance inst(2, 1, {{1, 1, 2}, {2, 1, 1}}, {{1}, {1}}, {{2}});
    const EdgeWeighting phi{2, 0};
    const std::string text = serialize_factor(inst, phi);
    CHECK(text == "f genfactor 1\nw 1 1 2\n");
    const FactorFile file = parse_factor(text);
    CHECK(file.declared_edges == 1);
    CHECK(bind_factor(inst, file) == phi);

    // Binding rejects entries that are not edges and duplicate entries.
    CHECK_THROWS_AS(bind_factor(inst, parse_factor("f genfactor 1\nw 2 9 1\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(bind_factor(inst, parse_factor("f genfactor 2\nw 1 1 1\nw 1 1 1\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_factor("f genfactor 2\nw 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_factor("x nonsense\n"), ParseError);
}

TEST_CASE("serialization round-trips on random instances") {
    Rng rng(4099);
    for (int t = 0; t < 100; ++t) {
        const Instance inst =
            random_weighted_instance(rng, rng.range(1, 5), rng.range(1, 3), 60, 3);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}
