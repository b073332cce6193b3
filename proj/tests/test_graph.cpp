#include <catch2/catch_amalgamated.hpp>

#include "dimerlab/graph.hpp"
#include "dimerlab/lattices.hpp"
#include "test_util.hpp"

using namespace dimerlab;

TEST_CASE("construction, degrees and incidence order", "[graph]") {
    Graph g = named_cubic("K4");
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 6);
    CHECK(g.is_cubic());
    CHECK(g.is_simple());
    CHECK(g.max_degree() == 3);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    // incidence lists follow edge insertion order
    CHECK(g.incident_edges(0) == std::vector<EdgeId>{0, 1, 2});
    CHECK(g.incident_edges(3) == std::vector<EdgeId>{2, 4, 5});
    CHECK(g.other_end(0, 0) == 1);
    CHECK(g.other_end(0, 1) == 0);
    CHECK_THROWS_AS(g.other_end(5, 0), PreconditionError);  // edge 5 is (2,3)
    CHECK(g.adjacent(0, 3));
    CHECK(g.find_edge(2, 3) == EdgeId{5});
    CHECK_FALSE(g.find_edge(0, 0).has_value());
}

TEST_CASE("loops rejected, parallels gated by the multigraph flag", "[graph]") {
    Graph simple;
    simple.add_vertices(2);
    simple.add_edge(0, 1);
    CHECK_THROWS_AS(simple.add_edge(0, 0), PreconditionError);
    CHECK_THROWS_AS(simple.add_edge(1, 0), PreconditionError);

    Graph multi(true);
    multi.add_vertices(2);
    multi.add_edge(0, 1);
    multi.add_edge(1, 0);
    CHECK(multi.edge_count() == 2);
    CHECK(multi.has_parallel_edges());
    CHECK_FALSE(multi.is_simple());
    CHECK_THROWS_AS(multi.add_edge(1, 1), PreconditionError);  // loops stay illegal

    // find_edge returns the lowest id among parallels
    CHECK(multi.find_edge(0, 1) == EdgeId{0});
}

TEST_CASE("components come back sorted", "[graph]") {
    Graph g;
    g.add_vertices(6);
    g.add_edge(3, 5);
    g.add_edge(0, 4);
    g.add_edge(4, 2);
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 2, 4});
    CHECK(comps[1] == std::vector<VertexId>{1});
    CHECK(comps[2] == std::vector<VertexId>{3, 5});
    CHECK_FALSE(g.connected());

    CHECK(Graph{}.connected());  // zero components
    CHECK(testutil::path(1).connected());
    CHECK(testutil::cycle(4).connected());
}

TEST_CASE("bridges on fixed shapes", "[graph]") {
    CHECK(testutil::path(5).bridges() == std::vector<EdgeId>{0, 1, 2, 3});
    CHECK(testutil::cycle(5).bridges().empty());
    CHECK(named_cubic("petersen").bridges().empty());
    CHECK(named_cubic("bridged10").bridges() == std::vector<EdgeId>{14});
    CHECK(named_cubic("bridged14").bridges() == std::vector<EdgeId>{20});
    CHECK(testutil::two_triangles_bridged().bridges() == std::vector<EdgeId>{6});
    // a parallel pair is a cycle of length 2: neither copy is a bridge
    CHECK(testutil::cycle(2).bridges().empty());
    CHECK(testutil::theta().bridges().empty());
}

TEST_CASE("bridges match the removal oracle on random graphs", "[graph]") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = testutil::random_simple(7, seed);
        CHECK(g.bridges() == testutil::naive_bridges(g));
        Graph m = testutil::random_multigraph(6, 100 + seed);
        CHECK(m.bridges() == testutil::naive_bridges(m));
    }
}

TEST_CASE("roles are stored per vertex", "[graph]") {
    Graph g;
    g.add_vertex({RoleKind::v_vertex, std::nullopt});
    g.add_vertex({RoleKind::e_vertex, EdgeId{7}});
    g.add_vertex();
    CHECK(g.role(0).kind == RoleKind::v_vertex);
    CHECK(g.role(1).kind == RoleKind::e_vertex);
    CHECK(g.role(1).origin == EdgeId{7});
    CHECK(g.role(2).kind == RoleKind::plain);
    g.set_role(2, {RoleKind::v_vertex, std::nullopt});
    CHECK(g.role(2).kind == RoleKind::v_vertex);
}

TEST_CASE("weights are stored per edge", "[graph]") {
    Graph g;
    g.add_vertices(2);
    g.add_edge(0, 1, WeightSymbol::a);
    CHECK(g.edge(0).weight == WeightSymbol::a);
    g.set_weight(0, WeightSymbol::z);
    CHECK(g.edge(0).weight == WeightSymbol::z);
}

TEST_CASE("id bounds are checked", "[graph]") {
    Graph g = testutil::path(3);
    CHECK_THROWS_AS(g.degree(3), PreconditionError);
    CHECK_THROWS_AS(g.edge(2), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 9), PreconditionError);
    CHECK_THROWS_AS(g.find_edge(0, 9), PreconditionError);
    CHECK_THROWS_AS(g.set_weight(5, WeightSymbol::a), PreconditionError);
    CHECK_THROWS_AS(g.set_role(7, {}), PreconditionError);
}

TEST_CASE("equality compares roles, edges and the flag", "[graph]") {
    Graph a = testutil::path(3);
    Graph b = testutil::path(3);
    CHECK(a == b);
    b.set_weight(0, WeightSymbol::x);
    CHECK_FALSE(a == b);

    Graph c = testutil::path(3);
    c.set_role(0, {RoleKind::v_vertex, std::nullopt});
    CHECK_FALSE(a == c);

    Graph plain;
    Graph flagged(true);
    CHECK_FALSE(plain == flagged);  // same (empty) structure, different contract
}
