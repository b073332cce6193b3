#include <catch2/catch_amalgamated.hpp>

#include "dimerlab/io.hpp"
#include "dimerlab/lattices.hpp"
#include "test_util.hpp"

using namespace dimerlab;

TEST_CASE("graph JSON round trips exactly", "[io]") {
    auto round_trip = [](const Graph& g) {
        Graph back = graph_from_json_string(graph_to_json_string(g));
        CHECK(back == g);
    };
    round_trip(named_cubic("K4"));
    round_trip(named_cubic("petersen"));
    round_trip(middle_graph(named_cubic("K4")));        // roles and origins
    round_trip(line_graph(named_cubic("prism")));
    round_trip(testutil::cycle(2));                     // multigraph flag
    round_trip(testutil::theta());
    round_trip(kagome_torus({LatticeFamily::kagome, 2, 2, true}));   // weights
    round_trip(silicate_torus({LatticeFamily::silicate, 2, 2, true}));
    round_trip(Graph{});
    round_trip(testutil::path(1));
}

TEST_CASE("graph JSON has a stable canonical form", "[io]") {
    CHECK(graph_to_json_string(testutil::path(2)) ==
          R"({"format":"dimerlab-graph-v1","multigraph":false,)"
          R"("vertices":[{"id":0,"role":"plain"},{"id":1,"role":"plain"}],)"
          R"("edges":[{"id":0,"u":0,"v":1,"weight":"1"}]})");

    Graph mk2 = middle_graph(testutil::path(2));
    CHECK(graph_to_json_string(mk2) ==
          R"({"format":"dimerlab-graph-v1","multigraph":false,)"
          R"("vertices":[{"id":0,"role":"v"},{"id":1,"role":"v"},)"
          R"({"id":2,"role":"e","origin":0}],)"
          R"("edges":[{"id":0,"u":0,"v":2,"weight":"1"},{"id":1,"u":1,"v":2,"weight":"1"}]})");
}

TEST_CASE("graph JSON accepts shuffled ids and optional fields", "[io]") {
    Graph g = graph_from_json_string(
        R"({"format":"dimerlab-graph-v1",)"
        R"("vertices":[{"id":1},{"id":0}],)"
        R"("edges":[{"id":0,"u":0,"v":1}]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.multigraph());
    CHECK(g.role(0).kind == RoleKind::plain);
    CHECK(g.edge(0).weight == WeightSymbol::unit);
}

TEST_CASE("graph JSON rejects malformed documents", "[io]") {
    auto rejects = [](const std::string& text) {
        CHECK_THROWS_AS(graph_from_json_string(text), FormatError);
    };
    rejects("{nope");                 // not JSON
    rejects("[]");                    // not an object
    rejects(R"({"vertices":[],"edges":[]})");                         // missing format
    rejects(R"({"format":"something-else","vertices":[],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","edges":[]})");          // missing vertices
    rejects(R"({"format":"dimerlab-graph-v1","vertices":{},"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","multigraph":1,"vertices":[],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{}],"edges":[]})");  // missing id
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":2}],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":0}],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":-1}],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0,"role":"w"}],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0,"role":7}],"edges":[]})");
    // origin is reserved for e-vertices
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0,"origin":0}],"edges":[]})");
    rejects(R"({"format":"dimerlab-graph-v1",)"
            R"("vertices":[{"id":0,"role":"v","origin":0}],"edges":[]})");
    // edge problems
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0}],)"
            R"("edges":[{"id":0,"u":0,"v":0}]})");                    // loop
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":1}],)"
            R"("edges":[{"id":0,"u":0,"v":1},{"id":1,"u":1,"v":0}]})");  // parallel, unflagged
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":1}],)"
            R"("edges":[{"id":0,"u":0,"v":5}]})");                    // endpoint out of range
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":1}],)"
            R"("edges":[{"id":0,"u":0,"v":1,"weight":"w"}]})");       // unknown weight
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":1}],)"
            R"("edges":[{"id":0,"u":0,"v":1,"weight":3}]})");
    rejects(R"({"format":"dimerlab-graph-v1","vertices":[{"id":0},{"id":1}],)"
            R"("edges":[{"id":1,"u":0,"v":1}]})");                    // sparse edge ids
}

TEST_CASE("the parallel pair survives a round trip only when flagged", "[io]") {
    std::string flagged =
        R"({"format":"dimerlab-graph-v1","multigraph":true,)"
        R"("vertices":[{"id":0},{"id":1}],)"
        R"("edges":[{"id":0,"u":0,"v":1},{"id":1,"u":1,"v":0}]})";
    Graph g = graph_from_json_string(flagged);
    CHECK(g.has_parallel_edges());
    CHECK(g == graph_from_json_string(graph_to_json_string(g)));
}

TEST_CASE("DOT output distinguishes the vertex roles", "[io]") {
    CHECK(graph_to_dot(middle_graph(testutil::path(2))) ==
          "graph dimerlab {\n"
          "  0 [shape=circle];\n"
          "  1 [shape=circle];\n"
          "  2 [shape=square];\n"
          "  0 -- 2;\n"
          "  1 -- 2;\n"
          "}\n");
    Graph weighted = testutil::path(2);
    weighted.set_weight(0, WeightSymbol::x);
    CHECK(graph_to_dot(weighted) ==
          "graph dimerlab {\n"
          "  0;\n"
          "  1;\n"
          "  0 -- 1 [label=\"x\"];\n"
          "}\n");
}

TEST_CASE("polynomial JSON round trips and stays sorted", "[io]") {
    SplitMix64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = testutil::random_poly(rng);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    }
    CHECK(polynomial_from_json(polynomial_to_json(Polynomial::zero())) == Polynomial::zero());
    CHECK(polynomial_to_json(Polynomial::zero()).dump() == "[]");

    Polynomial p = pm_silicate_weighted(2, 2);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);

    Polynomial three;
    three.add_term(Monomial::of(WeightSymbol::a) * Monomial::of(WeightSymbol::x), 1);
    three.add_term(Monomial::of(WeightSymbol::b) * Monomial::of(WeightSymbol::y), 1);
    three.add_term(Monomial::of(WeightSymbol::c) * Monomial::of(WeightSymbol::z), 1);
    CHECK(polynomial_to_json(three).dump() ==
          R"([{"coeff":"1","exps":{"c":1,"z":1}},)"
          R"({"coeff":"1","exps":{"b":1,"y":1}},)"
          R"({"coeff":"1","exps":{"a":1,"x":1}}])");
}

TEST_CASE("polynomial JSON rejects malformed documents", "[io]") {
    auto rejects = [](const std::string& text) {
        CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(text)), FormatError);
    };
    rejects("{}");
    rejects(R"([{"exps":{}}])");                        // missing coeff
    rejects(R"([{"coeff":7,"exps":{}}])");              // coeff must be a string
    rejects(R"([{"coeff":"12x","exps":{}}])");          // not a decimal
    rejects(R"([{"coeff":"1"}])");                      // missing exps
    rejects(R"([{"coeff":"1","exps":[]}])");            // exps must be an object
    rejects(R"([{"coeff":"1","exps":{"q":1}}])");       // unknown symbol
    rejects(R"([{"coeff":"1","exps":{"1":1}}])");       // the unit takes no exponent
    rejects(R"([{"coeff":"1","exps":{"a":-2}}])");      // negative exponent
}

TEST_CASE("matching and trace serialization", "[io]") {
    CHECK(matching_to_json({3, 1, 2}).dump() == "[1,2,3]");
    CHECK(matching_to_json({}).dump() == "[]");

    auto [base, trace] = reduce_to_base(testutil::cycle(5));
    CHECK(trace_to_json(trace).dump() ==
          R"({"steps":[{"op":"smooth","removed":0,"new_edge":3},)"
          R"({"op":"smooth","removed":0,"new_edge":2},)"
          R"({"op":"smooth","removed":0,"new_edge":1}],"base_class":"C2"})");

    auto [k1, pend] = reduce_to_base(testutil::path(2));
    CHECK(trace_to_json(pend).dump() ==
          R"({"steps":[{"op":"pendant","removed":0}],"base_class":"K1"})");
}

TEST_CASE("prediction serialization", "[io]") {
    CHECK(prediction_to_json(predict_pm_middle(named_cubic("K4"))).dump() ==
          R"({"value":"24","tag":"Thm1.4","trace":{"steps":[],"base_class":"cubic-simple"}})");
    nlohmann::ordered_json th = prediction_to_json(predict_pm_middle(testutil::theta()));
    CHECK(th["value"] == "0");
    CHECK(th["tag"] == "parity-zero");
    CHECK_FALSE(th.contains("trace"));

    nlohmann::ordered_json dc = prediction_to_json(predict_pm_middle(testutil::doubled_c4()));
    CHECK_FALSE(dc.contains("value"));
    CHECK(dc["tag"] == "not-covered");
    CHECK(dc["trace"]["base_class"] == "cubic-multigraph");
}

TEST_CASE("family serialization", "[io]") {
    auto families = structured_pm_families(named_cubic("K4"));
    nlohmann::ordered_json j = family_to_json(families[0], 0);
    CHECK(j["l"] == 0);
    CHECK(j["Ml"].size() == 3);
    CHECK(j["Mlprime"].size() == 3);
    CHECK(j["free_blocks"].size() == 1);
    CHECK(j["family_size"] == 3);
    auto keys = std::vector<std::string>{};
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"l", "Ml", "Mlprime", "free_blocks", "family_size"});
}
