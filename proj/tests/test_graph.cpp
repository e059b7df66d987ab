#include <doctest.h>

#include <fstream>
#include <sstream>

#include "altmatch/families.hpp"
#include "altmatch/graph.hpp"
#include "altmatch/graph_io.hpp"
#include "altmatch/harness.hpp"
#include "oracles.hpp"

using namespace altmatch;

TEST_SUITE_BEGIN("graph");

TEST_CASE("degree basics") {
    Graph k4 = complete_graph(4);
    CHECK(k4.degree(0) == 3);
    Graph k2 = complete_graph(2);
    CHECK(k2.degree(1) == 1);
    Graph prism = gen_g1(1).graph;
    for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);
    CHECK_THROWS_AS(k4.degree(4), std::invalid_argument);
    CHECK_THROWS_AS(k4.degree(-1), std::invalid_argument);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    // duplicate edges collapse
    Graph g(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.num_edges() == 2);
}

TEST_CASE("bipartition") {
    Graph c4 = cycle_graph(4);
    auto b = bipartition(c4);
    REQUIRE(b.has_value());
    CHECK(check_bipartition(c4, *b));
    CHECK(b->side[0] == b->side[2]);
    CHECK(b->side[1] == b->side[3]);
    CHECK(b->side[0] != b->side[1]);

    CHECK_FALSE(bipartition(complete_graph(3)).has_value());
    CHECK_FALSE(bipartition(gen_g1(1).graph).has_value());  // triangles

    // disconnected graphs still get a consistent labeling
    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto b2 = bipartition(two_edges);
    REQUIRE(b2.has_value());
    CHECK(check_bipartition(two_edges, *b2));
}

TEST_CASE("vertex connectivity basics") {
    auto k5 = vertex_connectivity(complete_graph(5));
    CHECK(k5.kappa == 4);
    CHECK(k5.certificate.complete_graph);

    Graph path3(3, {{0, 1}, {1, 2}});
    auto p = vertex_connectivity(path3);
    CHECK(p.kappa == 1);
    REQUIRE(p.certificate.cut.size() == 1);
    CHECK(p.certificate.cut[0] == 1);

    auto prism = vertex_connectivity(gen_g1(1).graph);
    CHECK(prism.kappa == 3);

    Graph k1(1);
    auto single = vertex_connectivity(k1);
    CHECK(single.kappa == 0);
    CHECK(single.certificate.complete_graph);

    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK(vertex_connectivity(disconnected).kappa == 0);
}

TEST_CASE("connectivity certificate validates by deletion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracles::gnp(7, 0.4, rng);
        auto conn = vertex_connectivity(g);
        if (conn.certificate.complete_graph) continue;
        CHECK(static_cast<int>(conn.certificate.cut.size()) == conn.kappa);
        if (conn.kappa == 0) {
            CHECK_FALSE(is_connected(g));
            continue;
        }
        auto removed = g.without_vertices(conn.certificate.cut);
        CHECK_FALSE(is_connected(removed.graph));
    }
}

TEST_CASE("kappa agrees with brute force on all labeled graphs up to 5") {
    for (int nu = 1; nu <= 5; ++nu) {
        for_each_labeled_graph(nu, false, [&](const Graph& g) {
            CHECK(vertex_connectivity(g).kappa == oracles::brute_vertex_connectivity(g));
        });
    }
}

TEST_CASE("kappa agrees with brute force on random graphs of order 6 and 7") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = oracles::gnp(trial % 2 == 0 ? 6 : 7, 0.3 + 0.1 * (trial % 5), rng);
        CHECK(vertex_connectivity(g).kappa == oracles::brute_vertex_connectivity(g));
    }
}

TEST_CASE("kappa <= min degree <= nu-1 across the stream") {
    for_each_labeled_graph(5, false, [&](const Graph& g) {
        auto conn = vertex_connectivity(g);
        CHECK(conn.kappa <= g.min_degree());
        CHECK(g.min_degree() <= g.num_vertices() - 1);
    });
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(2)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(gen_g1(2).graph));
}

TEST_CASE("edge list round trip") {
    Graph g = gen_g1(1).graph;
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph back = parse_edge_list(in);
    CHECK(back == g);
}

TEST_CASE("edge list parser diagnostics carry line numbers") {
    std::istringstream missing("4 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(missing), ParseError);

    std::istringstream bad_order("# comment\n3 1\n1 0\n");
    try {
        parse_edge_list(bad_order);
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream comments("3 2\n# chord\n0 1\n\n1 2\n");
    CHECK(parse_edge_list(comments).num_edges() == 2);
}

TEST_CASE("graph6 round trip on fixtures") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracles::gnp(2 + trial % 9, 0.5, rng);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    Graph prism = gen_g1(1).graph;
    CHECK(from_graph6(to_graph6(prism)) == prism);
}

TEST_CASE("graph6 decoder accepts the catalog and the encoder reproduces it") {
    auto file = ingest_graph6(std::string(ALTMATCH_TEST_DATA_DIR) + "/n7_all.g6");
    CHECK(file.issues.empty());
    CHECK(file.graphs.size() == 1044);
    for (const auto& g : file.graphs) {
        CHECK(g.num_vertices() == 7);
    }
    // byte-for-byte agreement with the external encoder that wrote the file
    std::ifstream in(std::string(ALTMATCH_TEST_DATA_DIR) + "/n7_all.g6");
    std::string line;
    std::size_t idx = 0;
    while (std::getline(in, line)) {
        REQUIRE(idx < file.graphs.size());
        CHECK(to_graph6(file.graphs[idx]) == line);
        ++idx;
    }
}

TEST_CASE("graph6 malformed lines are rejected") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("E"), std::invalid_argument);     // truncated bits
    CHECK_THROWS_AS(from_graph6("E??\x01"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C?extra"), std::invalid_argument);
}

TEST_SUITE_END();
