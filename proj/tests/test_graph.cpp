#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "fixtures.hpp"
#include "rpq/graph.hpp"

using namespace rpq;

TEST_CASE("parse_edge_list: basic three-edge file") {
    auto g = parse_edge_list("7\td\t4\n4\tb\t1\n1\tc\t2\n");
    CHECK(g.edge_count() == 3);
    CHECK(g.vertex_count() == 8); // ids 0..7
    CHECK(g.label_count() == 3);
    CHECK(g.label_id("b").has_value());
    CHECK(g.label_id("c").has_value());
    CHECK(g.label_id("d").has_value());
    CHECK_FALSE(g.label_id("a").has_value());
}

TEST_CASE("parse_edge_list: running-example file has 4 labels and 12 edges") {
    auto g = load_edge_list(testing::fig1_path());
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(g.label_count() == 4);
    for (const char* l : {"a", "b", "c", "d"}) CHECK(g.label_id(l).has_value());
}

TEST_CASE("parse_edge_list: duplicate lines are deduplicated") {
    auto once = parse_edge_list("1\tx\t2\n");
    auto twice = parse_edge_list("1\tx\t2\n1\tx\t2\n");
    CHECK(once.edge_count() == 1);
    CHECK(twice.edge_count() == 1);
    CHECK(once.edges() == twice.edges());
}

TEST_CASE("parse_edge_list: comments, blank lines, space separators") {
    auto g = parse_edge_list("# header\n\n1 x 2\n3  x   4\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.vertex_count() == 5);
}

TEST_CASE("parse_edge_list: empty file is an empty graph") {
    auto g = parse_edge_list("");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_edge_list: malformed lines report the line number") {
    CHECK_THROWS_WITH_AS(parse_edge_list("1\tx\n", "f"), doctest::Contains("f:1"), GraphError);
    CHECK_THROWS_WITH_AS(parse_edge_list("1\tx\t2\nfoo\tx\t2\n", "f"), doctest::Contains("f:2"),
                         GraphError);
    CHECK_THROWS_AS(parse_edge_list("1\tx\t2\t3\n"), GraphError);
}

TEST_CASE("adjacency index round-trips the edge set") {
    auto check_graph = [](const LabeledGraph& g) {
        std::set<std::tuple<VertexId, LabelId, VertexId>> from_adj, from_edges;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (LabelId l = 0; l < g.label_count(); ++l)
                for (VertexId w : g.out(v, l)) from_adj.insert({v, l, w});
        for (const Edge& e : g.edges()) from_edges.insert({e.src, e.label, e.dst});
        CHECK(from_adj == from_edges);
    };
    check_graph(testing::fig1_graph());
    check_graph(generate_rmat(6, 2, 3, 42));
    check_graph(parse_edge_list(""));
}

TEST_CASE("generate_rmat: shape and determinism") {
    auto g = generate_rmat(13, 3, 4, 1);
    CHECK(g.vertex_count() == 8192);
    CHECK(g.edge_count() <= (1u << 16));
    CHECK(g.label_count() == 4);

    auto tiny = generate_rmat(1, 0, 1, 5);
    CHECK(tiny.vertex_count() == 2);
    CHECK(tiny.edge_count() <= 2);

    auto a = generate_rmat(8, 2, 4, 99);
    auto b = generate_rmat(8, 2, 4, 99);
    CHECK(a.edges() == b.edges());
    auto c = generate_rmat(8, 2, 4, 100);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("generate_rmat: average vertex degree per label near 2^(f-2)") {
    // dedup shrinks the pre-dedup target a little; allow 25%
    for (unsigned f : {2u, 3u}) {
        auto g = generate_rmat(11, f, 4, 7);
        double degree = static_cast<double>(g.edge_count()) /
                        (static_cast<double>(g.vertex_count()) * g.label_count());
        double target = std::pow(2.0, static_cast<double>(f) - 2.0);
        CHECK(degree > 0.75 * target);
        CHECK(degree <= 1.25 * target);
    }
}

TEST_CASE("rmat precondition violations") {
    CHECK_THROWS_AS(generate_rmat(0, 1, 1, 1), GraphError);
    CHECK_THROWS_AS(generate_rmat(3, 1, 0, 1), GraphError);
}
