#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rpq/oracle.hpp"

using namespace rpq;
using namespace rpq::testing;

TEST_CASE("oracle: labels and concatenation on the running example") {
    auto g = fig1_graph();
    CHECK(oracle_eval(g, parse_rpq("d")) == rel({{7, 4}}));
    CHECK(oracle_eval(g, parse_rpq("b.c")) ==
          rel({{2, 4}, {2, 6}, {3, 5}, {4, 2}, {5, 3}}));
}

TEST_CASE("oracle: alternation is set union") {
    auto g = fig1_graph();
    auto a = oracle_eval(g, parse_rpq("a"));
    auto d = oracle_eval(g, parse_rpq("d"));
    auto both = oracle_eval(g, parse_rpq("a|d"));
    CHECK(both.size() == 2);
    for (auto [s, e] : a.pairs()) CHECK(both.contains(s, e));
    for (auto [s, e] : d.pairs()) CHECK(both.contains(s, e));
}

TEST_CASE("oracle: plus is the least fixed point") {
    auto g = fig1_graph();
    auto expected = rel(
        {{2, 2}, {2, 4}, {2, 6}, {4, 2}, {4, 4}, {4, 6}, {3, 3}, {3, 5}, {5, 3}, {5, 5}});
    CHECK(oracle_eval(g, parse_rpq("(b.c)+")) == expected);
}

TEST_CASE("oracle: star adds the identity over all vertices") {
    auto g = fig1_graph();
    auto plus = oracle_eval(g, parse_rpq("(b.c)+"));
    auto star = oracle_eval(g, parse_rpq("(b.c)*"));
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(star.contains(v, v));
    for (auto [s, e] : plus.pairs()) CHECK(star.contains(s, e));
    CHECK(star.size() == 8 + 10 - 4); // identity (8) plus closure (10) minus overlap (4 reflexive)
}

TEST_CASE("oracle: epsilon is the identity relation") {
    auto g = fig1_graph();
    auto id = oracle_eval(g, ast::epsilon());
    CHECK(id.size() == g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(id.contains(v, v));
}

TEST_CASE("oracle: full batch unit on the running example") {
    CHECK(oracle_eval(fig1_graph(), parse_rpq("d.(b.c)+.c")) == rel({{7, 5}, {7, 3}}));
}

TEST_CASE("oracle: unknown label is empty") {
    CHECK(oracle_eval(fig1_graph(), parse_rpq("nope")).empty());
}

TEST_CASE("oracle: empty graph") {
    CHECK(oracle_eval(parse_edge_list(""), parse_rpq("a")).empty());
}

TEST_CASE("oracle: refuses oversized graphs") {
    auto g = generate_rmat(7, 1, 2, 3); // 128 vertices > default cap 64
    CHECK_THROWS_AS(oracle_eval(g, parse_rpq("a")), OracleError);
    OracleConfig cfg;
    cfg.max_vertices = 128;
    CHECK_NOTHROW(oracle_eval(g, parse_rpq("a"), cfg));
}

TEST_CASE("oracle: algebraic identities hold") {
    auto g = generate_rmat(4, 2, 3, 21);
    auto a = parse_rpq("a"), b = parse_rpq("b");
    // (a|b) = (b|a)
    CHECK(oracle_eval(g, ast::alt({a, b})) == oracle_eval(g, ast::alt({b, a})));
    // a+ = a.a*
    CHECK(oracle_eval(g, ast::plus(a)) ==
          oracle_eval(g, ast::concat({a, ast::star(a)})));
    // a* = eps | a+
    CHECK(oracle_eval(g, ast::star(a)) ==
          oracle_eval(g, ast::alt({ast::epsilon(), ast::plus(a)})));
}
