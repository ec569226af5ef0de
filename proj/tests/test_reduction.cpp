#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "rpq/instance_gen.hpp"
#include "rpq/nfa.hpp"
#include "rpq/reduction.hpp"

using namespace rpq;
using namespace rpq::testing;

namespace {

PairRelation bc_relation() { return eval_rpq_without_kc(fig1_graph(), parse_rpq("b.c")); }

} // namespace

TEST_CASE("edge_level_reduce: edges are exactly the relation, vertices its endpoints") {
    auto gr = edge_level_reduce(bc_relation());
    CHECK(gr.vertex_count() == 5);
    CHECK(gr.edge_count() == 5);
    CHECK(gr.vertices == std::vector<VertexId>{2, 3, 4, 5, 6});
    std::set<std::pair<VertexId, VertexId>> edges(gr.edges.begin(), gr.edges.end());
    std::set<std::pair<VertexId, VertexId>> expected{{2, 4}, {2, 6}, {3, 5}, {4, 2}, {5, 3}};
    CHECK(edges == expected);
}

TEST_CASE("edge_level_reduce: empty relation, self-loop pair") {
    CHECK(edge_level_reduce(PairRelation{}).vertex_count() == 0);
    auto gr = edge_level_reduce(rel({{3, 3}}));
    CHECK(gr.vertex_count() == 1);
    CHECK(gr.edge_count() == 1);
    CHECK(gr.edges.front() == std::pair<VertexId, VertexId>{3, 3});
}

TEST_CASE("condense: running example has SCCs {2,4}, {3,5}, {6}") {
    auto cond = condense(edge_level_reduce(bc_relation()));
    REQUIRE(cond.scc_count == 3);
    CHECK(cond.scc_of.at(2) == cond.scc_of.at(4));
    CHECK(cond.scc_of.at(3) == cond.scc_of.at(5));
    CHECK(cond.scc_of.at(2) != cond.scc_of.at(3));
    CHECK(cond.scc_of.at(6) != cond.scc_of.at(2));
    CHECK(cond.scc_of.at(6) != cond.scc_of.at(3));
    // condensed edges: two self-loops + the {2,4} -> {6} edge
    CHECK(cond.condensed_edges.size() == 3);
    CHECK(cond.self_loop[cond.scc_of.at(2)]);
    CHECK(cond.self_loop[cond.scc_of.at(3)]);
    CHECK_FALSE(cond.self_loop[cond.scc_of.at(6)]);
    std::set<std::pair<SccId, SccId>> edges(cond.condensed_edges.begin(),
                                            cond.condensed_edges.end());
    CHECK(edges.contains({cond.scc_of.at(2), cond.scc_of.at(6)}));
}

TEST_CASE("condense: scc ids are reverse topological") {
    std::mt19937_64 rng(13);
    auto labels = default_label_names(3);
    for (int i = 0; i < 100; ++i) {
        auto g = generate_rmat(4, 2, 3, rng());
        auto r = eval_rpq_without_kc(g, random_ast(rng, labels, 2));
        auto cond = condense(edge_level_reduce(r));
        for (auto [from, to] : cond.condensed_edges)
            if (from != to) CHECK(from > to);
        // members partition the reduced vertex set
        std::size_t total = 0;
        for (const auto& m : cond.members) total += m.size();
        CHECK(total == cond.scc_of.size());
    }
}

TEST_CASE("compute_rtc: running example has 3 pairs") {
    auto cond = condense(edge_level_reduce(bc_relation()));
    auto rtc = compute_rtc(cond);
    REQUIRE(rtc.pairs.size() == 3);
    SccId s24 = cond.scc_of.at(2), s35 = cond.scc_of.at(3), s6 = cond.scc_of.at(6);
    std::set<std::pair<SccId, SccId>> got(rtc.pairs.begin(), rtc.pairs.end());
    std::set<std::pair<SccId, SccId>> expected{{s24, s24}, {s35, s35}, {s24, s6}};
    CHECK(got == expected);
}

TEST_CASE("compute_rtc: reach lists mirror the pair list") {
    auto cond = condense(edge_level_reduce(bc_relation()));
    auto rtc = compute_rtc(cond);
    std::size_t total = 0;
    for (SccId k = 0; k < cond.scc_count; ++k) {
        for (SccId l : rtc.reach[k]) {
            CHECK(std::find(rtc.pairs.begin(), rtc.pairs.end(), std::pair<SccId, SccId>{k, l}) !=
                  rtc.pairs.end());
        }
        CHECK(std::is_sorted(rtc.reach[k].begin(), rtc.reach[k].end()));
        total += rtc.reach[k].size();
    }
    CHECK(total == rtc.pairs.size());
}

TEST_CASE("expand_rtc: reconstructs (b.c)+ on the running example") {
    auto gr = edge_level_reduce(bc_relation());
    auto cond = condense(gr);
    auto expanded = expand_rtc(compute_rtc(cond), cond);
    auto expected = rel(
        {{2, 2}, {2, 4}, {2, 6}, {4, 2}, {4, 4}, {4, 6}, {3, 3}, {3, 5}, {5, 3}, {5, 5}});
    CHECK(expanded.size() == 10); // append-only path produced no duplicates
    CHECK(expanded == expected);
}

TEST_CASE("tc_by_bfs: matches the closure on the running example") {
    auto got = tc_by_bfs(edge_level_reduce(bc_relation()));
    CHECK(got == eval_rpq_without_kc(fig1_graph(), parse_rpq("(b.c)+")));
}

TEST_CASE("tc_by_bfs: reflexive pairs only through cycles") {
    // a chain has no (v, v) pairs
    auto chain = tc_by_bfs(edge_level_reduce(rel({{0, 1}, {1, 2}})));
    CHECK(chain == rel({{0, 1}, {0, 2}, {1, 2}}));
    // a 2-cycle yields both reflexive pairs
    auto cyc = tc_by_bfs(edge_level_reduce(rel({{0, 1}, {1, 0}})));
    CHECK(cyc == rel({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("expand_rtc pipeline equals direct BFS closure on random relations") {
    std::mt19937_64 rng(17);
    auto labels = default_label_names(4);
    for (int i = 0; i < 200; ++i) {
        auto g = generate_rmat(1 + rng() % 5, rng() % 4, 1 + rng() % 4, rng());
        auto r = eval_rpq_without_kc(g, random_ast(rng, g.labels(), 2));
        auto gr = edge_level_reduce(r);
        auto cond = condense(gr);
        auto expanded = expand_rtc(compute_rtc(cond), cond);
        CHECK(expanded == tc_by_bfs(gr));
    }
}

TEST_CASE("rtc never has more pairs than the full closure") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        auto g = generate_rmat(4, 1 + rng() % 3, 2, rng());
        auto r = eval_rpq_without_kc(g, random_ast(rng, g.labels(), 2));
        auto gr = edge_level_reduce(r);
        auto cond = condense(gr);
        CHECK(compute_rtc(cond).pairs.size() <= tc_by_bfs(gr).size());
    }
}
