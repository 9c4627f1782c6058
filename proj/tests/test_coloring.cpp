#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srcon/aux_graph.hpp"
#include "srcon/coloring.hpp"
#include "srcon/errors.hpp"
#include "support.hpp"

using namespace srcon;
using namespace srcon::test;

namespace {

Coloring make(const Graph& g, std::vector<int> colors) {
    Coloring c;
    c.color = std::move(colors);
    c.k = *std::max_element(c.color.begin(), c.color.end());
    REQUIRE(static_cast<int>(c.color.size()) == g.m);
    return c;
}

}  // namespace

TEST_CASE("C4 alternating coloring is valid, monochromatic is not") {
    Graph g = cycle_graph(4);
    // canonical edge order: (0,1) (0,3) (1,2) (2,3)
    Coloring good = make(g, {1, 2, 2, 1});
    CHECK(verify_strong_rainbow(g, good).ok);

    Coloring mono = make(g, {1, 1, 1, 1});
    VerifyResult res = verify_strong_rainbow(g, mono);
    CHECK(!res.ok);
    CHECK(res.witness_u >= 0);
    CHECK(res.witness_v > res.witness_u);
    // the witness pair is genuinely at distance 2 (no rainbow 2-path)
    CHECK(bfs_distances(g, res.witness_u)[res.witness_v] == 2);
}

TEST_CASE("path graph requires all-distinct colors") {
    Graph g = path_graph(4);
    CHECK(verify_strong_rainbow(g, make(g, {1, 2, 3})).ok);
    CHECK(!verify_strong_rainbow(g, make(g, {1, 2, 1})).ok);
}

TEST_CASE("valid coloring restricted to an H-clique is injective") {
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = connected_er_corpus(8, 0.4, 1, 60 + trial)[0];
        int src = brute_force_src(g);
        Coloring c;
        REQUIRE(feasible_with_k_colors(g, src, &c));
        REQUIRE(verify_strong_rainbow(g, c).ok);
        AuxiliaryGraph h = build_aux_graph(g);
        CliqueCertificate cert = max_clique(h);
        for (std::size_t i = 0; i < cert.members.size(); ++i) {
            for (std::size_t j = i + 1; j < cert.members.size(); ++j) {
                CHECK(c.color[cert.members[i]] != c.color[cert.members[j]]);
            }
        }
    }
}

TEST_CASE("brute force closed forms") {
    CHECK(brute_force_src(star_graph(4)) == 4);
    CHECK(brute_force_src(path_graph(5)) == 4);   // src(tree) = m
    CHECK(brute_force_src(cycle_graph(5)) == 3);
    CHECK(brute_force_src(cycle_graph(6)) == 3);
    CHECK(brute_force_src(complete_graph(4)) == 1);
    CHECK(brute_force_src(complete_bipartite(2, 4)) == 2);  // ceil(sqrt 4)
    CHECK(brute_force_src(complete_bipartite(2, 9)) == 3);  // ceil(sqrt 9)
}

TEST_CASE("feasibility probe is monotone in k") {
    Graph g = cycle_graph(5);
    CHECK(!feasible_with_k_colors(g, 2, nullptr));
    CHECK(feasible_with_k_colors(g, 3, nullptr));
    CHECK(feasible_with_k_colors(g, 4, nullptr));
    CHECK(!feasible_with_k_colors(g, 0, nullptr));
}

TEST_CASE("brute force exhausts cleanly") {
    CHECK_THROWS_AS(brute_force_src(path_graph(4), 2), ExhaustedError);
}

TEST_CASE("brute force is invariant under vertex relabeling") {
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = connected_er_corpus(7, 0.45, 1, 20 + trial)[0];
        int base = brute_force_src(g);
        // relabel by reversing ids
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges) edges.emplace_back(g.n - 1 - u, g.n - 1 - v);
        Graph r = graph_from_edges(g.n, edges);
        CHECK(brute_force_src(r) == base);
    }
}

TEST_CASE("coloring JSON round trip") {
    Graph g = cycle_graph(4);
    Coloring c = make(g, {1, 2, 2, 1});
    std::string json = coloring_to_json(g, c, "test");
    Coloring back = coloring_from_json(g, json);
    CHECK(back.color == c.color);
    CHECK(back.k == c.k);
}

TEST_CASE("coloring JSON rejects mismatched graphs and partial colorings") {
    Graph g = cycle_graph(4);
    Coloring c = make(g, {1, 2, 2, 1});
    std::string json = coloring_to_json(g, c, "test");
    Graph other = path_graph(5);
    CHECK_THROWS_AS(coloring_from_json(other, json), ParseError);
    CHECK_THROWS_AS(
        coloring_from_json(g, R"({"assignment":[{"u":"0","v":"1","color":1}]})"),
        ParseError);
    CHECK_THROWS_AS(
        coloring_from_json(g, R"({"assignment":[{"u":"0","v":"2","color":1}]})"),
        ParseError);
}
