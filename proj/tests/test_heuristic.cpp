#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srcon/coloring.hpp"
#include "srcon/errors.hpp"
#include "srcon/heuristic.hpp"
#include "support.hpp"

using namespace srcon;
using namespace srcon::test;

TEST_CASE("default iteration count is ceil(n/5)") {
    CHECK(default_max_iter(path_graph(5)) == 1);
    CHECK(default_max_iter(path_graph(6)) == 2);
    CHECK(default_max_iter(path_graph(10)) == 2);
    CHECK(default_max_iter(path_graph(11)) == 3);
}

TEST_CASE("every heuristic output strongly rainbow connects the graph") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = connected_er_corpus(9, 0.35, 1, 800 + trial)[0];
        HeuristicResult res = run_heuristic(g, 3, rng);
        CHECK(res.best == res.coloring.k);
        CHECK(res.best <= g.m);
        CHECK(verify_strong_rainbow(g, res.coloring).ok);
    }
}

TEST_CASE("heuristic never beats the optimum and is sane on closed forms") {
    Rng rng(5);
    Graph star = star_graph(5);
    HeuristicResult res = run_heuristic(star, 2, rng);
    CHECK(res.best == 5);  // src(K_{1,5}) = 5, heuristic can't do better

    Graph p4 = path_graph(4);
    res = run_heuristic(p4, 1, rng);
    CHECK(res.best == 3);

    for (int trial = 0; trial < 10; ++trial) {
        Graph g = connected_er_corpus(7, 0.45, 1, 320 + trial)[0];
        HeuristicResult h = run_heuristic(g, 4, rng);
        CHECK(h.best >= brute_force_src(g));
    }
}

TEST_CASE("deterministic for a fixed seed") {
    Graph g = connected_er_corpus(10, 0.3, 1, 77)[0];
    Rng r1(123), r2(123);
    HeuristicResult a = run_heuristic(g, 4, r1);
    HeuristicResult b = run_heuristic(g, 4, r2);
    CHECK(a.best == b.best);
    CHECK(a.coloring.color == b.coloring.color);
    CHECK(a.iterations_run == 4);
}

TEST_CASE("clique seeding keeps the output valid and pre-colors the clique") {
    Graph g = star_graph(4);
    AuxiliaryGraph h = build_aux_graph(g);
    CliqueCertificate cert = max_clique(h);
    REQUIRE(cert.size() == 4);
    Rng rng(9);
    HeuristicResult res = run_heuristic(g, 2, rng, &cert);
    CHECK(verify_strong_rainbow(g, res.coloring).ok);
    for (std::size_t i = 0; i < cert.members.size(); ++i) {
        CHECK(res.coloring.color[cert.members[i]] == static_cast<int>(i) + 1);
    }
}

TEST_CASE("abandoned iterations never worsen the incumbent") {
    Graph g = connected_er_corpus(10, 0.35, 1, 4242)[0];
    Rng rng(1);
    int prev = g.m + 1;
    for (int iters = 1; iters <= 6; ++iters) {
        Rng fresh(1);
        HeuristicResult res = run_heuristic(g, iters, fresh);
        CHECK((res.best <= prev || iters == 1));
        prev = res.best;
        CHECK(verify_strong_rainbow(g, res.coloring).ok);
    }
}

TEST_CASE("rejects nonpositive iteration counts") {
    Rng rng(2);
    Graph g = path_graph(3);
    CHECK_THROWS_AS(run_heuristic(g, 0, rng), Error);
}
