#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "srcon/errors.hpp"
#include "srcon/generators.hpp"
#include "support.hpp"

using namespace srcon;
using namespace srcon::test;

TEST_CASE("instance naming scheme") {
    GenSpec er{GenSpec::ER, 80, 0, 0, 0.032, 7, 0};
    CHECK(er.name() == "ER_80_3.2_0");
    GenSpec er2{GenSpec::ER, 100, 0, 0, 0.08, 7, 4};
    CHECK(er2.name() == "ER_100_8_4");
    GenSpec ws{GenSpec::WS, 100, 0, 10, 0.01, 7, 2};
    CHECK(ws.name() == "WS_100_10_1_2");
    GenSpec ber{GenSpec::BER, 2, 25, 0, 0.95, 7, 1};
    CHECK(ber.name() == "BER_2_25_95_1");
}

TEST_CASE("ER extremes") {
    Graph k = gen_er(6, 1.0, 1);
    CHECK(k.n == 6);
    CHECK(k.m == 15);
    CHECK_THROWS_AS(gen_er(6, 0.0, 1), EmptyGraphError);
    CHECK_THROWS_AS(gen_er(1, 0.5, 1), Error);
}

TEST_CASE("ER determinism and seed sensitivity") {
    Graph a = gen_er(20, 0.3, 42);
    Graph b = gen_er(20, 0.3, 42);
    CHECK(a.edges == b.edges);
    Graph c = gen_er(20, 0.3, 43);
    CHECK(a.edges != c.edges);  // astronomically unlikely to collide
}

TEST_CASE("ER edge count is binomial before normalization") {
    // mean C(80,2)*0.06 = 189.6, sd = sqrt(np(1-p)) ~ 13.35; average of 100
    // draws should land within 3 standard errors.
    const int trials = 100;
    double total = 0;
    int attempts = 0;
    for (int i = 0; i < trials; ++i) {
        Graph g = gen_er(80, 0.06, 9000 + i);
        total += g.m;  // normalization at this density rarely drops edges
        attempts += g.dropped_vertices;
    }
    double mean = total / trials;
    CHECK(mean > 189.6 - 3 * 13.35 / std::sqrt(trials) - 1.0);
    CHECK(mean < 189.6 + 3 * 13.35 / std::sqrt(trials) + 1.0);
}

TEST_CASE("WS p=0 is the circulant lattice") {
    Graph g = gen_ws(12, 4, 0.0, 5);
    CHECK(g.n == 12);
    CHECK(g.m == 12 * 4 / 2);
    for (int v = 0; v < g.n; ++v) CHECK(g.adj[v].size() == 4);
}

TEST_CASE("WS rewiring preserves the edge count") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
        Graph g = gen_ws(40, 6, 0.5, s);
        CHECK(g.m + 0 <= 40 * 6 / 2);
        // count includes only the surviving component; regenerate densely
        Graph dense = gen_ws(40, 10, 0.3, s);
        if (dense.dropped_vertices == 0) CHECK(dense.m == 40 * 10 / 2);
    }
}

TEST_CASE("WS rewiring rate is about p") {
    // per-edge whole replacement with p = 0.1: count how many lattice
    // edges disappeared over many seeds.
    const int n = 60, k = 6;
    int replaced = 0, total = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = gen_ws(n, k, 0.1, 100 + s);
        if (g.dropped_vertices != 0) continue;
        Graph lattice = gen_ws(n, k, 0.0, 1);
        std::set<std::pair<int, int>> have(g.edges.begin(), g.edges.end());
        for (auto e : lattice.edges) replaced += !have.count(e);
        total += lattice.m;
    }
    double rate = static_cast<double>(replaced) / total;
    CHECK(rate > 0.05);
    CHECK(rate < 0.16);
}

TEST_CASE("WS parameter validation") {
    CHECK_THROWS_AS(gen_ws(10, 3, 0.1, 1), Error);   // odd k
    CHECK_THROWS_AS(gen_ws(10, 10, 0.1, 1), Error);  // k >= n
    CHECK_THROWS_AS(gen_ws(2, 2, 0.1, 1), Error);    // n too small
}

TEST_CASE("BER is bipartite and complete at p=1") {
    Graph g = gen_ber(3, 4, 1.0, 1);
    CHECK(g.n == 7);
    CHECK(g.m == 12);
    // 2-colorable: BFS layering has no intra-layer edge
    auto d = bfs_distances(g, 0);
    for (auto [u, v] : g.edges) CHECK((d[u] + d[v]) % 2 == 1);
}

TEST_CASE("BER determinism and sparse envelope") {
    Graph a = gen_ber(2, 25, 0.95, 7);
    Graph b = gen_ber(2, 25, 0.95, 7);
    CHECK(a.edges == b.edges);
    CHECK(a.m >= 40);  // 50 potential edges at p=.95
    CHECK(a.m <= 50);
}

TEST_CASE("GenSpec::generate dispatches per family") {
    GenSpec er{GenSpec::ER, 10, 0, 0, 1.0, 3, 0};
    CHECK(er.generate().m == 45);
    GenSpec ws{GenSpec::WS, 10, 0, 4, 0.0, 3, 0};
    CHECK(ws.generate().m == 20);
    GenSpec ber{GenSpec::BER, 2, 3, 0, 1.0, 3, 0};
    CHECK(ber.generate().m == 6);
}
