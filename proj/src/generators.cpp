#include "srcon/generators.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include "srcon/errors.hpp"
#include "srcon/util.hpp"

namespace srcon {

namespace {

std::string format_p0(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", 100.0 * p);
    return buf;
}

Graph from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    return graph_from_edges(n, std::move(pairs));
}

}  // namespace

std::string GenSpec::name() const {
    switch (family) {
        case ER:
            return "ER_" + std::to_string(n) + "_" + format_p0(p) + "_" +
                   std::to_string(index);
        case WS:
            return "WS_" + std::to_string(n) + "_" + std::to_string(k) + "_" +
                   format_p0(p) + "_" + std::to_string(index);
        case BER:
            return "BER_" + std::to_string(n) + "_" + std::to_string(n2) + "_" +
                   format_p0(p) + "_" + std::to_string(index);
    }
    throw Error("unknown generator family");
}

Graph GenSpec::generate() const {
    switch (family) {
        case ER:
            return gen_er(n, p, seed);
        case WS:
            return gen_ws(n, k, p, seed);
        case BER:
            return gen_ber(n, n2, p, seed);
    }
    throw Error("unknown generator family");
}

Graph gen_er(int n, double p, std::uint64_t seed) {
    if (n < 2) throw Error("gen_er: n must be >= 2");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unit_real(rng) < p) pairs.emplace_back(u, v);
        }
    }
    return from_pairs(n, std::move(pairs));
}

Graph gen_ws(int n, int k, double p, std::uint64_t seed) {
    if (n < 3) throw Error("gen_ws: n must be >= 3");
    if (k < 2 || k % 2 != 0 || k >= n) throw Error("gen_ws: k must be even, 2 <= k < n");
    Rng rng(seed);
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        present[u][v] = present[v][u] = 1;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    };
    for (int u = 0; u < n; ++u) {
        for (int j = 1; j <= k / 2; ++j) add(u, (u + j) % n);
    }
    // Rewiring replaces a whole edge with a uniformly random absent pair,
    // keeping the edge count fixed.
    for (auto& [u, v] : edges) {
        if (unit_real(rng) >= p) continue;
        long long absent = static_cast<long long>(n) * (n - 1) / 2 -
                           static_cast<long long>(edges.size());
        if (absent <= 0) continue;
        present[u][v] = present[v][u] = 0;
        int a = -1, b = -1;
        do {
            a = static_cast<int>(bounded_u64(rng, n));
            b = static_cast<int>(bounded_u64(rng, n));
        } while (a == b || present[a][b] || (a == u && b == v) || (a == v && b == u));
        present[a][b] = present[b][a] = 1;
        u = std::min(a, b);
        v = std::max(a, b);
    }
    return from_pairs(n, std::move(edges));
}

Graph gen_ber(int n1, int n2, double p, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1) throw Error("gen_ber: both parts must be non-empty");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n1; ++u) {
        for (int v = 0; v < n2; ++v) {
            if (unit_real(rng) < p) pairs.emplace_back(u, n1 + v);
        }
    }
    return from_pairs(n1 + n2, std::move(pairs));
}

}  // namespace srcon
