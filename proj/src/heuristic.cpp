#include "srcon/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "srcon/errors.hpp"
#include "srcon/shortest_paths.hpp"

namespace srcon {

int default_max_iter(const Graph& g) {
    return (g.n + 4) / 5;  // ceil(n/5)
}

HeuristicResult run_heuristic(const Graph& g, int max_iter, Rng& rng,
                              const CliqueCertificate* seed_clique) {
    if (max_iter < 1) throw Error("run_heuristic: max_iter must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<ShortestPathDag> dags;
    dags.reserve(g.n);
    for (int u = 0; u < g.n; ++u) dags.push_back(build_dag(g, u));

    const int seed_colors = seed_clique ? seed_clique->size() : 0;
    HeuristicResult result;
    int best = g.m + 1;

    std::vector<std::vector<int>> paths_of_edge(g.m);
    std::vector<std::vector<int>> fixed_paths;  // edge lists, one per pair
    std::vector<int> f(g.m);
    std::vector<int> edge_order;
    std::vector<char> forbidden;
    std::vector<int> allowed;

    for (int iter = 0; iter < max_iter; ++iter) {
        // Fix one uniformly random shortest path per pair.
        fixed_paths.clear();
        for (auto& v : paths_of_edge) v.clear();
        for (int u = 0; u < g.n; ++u) {
            for (int v = u + 1; v < g.n; ++v) {
                ShortestPath p = sample_shortest_path(g, dags[u], v, rng);
                int pid = static_cast<int>(fixed_paths.size());
                for (int e : p.edges) paths_of_edge[e].push_back(pid);
                fixed_paths.push_back(std::move(p.edges));
            }
        }

        std::fill(f.begin(), f.end(), 0);
        int k = seed_colors;
        if (seed_clique) {
            int next = 1;
            for (int e : seed_clique->members) f[e] = next++;
        }
        edge_order.clear();
        for (int e = 0; e < g.m; ++e) {
            if (f[e] == 0) edge_order.push_back(e);
        }
        shuffle_vec(edge_order, rng);

        bool abandoned = false;
        for (int e : edge_order) {
            // Colors already used on a fixed path through e are off-limits.
            forbidden.assign(k + 1, 0);
            int available = k;
            for (int pid : paths_of_edge[e]) {
                for (int e2 : fixed_paths[pid]) {
                    int c = f[e2];
                    if (c != 0 && !forbidden[c]) {
                        forbidden[c] = 1;
                        --available;
                    }
                }
                if (available == 0) break;
            }
            if (available > 0) {
                allowed.clear();
                for (int c = 1; c <= k; ++c) {
                    if (!forbidden[c]) allowed.push_back(c);
                }
                f[e] = allowed[bounded_u64(rng, allowed.size())];
            } else {
                ++k;
                if (k >= best) {
                    abandoned = true;
                    break;
                }
                f[e] = k;
            }
        }
        if (!abandoned && k < best) {
            best = k;
            result.coloring.color = f;
            result.coloring.k = k;
        }
        result.iterations_run = iter + 1;
    }

    result.best = best;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace srcon
