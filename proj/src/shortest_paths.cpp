#include "srcon/shortest_paths.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "srcon/errors.hpp"

namespace srcon {

ShortestPathDag build_dag(const Graph& g, int root) {
    ShortestPathDag dag;
    dag.root = root;
    dag.dist = bfs_distances(g, root);
    dag.preds.assign(g.n, {});
    dag.succs.assign(g.n, {});
    dag.path_count.assign(g.n, 0);
    int depth = 0;
    for (int v = 0; v < g.n; ++v) depth = std::max(depth, dag.dist[v]);
    dag.layers.assign(depth + 1, {});
    for (int v = 0; v < g.n; ++v) {
        dag.layers[dag.dist[v]].push_back(v);
        for (int w : g.adj[v]) {
            if (dag.dist[v] + 1 == dag.dist[w]) {
                dag.succs[v].push_back(w);
                dag.preds[w].push_back(v);
            }
        }
    }
    dag.path_count[root] = 1;
    for (int d = 1; d <= depth; ++d) {
        for (int v : dag.layers[d]) {
            BigInt r = 0;
            for (int w : dag.preds[v]) r += dag.path_count[w];
            dag.path_count[v] = r;
        }
    }
    return dag;
}

SeparationRecord separation(const Graph& g, const ShortestPathDag& dag, int v) {
    const int u = dag.root;
    if (v == u) throw Error("separation: v equals the DAG root");
    SeparationRecord rec;
    rec.u = std::min(u, v);
    rec.v = std::max(u, v);
    if (g.has_edge(u, v)) {
        // Adjacent pair: the unique shortest path is the edge itself.
        rec.sep_edges.push_back(g.edge_index(u, v));
        rec.count = 1;
        return rec;
    }
    // Backward level sweep from v toward u, counting shortest (j,v)-paths.
    std::map<int, BigInt> r;
    std::vector<int> frontier{v};
    r[v] = 1;
    while (!(frontier.size() == 1 && frontier[0] == u)) {
        std::vector<int> next;
        std::map<int, BigInt> rn;
        for (int j : frontier) {
            for (int w : dag.preds[j]) {
                auto [it, inserted] = rn.emplace(w, 0);
                if (inserted) next.push_back(w);
                it->second += r[j];
            }
        }
        std::sort(next.begin(), next.end());
        if (frontier.size() == 1 && next.size() == 1) {
            rec.sep_edges.push_back(g.edge_index(next[0], frontier[0]));
        }
        if (next.size() == 1 && next[0] != u) {
            rec.sep_vertices.push_back(next[0]);
        }
        frontier = std::move(next);
        r = std::move(rn);
    }
    rec.count = r[u];
    std::sort(rec.sep_edges.begin(), rec.sep_edges.end());
    std::sort(rec.sep_vertices.begin(), rec.sep_vertices.end());
    return rec;
}

std::vector<SeparationRecord> all_separations(const Graph& g) {
    std::vector<SeparationRecord> out;
    out.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    for (int u = 0; u < g.n; ++u) {
        ShortestPathDag dag = build_dag(g, u);
        for (int v = u + 1; v < g.n; ++v) out.push_back(separation(g, dag, v));
    }
    return out;
}

std::vector<ShortestPath> enumerate_shortest_paths(const Graph& g, int u, int v,
                                                   std::uint64_t cap) {
    if (u == v) throw Error("enumerate_shortest_paths: u == v");
    std::vector<int> du = bfs_distances(g, u);
    std::vector<int> dv = bfs_distances(g, v);
    const int d = du[v];
    std::vector<ShortestPath> out;
    ShortestPath cur;
    cur.vertices.push_back(u);
    // Forward DFS over vertices on some shortest (u,v)-path; neighbor
    // lists are sorted, so emission order is lexicographic.
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == v) {
            if (out.size() >= cap) {
                throw PathBudgetExceeded("shortest path count exceeds cap");
            }
            out.push_back(cur);
            return;
        }
        for (int w : g.adj[x]) {
            if (du[w] == du[x] + 1 && du[w] + dv[w] == d) {
                cur.vertices.push_back(w);
                cur.edges.push_back(g.edge_index(x, w));
                self(self, w);
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    };
    dfs(dfs, u);
    return out;
}

BigInt uniform_bigint_below(Rng& rng, const BigInt& n) {
    if (n <= 1) return 0;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt r = 0;
        for (unsigned i = 0; i < words; ++i) {
            r <<= 64;
            r |= BigInt(rng());
        }
        r >>= (words * 64 - bits);
        if (r < n) return r;
    }
}

ShortestPath sample_shortest_path(const Graph& g, const ShortestPathDag& dag,
                                  int v, Rng& rng) {
    if (v == dag.root) throw Error("sample_shortest_path: v equals the root");
    std::vector<int> rev{v};
    int cur = v;
    while (cur != dag.root) {
        const auto& preds = dag.preds[cur];
        BigInt total = 0;
        for (int w : preds) total += dag.path_count[w];
        BigInt pick = uniform_bigint_below(rng, total);
        int chosen = preds.back();
        for (int w : preds) {
            if (pick < dag.path_count[w]) {
                chosen = w;
                break;
            }
            pick -= dag.path_count[w];
        }
        rev.push_back(chosen);
        cur = chosen;
    }
    ShortestPath p;
    p.vertices.assign(rev.rbegin(), rev.rend());
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        p.edges.push_back(g.edge_index(p.vertices[i], p.vertices[i + 1]));
    }
    return p;
}

}  // namespace srcon
