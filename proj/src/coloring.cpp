#include "srcon/coloring.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>

#include "srcon/errors.hpp"
#include "srcon/shortest_paths.hpp"

namespace srcon {

namespace {

// Backward DFS from v over the predecessor lists of dag (rooted at u),
// abandoning partial paths that repeat a color. Predecessors with fewer
// shortest paths are tried first.
bool rainbow_path_exists(const Graph& g, const ShortestPathDag& dag, int v,
                         const Coloring& c, std::uint64_t budget) {
    std::vector<char> used(c.k + 1, 0);
    std::uint64_t expanded = 0;
    auto dfs = [&](auto&& self, int x) -> bool {
        if (x == dag.root) return true;
        if (++expanded > budget) {
            throw PathBudgetExceeded("rainbow verification exceeded node budget");
        }
        std::vector<int> order = dag.preds[x];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (dag.path_count[a] != dag.path_count[b]) {
                return dag.path_count[a] < dag.path_count[b];
            }
            return a < b;
        });
        for (int w : order) {
            int col = c.color[g.edge_index(w, x)];
            if (used[col]) continue;
            used[col] = 1;
            if (self(self, w)) return true;
            used[col] = 0;
        }
        return false;
    };
    return dfs(dfs, v);
}

}  // namespace

VerifyResult verify_strong_rainbow(const Graph& g, const Coloring& c,
                                   std::uint64_t node_budget) {
    if (static_cast<int>(c.color.size()) != g.m) {
        throw Error("coloring does not cover every edge");
    }
    std::vector<ShortestPathDag> dags;
    dags.reserve(g.n);
    for (int u = 0; u < g.n; ++u) dags.push_back(build_dag(g, u));

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) pairs.emplace_back(u, v);
    }
    // Longer pairs fail faster.
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
        return dags[a.first].dist[a.second] > dags[b.first].dist[b.second];
    });
    for (auto [u, v] : pairs) {
        if (!rainbow_path_exists(g, dags[u], v, c, node_budget)) {
            return {false, u, v};
        }
    }
    return {true, -1, -1};
}

namespace {

struct FeasibilitySearch {
    const Graph& g;
    int k;
    std::vector<std::vector<int>> path_edges;   // all shortest paths
    std::vector<int> path_pair;                 // path -> pair id
    std::vector<std::vector<int>> paths_of_edge;
    std::vector<int> pair_alive;
    std::vector<char> dead;
    std::vector<int> color;  // 0 = unassigned

    explicit FeasibilitySearch(const Graph& graph, int colors)
        : g(graph), k(colors) {
        int pair_id = 0;
        for (int u = 0; u < g.n; ++u) {
            for (int v = u + 1; v < g.n; ++v, ++pair_id) {
                auto paths = enumerate_shortest_paths(g, u, v, 1u << 20);
                pair_alive.push_back(static_cast<int>(paths.size()));
                for (auto& p : paths) {
                    path_edges.push_back(p.edges);
                    path_pair.push_back(pair_id);
                }
            }
        }
        paths_of_edge.assign(g.m, {});
        for (std::size_t pi = 0; pi < path_edges.size(); ++pi) {
            for (int e : path_edges[pi]) {
                paths_of_edge[e].push_back(static_cast<int>(pi));
            }
        }
        dead.assign(path_edges.size(), 0);
        color.assign(g.m, 0);
    }

    bool assign(int e, int c, std::vector<int>& killed) {
        color[e] = c;
        for (int pi : paths_of_edge[e]) {
            if (dead[pi]) continue;
            bool conflict = false;
            for (int e2 : path_edges[pi]) {
                if (e2 != e && color[e2] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) {
                dead[pi] = 1;
                killed.push_back(pi);
                if (--pair_alive[path_pair[pi]] == 0) return false;
            }
        }
        return true;
    }

    void undo(int e, const std::vector<int>& killed) {
        color[e] = 0;
        for (int pi : killed) {
            dead[pi] = 0;
            ++pair_alive[path_pair[pi]];
        }
    }

    bool dfs(int e, int used) {
        if (e == g.m) return true;
        // Symmetry rule: a new color opens only as the next unused integer.
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            std::vector<int> killed;
            if (assign(e, c, killed)) {
                if (dfs(e + 1, std::max(used, c))) return true;
            }
            undo(e, killed);
        }
        return false;
    }
};

}  // namespace

bool feasible_with_k_colors(const Graph& g, int k, Coloring* out) {
    if (k <= 0) return false;
    FeasibilitySearch search(g, k);
    if (!search.dfs(0, 0)) return false;
    if (out) {
        out->color = search.color;
        out->k = *std::max_element(search.color.begin(), search.color.end());
    }
    return true;
}

int brute_force_src(const Graph& g, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        if (feasible_with_k_colors(g, k, nullptr)) return k;
    }
    throw ExhaustedError("no strong rainbow coloring with at most " +
                         std::to_string(k_max) + " colors");
}

int brute_force_src(const Graph& g) { return brute_force_src(g, g.m); }

std::string coloring_to_json(const Graph& g, const Coloring& c,
                             const std::string& method) {
    nlohmann::json j;
    j["colors"] = c.k;
    j["method"] = method;
    j["graph_hash"] = graph_hash(g);
    auto arr = nlohmann::json::array();
    for (int e = 0; e < g.m; ++e) {
        arr.push_back({{"u", g.labels[g.edges[e].first]},
                       {"v", g.labels[g.edges[e].second]},
                       {"color", c.color[e]}});
    }
    j["assignment"] = std::move(arr);
    return j.dump(2);
}

Coloring coloring_from_json(const Graph& g, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.contains("graph_hash") && j["graph_hash"] != graph_hash(g)) {
        throw ParseError("coloring file does not match this graph (hash mismatch)");
    }
    std::map<std::string, int> by_label;
    for (int v = 0; v < g.n; ++v) by_label[g.labels[v]] = v;
    Coloring c;
    c.color.assign(g.m, 0);
    for (const auto& item : j.at("assignment")) {
        auto iu = by_label.find(item.at("u").get<std::string>());
        auto iv = by_label.find(item.at("v").get<std::string>());
        if (iu == by_label.end() || iv == by_label.end()) {
            throw ParseError("coloring references unknown vertex label");
        }
        int e = g.edge_index(iu->second, iv->second);
        if (e < 0) throw ParseError("coloring references a non-edge");
        int col = item.at("color").get<int>();
        if (col < 1) throw ParseError("colors must be positive");
        c.color[e] = col;
    }
    for (int e = 0; e < g.m; ++e) {
        if (c.color[e] == 0) throw ParseError("coloring is not total on E(G)");
        c.k = std::max(c.k, c.color[e]);
    }
    if (j.contains("colors") && j["colors"].get<int>() != c.k) {
        c.k = std::max(c.k, j["colors"].get<int>());
    }
    return c;
}

}  // namespace srcon
