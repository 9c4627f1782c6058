#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "srcon/errors.hpp"

namespace srcon::test {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph_from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return graph_from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return graph_from_edges(leaves + 1, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return graph_from_edges(n, e);
}

Graph complete_bipartite(int s, int t) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < s; ++u) {
        for (int v = 0; v < t; ++v) e.emplace_back(u, s + v);
    }
    return graph_from_edges(s + t, e);
}

Graph k4_chain(int k) {
    // K_4 number i spans vertices {2i, 2i+1, 2i+2, 2i+3}; consecutive
    // blocks share two vertices.
    std::set<std::pair<int, int>> e;
    for (int i = 0; i <= k; ++i) {
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) e.emplace(2 * i + a, 2 * i + b);
        }
    }
    return graph_from_edges(2 * k + 4,
                            std::vector<std::pair<int, int>>(e.begin(), e.end()));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return graph_from_edges(10, e);
}

Graph random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back(static_cast<int>(bounded_u64(rng, v)), v);
    }
    return graph_from_edges(n, e);
}

Graph worked_example() {
    const char* text =
        "a b\n"
        "b e\n"
        "e j\n"
        "e l\n"
        "j c\n"
        "l c\n"
        "j k\n"
        "k l\n"
        "c d\n"
        "d f\n"
        "f m\n"
        "f o\n"
        "m h\n"
        "o h\n"
        "m n\n"
        "n o\n"
        "h i\n";
    return parse_edge_list(text);
}

int worked_edge(const Graph& g, const std::string& a, const std::string& b) {
    int u = -1, v = -1;
    for (int x = 0; x < g.n; ++x) {
        if (g.labels[x] == a) u = x;
        if (g.labels[x] == b) v = x;
    }
    if (u < 0 || v < 0) throw Error("unknown label");
    return g.edge_index(u, v);
}

std::optional<Graph> load_data_graph(const std::string& filename) {
    const char* dir = std::getenv("SRCON_DATA_DIR");
    std::string path = (dir && *dir ? std::string(dir) + "/" : "data/") + filename;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::vector<Graph> connected_er_corpus(int n, double p, int count,
                                       std::uint64_t seed0) {
    std::vector<Graph> out;
    for (std::uint64_t s = seed0; static_cast<int>(out.size()) < count; ++s) {
        try {
            Graph g = gen_er(n, p, splitmix64(s));
            if (g.n == n) out.push_back(std::move(g));  // connected draw
        } catch (const EmptyGraphError&) {
        }
    }
    return out;
}

SeparationRecord oracle_separation(const Graph& g, int u, int v) {
    auto paths = enumerate_shortest_paths(g, u, v, 1u << 22);
    SeparationRecord rec;
    rec.u = u;
    rec.v = v;
    rec.count = static_cast<long long>(paths.size());
    std::set<int> edges(paths[0].edges.begin(), paths[0].edges.end());
    std::set<int> verts(paths[0].vertices.begin(), paths[0].vertices.end());
    for (std::size_t i = 1; i < paths.size(); ++i) {
        std::set<int> e2(paths[i].edges.begin(), paths[i].edges.end());
        std::set<int> v2(paths[i].vertices.begin(), paths[i].vertices.end());
        std::set<int> ei, vi;
        std::set_intersection(edges.begin(), edges.end(), e2.begin(), e2.end(),
                              std::inserter(ei, ei.begin()));
        std::set_intersection(verts.begin(), verts.end(), v2.begin(), v2.end(),
                              std::inserter(vi, vi.begin()));
        edges = std::move(ei);
        verts = std::move(vi);
    }
    verts.erase(u);
    verts.erase(v);
    rec.sep_edges.assign(edges.begin(), edges.end());
    rec.sep_vertices.assign(verts.begin(), verts.end());
    return rec;
}

AuxiliaryGraph oracle_aux_graph(const Graph& g) {
    AuxiliaryGraph h;
    h.num_vertices = g.m;
    h.adj.assign(g.m, {});
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            SeparationRecord rec = oracle_separation(g, u, v);
            for (std::size_t i = 0; i < rec.sep_edges.size(); ++i) {
                for (std::size_t j = i + 1; j < rec.sep_edges.size(); ++j) {
                    auto key = std::make_pair(rec.sep_edges[i], rec.sep_edges[j]);
                    if (seen.insert(key).second) {
                        h.adj[key.first].push_back(key.second);
                        h.adj[key.second].push_back(key.first);
                        h.witness[key] = {u, v};
                    }
                }
            }
        }
    }
    for (auto& nb : h.adj) std::sort(nb.begin(), nb.end());
    h.num_edges = static_cast<long long>(seen.size());
    return h;
}

namespace {

void extend_clique(const AuxiliaryGraph& h, std::vector<int>& cur,
                   const std::vector<int>& cand, int& best) {
    best = std::max(best, static_cast<int>(cur.size()));
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (static_cast<int>(cur.size() + cand.size() - i) <= best) return;
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (h.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
        }
        cur.push_back(cand[i]);
        extend_clique(h, cur, next, best);
        cur.pop_back();
    }
}

}  // namespace

int oracle_max_clique_size(const AuxiliaryGraph& h) {
    std::vector<int> all(h.num_vertices), cur;
    for (int v = 0; v < h.num_vertices; ++v) all[v] = v;
    int best = 0;
    extend_clique(h, cur, all, best);
    return std::max(best, h.num_vertices > 0 ? 1 : 0);
}

const MipBackend* shared_backend() {
    static std::optional<ExternalBackend> backend = [] {
        std::optional<ExternalBackend> b;
        if (auto cmd = default_solver_command()) b.emplace(*cmd);
        return b;
    }();
    return backend ? &*backend : nullptr;
}

}  // namespace srcon::test
