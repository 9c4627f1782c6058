#include "srcon/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "srcon/errors.hpp"

namespace srcon {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

namespace {

// Keeps the largest connected component (smallest vertex id wins ties),
// relabels to dense ids preserving relative order, dedups and sorts edges.
Graph normalize(int n, std::vector<std::string> labels,
                std::set<std::pair<int, int>> edge_set) {
    if (edge_set.empty()) {
        throw EmptyGraphError("graph has no edges after normalization");
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edge_set) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<int> comp_size;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int size = 0;
        std::deque<int> q{s};
        comp[s] = ncomp;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            ++size;
            for (int w : adj[u]) {
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
        ++ncomp;
    }
    int best = 0;
    for (int c = 1; c < ncomp; ++c) {
        if (comp_size[c] > comp_size[best]) best = c;
    }

    Graph g;
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v) {
        if (comp[v] == best) {
            remap[v] = g.n++;
            g.labels.push_back(std::move(labels[v]));
        }
    }
    g.dropped_vertices = n - g.n;
    for (auto [u, v] : edge_set) {
        if (remap[u] < 0) continue;
        int a = remap[u], b = remap[v];
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.m = static_cast<int>(g.edges.size());
    g.adj.assign(g.n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    std::set<std::pair<int, int>> edge_set;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = ids.emplace(tok, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(tok);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (a[0] == '#' || a[0] == '%') continue;
        if (!(ls >> b) || (ls >> extra)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected exactly 2 tokens");
        }
        int u = intern(a), v = intern(b);
        if (u == v) continue;  // loop
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    const int n = static_cast<int>(labels.size());
    return normalize(n, std::move(labels), std::move(edge_set));
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges) {
        if (u == v) continue;
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    return normalize(n, std::move(labels), std::move(edge_set));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges) {
        out += g.labels[u];
        out += ' ';
        out += g.labels[v];
        out += '\n';
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int u) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{u};
    dist[u] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int w : g.adj[x]) {
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int x : bfs_distances(g, u)) d = std::max(d, x);
    }
    return d;
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : serialize_edge_list(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace srcon
