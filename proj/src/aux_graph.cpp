#include "srcon/aux_graph.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "srcon/errors.hpp"
#include "srcon/shortest_paths.hpp"

namespace srcon {

bool AuxiliaryGraph::adjacent(int e1, int e2) const {
    const auto& nb = adj[e1];
    return std::binary_search(nb.begin(), nb.end(), e2);
}

double AuxiliaryGraph::density() const {
    if (num_vertices < 2) return 0.0;
    double pairs = 0.5 * num_vertices * (num_vertices - 1);
    return static_cast<double>(num_edges) / pairs;
}

AuxiliaryGraph build_aux_graph(const Graph& g) {
    AuxiliaryGraph h;
    h.num_vertices = g.m;
    h.adj.assign(g.m, {});
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < g.n; ++u) {
        ShortestPathDag dag = build_dag(g, u);
        for (int v = u + 1; v < g.n; ++v) {
            SeparationRecord rec = separation(g, dag, v);
            const auto& es = rec.sep_edges;
            for (std::size_t i = 0; i < es.size(); ++i) {
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    auto key = std::make_pair(es[i], es[j]);
                    if (seen.insert(key).second) {
                        h.adj[es[i]].push_back(es[j]);
                        h.adj[es[j]].push_back(es[i]);
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

using Clock = std::chrono::steady_clock;

struct CliqueSearch {
    const AuxiliaryGraph& h;
    Clock::time_point deadline;
    bool timed_out = false;
    std::vector<int> best;
    std::vector<int> current;

    // Greedy coloring bound: partitions cand into color classes; a clique
    // can take at most one vertex per class.
    int color_bound(const std::vector<int>& cand) const {
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (int w : cls) {
                    if (h.adjacent(v, w)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        return static_cast<int>(classes.size());
    }

    void expand(std::vector<int>& cand) {
        if (Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (cand.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + color_bound(cand) <= best.size()) return;
        // Iterate a copy: cand shrinks as vertices are consumed.
        std::vector<int> local = cand;
        for (std::size_t i = 0; i < local.size() && !timed_out; ++i) {
            int v = local[i];
            if (current.size() + (local.size() - i) <= best.size()) return;
            std::vector<int> next;
            for (std::size_t j = i + 1; j < local.size(); ++j) {
                if (h.adjacent(v, local[j])) next.push_back(local[j]);
            }
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }

    // Largest clique within cand that extends `current`; used to decide
    // whether a lexicographically forced vertex still allows size target.
    bool clique_of_size_exists(std::vector<int> cand, int target) {
        if (target <= 0) return true;
        std::vector<int> saved_best = best;
        std::vector<int> saved_cur = current;
        best.assign(target - 1, -1);  // only report cliques >= target
        current.clear();
        expand(cand);
        bool found = static_cast<int>(best.size()) >= target && best[0] != -1;
        best = std::move(saved_best);
        current = std::move(saved_cur);
        return found;
    }
};

}  // namespace

CliqueCertificate max_clique(const AuxiliaryGraph& h, double time_limit_s) {
    CliqueCertificate cert;
    if (h.num_vertices == 0) throw Error("max_clique: empty auxiliary graph");
    CliqueSearch search{h};
    search.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_limit_s));
    std::vector<int> all(h.num_vertices);
    for (int v = 0; v < h.num_vertices; ++v) all[v] = v;
    search.best = {0};
    search.expand(all);
    if (search.timed_out) {
        cert.members = search.best;
        std::sort(cert.members.begin(), cert.members.end());
        cert.exact = false;
        return cert;
    }
    const int omega = static_cast<int>(search.best.size());
    // Lexicographically smallest maximum clique: commit the smallest
    // vertex that still allows a clique of the required size.
    std::vector<int> chosen;
    std::vector<int> cand = all;
    while (static_cast<int>(chosen.size()) < omega && !search.timed_out) {
        bool committed = false;
        for (int v : cand) {
            std::vector<int> next;
            for (int w : cand) {
                if (w != v && h.adjacent(v, w)) next.push_back(w);
            }
            if (search.clique_of_size_exists(next, omega - static_cast<int>(chosen.size()) - 1)) {
                chosen.push_back(v);
                cand = std::move(next);
                committed = true;
                break;
            }
        }
        if (!committed) break;  // only reachable if the deadline cut a probe
    }
    if (static_cast<int>(chosen.size()) != omega) {
        // Deadline hit during the lexmin pass; the size-omega clique from
        // the first search is still valid.
        cert.members = search.best;
        std::sort(cert.members.begin(), cert.members.end());
        cert.exact = true;
        return cert;
    }
    cert.members = std::move(chosen);
    std::sort(cert.members.begin(), cert.members.end());
    cert.exact = true;
    return cert;
}

LowerBound lower_bound(const Graph& g) {
    LowerBound out;
    out.diam = diameter(g);
    AuxiliaryGraph h = build_aux_graph(g);
    out.clique = max_clique(h);
    out.omega = out.clique.size();
    out.lb = std::max(out.diam, out.omega);
    return out;
}

bool is_geodetic(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        ShortestPathDag dag = build_dag(g, u);
        for (int v = u + 1; v < g.n; ++v) {
            if (dag.path_count[v] != 1) return false;
        }
    }
    return true;
}

namespace {

struct ColoringSearch {
    const AuxiliaryGraph& h;
    Clock::time_point deadline;
    int best;
    std::vector<int> color;
    std::vector<int> order;  // vertices by decreasing degree

    bool assign(std::size_t idx, int used) {
        if (Clock::now() > deadline) throw Error("chromatic number: time limit");
        if (used >= best) return false;
        if (idx == order.size()) {
            best = used;
            return true;
        }
        int v = order[idx];
        bool improved = false;
        for (int c = 1; c <= std::min(used + 1, best - 1); ++c) {
            bool ok = true;
            for (int w : h.adj[v]) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (assign(idx + 1, std::max(used, c))) improved = true;
            color[v] = 0;
        }
        return improved;
    }
};

}  // namespace

int chromatic_number_exact(const AuxiliaryGraph& h, double time_limit_s,
                           int size_guard) {
    if (h.num_vertices > size_guard) {
        throw SizeGuardExceeded("auxiliary graph too large for exact coloring");
    }
    if (h.num_vertices == 0) throw Error("chromatic number: empty graph");
    if (h.num_edges == 0) return 1;
    ColoringSearch search{h};
    search.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_limit_s));
    search.best = h.num_vertices + 1;
    search.color.assign(h.num_vertices, 0);
    search.order.resize(h.num_vertices);
    for (int v = 0; v < h.num_vertices; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return h.adj[a].size() > h.adj[b].size();
    });
    search.assign(0, 0);
    return search.best;
}

}  // namespace srcon
