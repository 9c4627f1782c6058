#pragma once

#include <string>
#include <utility>
#include <vector>

namespace srcon {

// Simple undirected connected graph with canonical indexing.
//
// Vertices are dense ids 0..n-1 (original input labels are retained for
// output). Edges are stored as (min,max) pairs sorted lexicographically;
// the position of an edge in `edges` is its edge index, used everywhere
// downstream (auxiliary graph vertices, IP variables, colorings).
struct Graph {
    int n = 0;
    int m = 0;
    std::vector<std::string> labels;           // size n
    std::vector<std::pair<int, int>> edges;    // canonical, sorted
    std::vector<std::vector<int>> adj;         // sorted neighbor lists
    int dropped_vertices = 0;                  // removed as smaller components

    bool has_edge(int u, int v) const;
    // Index of edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    const std::string& label(int v) const { return labels[v]; }
};

// Parses whitespace-separated "u v" token pairs, one edge per line.
// Lines starting with '#' or '%' are ignored. Labels are arbitrary strings
// mapped to dense ids in first-appearance order. Loops are dropped,
// parallel edges merged, directions ignored. If the input is disconnected,
// only the largest component is kept (ties broken by smallest vertex id)
// and dropped_vertices records how many vertices were discarded.
Graph parse_edge_list(const std::string& text);

// Builds a normalized graph from integer edge pairs (labels become the
// decimal ids). Same normalization as parse_edge_list.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// One "u v" line per edge in canonical order, using original labels.
std::string serialize_edge_list(const Graph& g);

// Exact hop distances from u; all finite since the graph is connected.
std::vector<int> bfs_distances(const Graph& g, int u);

int diameter(const Graph& g);

// FNV-1a hash of the canonical serialization, as lowercase hex.
std::string graph_hash(const Graph& g);

}  // namespace srcon
