#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "srcon/graph.hpp"
#include "srcon/util.hpp"

namespace srcon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// All-shortest-paths DAG rooted at `root`. A directed edge (v1,v2) is
// present iff v1v2 is an edge of G and dist[v1]+1 == dist[v2]; preds/succs
// hold the endpoints one layer closer to / farther from the root.
// path_count[v] is the number of distinct shortest (root,v)-paths,
// arbitrary precision (the count is not polynomially bounded).
struct ShortestPathDag {
    int root = 0;
    std::vector<int> dist;
    std::vector<std::vector<int>> preds;
    std::vector<std::vector<int>> succs;
    std::vector<BigInt> path_count;
    std::vector<std::vector<int>> layers;  // layers[d] = vertices at distance d
};

ShortestPathDag build_dag(const Graph& g, int root);

// Edges/vertices lying on every shortest (u,v)-path, plus the path count.
struct SeparationRecord {
    int u = 0;
    int v = 0;
    std::vector<int> sep_edges;     // edge indices, sorted
    std::vector<int> sep_vertices;  // vertex ids, sorted; excludes u and v
    BigInt count = 0;
};

// Backward level sweep from v toward the DAG root. Adjacent pairs bypass
// the sweep: E_sep = {uv}, V_sep = {}, count = 1. The count is accumulated
// backward (number of shortest (j,v)-paths per frontier vertex), which
// must agree with the forward dag.path_count[v].
SeparationRecord separation(const Graph& g, const ShortestPathDag& dag, int v);

// Separation records for all unordered pairs u < v, in lexicographic pair
// order (pair i*(n)-offset indexing via pair_index below).
std::vector<SeparationRecord> all_separations(const Graph& g);

// A single shortest path, u = vertices.front() .. v = vertices.back().
struct ShortestPath {
    std::vector<int> vertices;
    std::vector<int> edges;  // edge indices, length = vertices.size()-1
};

// All r_uv shortest (u,v)-paths in lexicographic order of their vertex id
// sequences. Throws PathBudgetExceeded if more than `cap` paths exist.
std::vector<ShortestPath> enumerate_shortest_paths(const Graph& g, int u, int v,
                                                   std::uint64_t cap);

// Exactly uniform sample from the shortest (root,v)-paths: walk from v
// back to the root, picking each predecessor with probability proportional
// to its path count (exact big-integer arithmetic, no floating point).
ShortestPath sample_shortest_path(const Graph& g, const ShortestPathDag& dag,
                                  int v, Rng& rng);

// Uniform BigInt in [0, n).
BigInt uniform_bigint_below(Rng& rng, const BigInt& n);

// Dense index of the unordered pair (u,v), u < v, in lexicographic order.
inline int pair_index(int n, int u, int v) {
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace srcon
