#pragma once

#include <map>
#include <utility>
#include <vector>

#include "srcon/graph.hpp"

namespace srcon {

// Auxiliary graph on the edge set of G: two edges are adjacent iff some
// vertex pair is separated by both. Every H-edge stores one witness pair.
struct AuxiliaryGraph {
    int num_vertices = 0;  // = m of the source graph
    long long num_edges = 0;
    std::vector<std::vector<int>> adj;  // sorted, over edge indices
    std::map<std::pair<int, int>, std::pair<int, int>> witness;  // H-edge -> (v1,v2)

    bool adjacent(int e1, int e2) const;
    double density() const;  // |E_H| / C(m,2), in [0,1]
};

AuxiliaryGraph build_aux_graph(const Graph& g);

struct CliqueCertificate {
    std::vector<int> members;  // edge indices, sorted ascending
    bool exact = true;         // false when the time limit cut the search
    int size() const { return static_cast<int>(members.size()); }
};

// Exact maximum clique by branch and bound with greedy-coloring upper
// bounds. Among maximum cliques, returns the lexicographically smallest
// member set. If the time limit is hit, returns the best clique found
// with exact = false (still a valid lower bound).
CliqueCertificate max_clique(const AuxiliaryGraph& h, double time_limit_s = 60.0);

struct LowerBound {
    int lb = 1;
    int diam = 0;
    int omega = 1;  // clique number of the auxiliary graph
    CliqueCertificate clique;
};

// max(diam(G), omega(H(G))), with both components reported.
LowerBound lower_bound(const Graph& g);

// True iff every vertex pair has a unique shortest path.
bool is_geodetic(const Graph& g);

// Exact chromatic number of H by branch-and-bound vertex coloring.
// Guarded: throws SizeGuardExceeded when H has more than `size_guard`
// vertices, and Error on time limit. Opt-in feature, never on the
// default solve path.
int chromatic_number_exact(const AuxiliaryGraph& h, double time_limit_s = 60.0,
                           int size_guard = 128);

}  // namespace srcon
