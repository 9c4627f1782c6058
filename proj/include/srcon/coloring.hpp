#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srcon/graph.hpp"

namespace srcon {

// Edge coloring with colors 1..k; color[e] indexed by edge index.
// Colors used always form the contiguous set {1..k}.
struct Coloring {
    std::vector<int> color;
    int k = 0;
};

struct VerifyResult {
    bool ok = false;
    int witness_u = -1;  // pair with no rainbow shortest path (when !ok)
    int witness_v = -1;
    explicit operator bool() const { return ok; }
};

// True iff every vertex pair has at least one rainbow shortest path.
// Search per pair runs over the shortest-path DAG with color-set pruning;
// pairs are checked in decreasing distance order. Throws
// PathBudgetExceeded if a pair expands more than `node_budget` partial
// paths (verification is NP-complete in general).
VerifyResult verify_strong_rainbow(const Graph& g, const Coloring& c,
                                   std::uint64_t node_budget = 10'000'000);

// Decides whether some coloring with at most k colors strongly rainbow
// connects g. DFS over edges in fixed index order with the symmetry rule
// that a new color may only be opened as the next unused integer; a
// partial assignment is pruned as soon as some pair has no shortest path
// that can still be rainbow. Fills *out on success if non-null.
bool feasible_with_k_colors(const Graph& g, int k, Coloring* out);

// Smallest k <= k_max admitting a strong rainbow k-coloring.
// Independent oracle for desk-scale instances; intended for m <= ~14.
// Throws ExhaustedError if no coloring with <= k_max colors exists
// (cannot happen for k_max = m).
int brute_force_src(const Graph& g, int k_max);
int brute_force_src(const Graph& g);  // k_max = m

// JSON round trip. Format:
// { "colors": k, "assignment": [{"u": label, "v": label, "color": c}, ...],
//   "method": str, "graph_hash": hex }
std::string coloring_to_json(const Graph& g, const Coloring& c,
                             const std::string& method);
Coloring coloring_from_json(const Graph& g, const std::string& json_text);

}  // namespace srcon
