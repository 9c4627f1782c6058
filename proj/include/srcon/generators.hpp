#pragma once

#include <cstdint>
#include <string>

#include "srcon/graph.hpp"

namespace srcon {

// Seeded random instance generators. Outputs are normalized to the
// largest connected component and deterministic per (params, seed).
// Instance names follow the ER_n_p0_i / WS_n_k_p0_i / BER_n1_n2_p0_i
// scheme with p0 = 100 * p.

struct GenSpec {
    enum Family { ER, WS, BER };
    Family family = ER;
    int n = 0;       // ER/WS vertex count; BER part one
    int n2 = 0;      // BER part two
    int k = 0;       // WS neighbor count (even)
    double p = 0.0;
    std::uint64_t seed = 1;
    int index = 0;

    std::string name() const;
    Graph generate() const;
};

// G(n,p): each vertex pair adjacent with probability p.
Graph gen_er(int n, double p, std::uint64_t seed);

// Ring lattice of n vertices joined to their k nearest neighbors, then
// each edge is removed and replaced by a uniformly random non-edge with
// probability p (skipped when no non-edge is available). Edge count is
// preserved before component extraction.
Graph gen_ws(int n, int k, double p, std::uint64_t seed);

// Bipartite G(n1,n2,p): each cross-part pair adjacent with probability p.
Graph gen_ber(int n1, int n2, double p, std::uint64_t seed);

}  // namespace srcon
