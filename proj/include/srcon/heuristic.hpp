#pragma once

#include "srcon/aux_graph.hpp"
#include "srcon/coloring.hpp"
#include "srcon/graph.hpp"
#include "srcon/util.hpp"

namespace srcon {

struct HeuristicResult {
    Coloring coloring;
    int best = 0;            // = coloring.k
    int iterations_run = 0;
    double seconds = 0.0;
};

// Fast random strong rainbow coloring heuristic. Per iteration: fix one
// uniformly random shortest path per vertex pair, then color edges in
// random order, reusing a random already-open color whenever no fixed
// path through the edge forbids it and opening a new color otherwise.
// An iteration is abandoned as soon as its color count reaches the
// incumbent best. The returned coloring always strongly rainbow connects
// g (every fixed path of the winning iteration is rainbow).
//
// If seed_clique is given, its edges are pre-colored with distinct colors
// 1..|U| before the edge loop.
HeuristicResult run_heuristic(const Graph& g, int max_iter, Rng& rng,
                              const CliqueCertificate* seed_clique = nullptr);

// Default number of iterations, ceil(n/5).
int default_max_iter(const Graph& g);

}  // namespace srcon
