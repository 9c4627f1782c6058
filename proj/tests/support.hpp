#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srcon/aux_graph.hpp"
#include "srcon/generators.hpp"
#include "srcon/graph.hpp"
#include "srcon/ip_model.hpp"
#include "srcon/mip_backend.hpp"
#include "srcon/shortest_paths.hpp"
#include "srcon/util.hpp"

namespace srcon::test {

// --- fixture builders -------------------------------------------------

Graph path_graph(int n);                     // n vertices, n-1 edges
Graph cycle_graph(int n);
Graph star_graph(int leaves);                // K_{1,leaves}
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph k4_chain(int k);                       // k+1 K_4s glued on shared pairs
Graph petersen_graph();
Graph random_tree(int n, Rng& rng);          // uniform Pruefer-free attach

// 14-vertex graph with the structure of the worked auxiliary-graph
// example: chain a-b-e / c-d-f / h-i joined through two 2-path diamonds
// (via j,l and m,o), with k attached to j,l and n attached to m,o. The
// edges ab, be, cd, df, hi separate the pair (a,i) and hence form a
// 5-clique in H; jk, kl, mn, no separate nothing beyond their own
// endpoints and are isolated in H.
Graph worked_example();
int worked_edge(const Graph& g, const std::string& a, const std::string& b);

// Reads a graph shipped under the data directory (SRCON_DATA_DIR).
std::optional<Graph> load_data_graph(const std::string& filename);

// Connected seeded ER instances; skips disconnected draws by advancing
// the seed until `count` graphs with the full vertex count are produced.
std::vector<Graph> connected_er_corpus(int n, double p, int count,
                                       std::uint64_t seed0);

// --- independent oracles ----------------------------------------------

// Separation data recomputed from scratch by full path enumeration.
SeparationRecord oracle_separation(const Graph& g, int u, int v);

// Auxiliary graph built purely from enumeration-based separation sets.
AuxiliaryGraph oracle_aux_graph(const Graph& g);

// Exhaustive maximum clique of H by recursive extension (small H only).
int oracle_max_clique_size(const AuxiliaryGraph& h);

// --- solver plumbing ---------------------------------------------------

// Shared external backend (bundled bridge / SRC_SOLVER_CMD), or nullptr
// if no solver is available.
const MipBackend* shared_backend();

}  // namespace srcon::test
