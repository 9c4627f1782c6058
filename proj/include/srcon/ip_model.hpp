#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srcon/aux_graph.hpp"
#include "srcon/coloring.hpp"
#include "srcon/graph.hpp"
#include "srcon/heuristic.hpp"
#include "srcon/mip_backend.hpp"
#include "srcon/shortest_paths.hpp"
#include "srcon/util.hpp"

namespace srcon {

// Pair retention under the separating-vertex implication: a pair (a,b) is
// eliminated iff some retained pair (v1,v2) has a separating vertex u with
// {a,b} = {v1,u} or {u,v2}. Pairs are processed in decreasing distance
// order so every elimination is witnessed by a retained pair.
struct EliminationResult {
    std::vector<std::pair<int, int>> retained_pairs;  // u < v, lexicographic
    long long pairs_total = 0;
    BigInt paths_total = 0;     // sum of r_uv over all pairs
    BigInt paths_retained = 0;  // sum over retained pairs
};

EliminationResult compute_retained_pairs(const Graph& g,
                                         const std::vector<SeparationRecord>& seps);
EliminationResult all_pairs_retained(const Graph& g,
                                     const std::vector<SeparationRecord>& seps);

struct ModelOptions {
    bool eliminate = true;
    bool symmetry = true;
    const CliqueCertificate* clique_fix = nullptr;
    std::vector<std::vector<int>> clique_cuts;  // cliques in H, edge indices
    bool feasibility_only = false;              // constant-zero objective
    std::uint64_t path_budget = 5'000'000;      // total path-edge incidences
};

// IP-1 instance plus the bookkeeping needed to map solutions back.
struct IpModel {
    NeutralModel model;
    int K0 = 0;
    std::vector<std::pair<int, int>> retained_pairs;
    std::vector<ShortestPath> paths;            // y-variable order
    std::vector<std::pair<int, int>> path_pair; // start index/count per pair
    std::vector<int> x_var;                     // e*K0 + (k-1) -> var index
    std::vector<int> y_var;                     // path id -> var index
    std::vector<int> z_var;                     // k-1 -> var index
    BigInt paths_total = 0;
    BigInt paths_retained = 0;
};

IpModel build_model(const Graph& g, int K0, const ModelOptions& opts);

// Coloring from the x block of a feasible assignment.
Coloring extract_coloring(const Graph& g, const IpModel& ip,
                          const std::vector<int>& values);

// Full variable assignment representing `c`, with one rainbow fixed path
// per retained pair selected for the y block. Used to translate
// exhaustive-search witnesses into the model's variable space.
std::vector<int> coloring_to_assignment(const Graph& g, const IpModel& ip,
                                        const Coloring& c);

// Permutes colors so clique member i carries color i+1 (any valid strong
// rainbow coloring gives clique edges pairwise distinct colors, so the
// permutation always exists).
Coloring align_with_fixing(const Coloring& c, const CliqueCertificate& cert);

struct SolveRound {
    int K0 = 0;
    std::string status;
    double seconds = 0.0;
};

struct SolveReport {
    enum Outcome { Solved, Timeout, Failed };
    Outcome outcome = Failed;
    std::string method;    // naive | enhanced | bottom_up
    int src = -1;          // valid when outcome == Solved
    int lb = -1;           // best bounds otherwise; ub = -1 renders as "-"
    int ub = -1;
    Coloring coloring;
    bool has_coloring = false;
    int init_lb = -1;
    int diam = -1;
    int omega = -1;
    int heur_ub = -1;
    double heur_seconds = 0.0;
    double build_seconds = 0.0;
    double solve_seconds = 0.0;
    double total_seconds = 0.0;  // heuristic included for naive/enhanced only
    std::vector<SolveRound> rounds;
    BigInt paths_total = 0;
    BigInt paths_retained = 0;
    std::string message;
};

struct SolveOptions {
    bool eliminate = true;       // ignored by naive mode
    bool clique_fix = true;      // ignored by naive mode
    bool symmetry = true;
    bool clique_cuts = false;
    int clique_cut_cap = 50;     // max maximal cliques emitted as cuts
    bool zk_objective_bottom_up = false;  // keep sum z_k in bottom-up rounds
    double time_limit_s = 3600.0;
    int max_iter = 0;            // heuristic iterations; 0 = ceil(n/5)
    std::uint64_t seed = 1;
    int ub_override = 0;         // skip the heuristic when > 0
    std::uint64_t path_budget = 5'000'000;
    int exhaustive_guard = 14;   // used when backend == nullptr
};

// Direct solve: K0 from the heuristic upper bound (or override), model
// built per `naive` (no enhancements) / enhanced, objective sum z_k.
// backend == nullptr falls back to the built-in exhaustive search, which
// also yields the optimum by bottom-up feasibility probing.
SolveReport solve_direct(const Graph& g, const MipBackend* backend, bool naive,
                         const SolveOptions& opts);

// Bottom-up: K0 starts at max(diam, omega'); each round is a feasibility
// problem; the first feasible K0 is src(G). No heuristic run.
SolveReport solve_bottom_up(const Graph& g, const MipBackend* backend,
                            const SolveOptions& opts);

}  // namespace srcon
