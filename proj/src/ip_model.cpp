#include "srcon/ip_model.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "srcon/errors.hpp"

namespace srcon {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> dist(g.n);
    for (int u = 0; u < g.n; ++u) dist[u] = bfs_distances(g, u);
    return dist;
}

}  // namespace

EliminationResult compute_retained_pairs(const Graph& g,
                                         const std::vector<SeparationRecord>& seps) {
    EliminationResult out;
    const auto dist = distance_matrix(g);
    out.pairs_total = static_cast<long long>(g.n) * (g.n - 1) / 2;
    for (const auto& rec : seps) out.paths_total += rec.count;

    std::vector<int> order(seps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return dist[seps[a].u][seps[a].v] > dist[seps[b].u][seps[b].v];
    });

    // Decreasing-distance sweep: an elimination is always witnessed by a
    // pair already decided as retained, so the implication chain is sound.
    std::vector<char> eliminated(seps.size(), 0);
    for (int idx : order) {
        if (eliminated[idx]) continue;
        const auto& rec = seps[idx];
        for (int u : rec.sep_vertices) {
            int a = std::min(rec.u, u), b = std::max(rec.u, u);
            eliminated[pair_index(g.n, a, b)] = 1;
            a = std::min(u, rec.v), b = std::max(u, rec.v);
            eliminated[pair_index(g.n, a, b)] = 1;
        }
    }
    for (std::size_t i = 0; i < seps.size(); ++i) {
        if (!eliminated[i]) {
            out.retained_pairs.emplace_back(seps[i].u, seps[i].v);
            out.paths_retained += seps[i].count;
        }
    }
    return out;
}

EliminationResult all_pairs_retained(const Graph& g,
                                     const std::vector<SeparationRecord>& seps) {
    EliminationResult out;
    out.pairs_total = static_cast<long long>(g.n) * (g.n - 1) / 2;
    for (const auto& rec : seps) {
        out.paths_total += rec.count;
        out.retained_pairs.emplace_back(rec.u, rec.v);
    }
    out.paths_retained = out.paths_total;
    return out;
}

IpModel build_model(const Graph& g, int K0, const ModelOptions& opts) {
    if (K0 < 1) throw Error("build_model: K0 must be >= 1");
    IpModel ip;
    ip.K0 = K0;

    auto seps = all_separations(g);
    EliminationResult elim = opts.eliminate ? compute_retained_pairs(g, seps)
                                            : all_pairs_retained(g, seps);
    ip.retained_pairs = elim.retained_pairs;
    ip.paths_total = elim.paths_total;
    ip.paths_retained = elim.paths_retained;

    std::uint64_t incidences = 0;
    for (auto [u, v] : ip.retained_pairs) {
        auto paths = enumerate_shortest_paths(g, u, v, opts.path_budget);
        ip.path_pair.emplace_back(static_cast<int>(ip.paths.size()),
                                  static_cast<int>(paths.size()));
        for (auto& p : paths) {
            incidences += p.edges.size();
            if (incidences > opts.path_budget) {
                throw PathBudgetExceeded("model path budget exceeded");
            }
            ip.paths.push_back(std::move(p));
        }
    }

    NeutralModel& model = ip.model;
    ip.x_var.assign(static_cast<std::size_t>(g.m) * K0, -1);
    for (int e = 0; e < g.m; ++e) {
        for (int k = 1; k <= K0; ++k) {
            ip.x_var[e * K0 + (k - 1)] = model.add_var(
                "x_e" + std::to_string(e) + "_k" + std::to_string(k));
        }
    }
    ip.y_var.resize(ip.paths.size());
    for (std::size_t p = 0; p < ip.paths.size(); ++p) {
        ip.y_var[p] = model.add_var("y_p" + std::to_string(p));
    }
    ip.z_var.resize(K0);
    for (int k = 1; k <= K0; ++k) {
        ip.z_var[k - 1] = model.add_var("z_k" + std::to_string(k));
    }

    if (!opts.feasibility_only) {
        for (int k = 1; k <= K0; ++k) model.objective.emplace_back(ip.z_var[k - 1], 1);
    }

    // (b) each edge gets exactly one color
    for (int e = 0; e < g.m; ++e) {
        LinearRow row;
        row.name = "assign_e" + std::to_string(e);
        for (int k = 1; k <= K0; ++k) row.terms.emplace_back(ip.x_var[e * K0 + k - 1], 1);
        row.sense = 'E';
        row.rhs = 1;
        model.add_row(std::move(row));
    }
    // (c) a rainbow path uses each color at most once
    for (std::size_t p = 0; p < ip.paths.size(); ++p) {
        const auto& edges = ip.paths[p].edges;
        const long long len = static_cast<long long>(edges.size());
        for (int k = 1; k <= K0; ++k) {
            LinearRow row;
            row.name = "path_p" + std::to_string(p) + "_k" + std::to_string(k);
            for (int e : edges) row.terms.emplace_back(ip.x_var[e * K0 + k - 1], 1);
            row.terms.emplace_back(ip.y_var[p], len - 1);
            row.sense = 'L';
            row.rhs = len;
            model.add_row(std::move(row));
        }
    }
    // (d) every retained pair keeps one rainbow shortest path
    for (std::size_t i = 0; i < ip.retained_pairs.size(); ++i) {
        auto [u, v] = ip.retained_pairs[i];
        auto [start, count] = ip.path_pair[i];
        LinearRow row;
        row.name = "cover_u" + std::to_string(u) + "_v" + std::to_string(v);
        for (int p = start; p < start + count; ++p) row.terms.emplace_back(ip.y_var[p], 1);
        row.sense = 'G';
        row.rhs = 1;
        model.add_row(std::move(row));
    }
    // (e) used colors are counted
    for (int e = 0; e < g.m; ++e) {
        for (int k = 1; k <= K0; ++k) {
            LinearRow row;
            row.name = "link_e" + std::to_string(e) + "_k" + std::to_string(k);
            row.terms.emplace_back(ip.x_var[e * K0 + k - 1], 1);
            row.terms.emplace_back(ip.z_var[k - 1], -1);
            row.sense = 'L';
            row.rhs = 0;
            model.add_row(std::move(row));
        }
    }
    // (f) symmetry breaking: colors open in order
    if (opts.symmetry) {
        for (int k = 1; k < K0; ++k) {
            LinearRow row;
            row.name = "sym_k" + std::to_string(k);
            row.terms.emplace_back(ip.z_var[k], 1);       // z_{k+1}
            row.terms.emplace_back(ip.z_var[k - 1], -1);  // z_k
            row.sense = 'L';
            row.rhs = 0;
            model.add_row(std::move(row));
        }
    }
    // clique fixing: edge i of the certificate gets color i
    if (opts.clique_fix && opts.clique_fix->size() > 0) {
        const auto& members = opts.clique_fix->members;
        if (static_cast<int>(members.size()) > K0) {
            throw Error("clique fixing larger than the color budget");
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            int e = members[i];
            for (int k = 1; k <= K0; ++k) {
                model.fix(ip.x_var[e * K0 + k - 1],
                          k == static_cast<int>(i) + 1 ? 1 : 0);
            }
            model.fix(ip.z_var[i], 1);
        }
    }
    // optional clique cuts
    for (std::size_t c = 0; c < opts.clique_cuts.size(); ++c) {
        for (int k = 1; k <= K0; ++k) {
            LinearRow row;
            row.name = "cut" + std::to_string(c) + "_k" + std::to_string(k);
            for (int e : opts.clique_cuts[c]) {
                row.terms.emplace_back(ip.x_var[e * K0 + k - 1], 1);
            }
            row.sense = 'L';
            row.rhs = 1;
            model.add_row(std::move(row));
        }
    }
    return ip;
}

Coloring extract_coloring(const Graph& g, const IpModel& ip,
                          const std::vector<int>& values) {
    std::vector<int> raw(g.m, 0);
    for (int e = 0; e < g.m; ++e) {
        for (int k = 1; k <= ip.K0; ++k) {
            if (values[ip.x_var[e * ip.K0 + k - 1]] == 1) {
                raw[e] = k;
                break;
            }
        }
        if (raw[e] == 0) throw Error("assignment leaves an edge uncolored");
    }
    // Renumber to a contiguous 1..k palette.
    std::vector<int> used = raw;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    Coloring c;
    c.color.resize(g.m);
    for (int e = 0; e < g.m; ++e) {
        c.color[e] = static_cast<int>(
            std::lower_bound(used.begin(), used.end(), raw[e]) - used.begin() + 1);
    }
    c.k = static_cast<int>(used.size());
    return c;
}

std::vector<int> coloring_to_assignment(const Graph& g, const IpModel& ip,
                                        const Coloring& c) {
    if (c.k > ip.K0) throw Error("coloring uses more colors than the budget");
    std::vector<int> values(ip.model.var_names.size(), 0);
    for (int e = 0; e < g.m; ++e) values[ip.x_var[e * ip.K0 + c.color[e] - 1]] = 1;
    for (int k = 1; k <= c.k; ++k) values[ip.z_var[k - 1]] = 1;
    for (std::size_t i = 0; i < ip.retained_pairs.size(); ++i) {
        auto [start, count] = ip.path_pair[i];
        int chosen = -1;
        for (int p = start; p < start + count; ++p) {
            const auto& edges = ip.paths[p].edges;
            std::vector<char> seen(c.k + 1, 0);
            bool rainbow = true;
            for (int e : edges) {
                if (seen[c.color[e]]) {
                    rainbow = false;
                    break;
                }
                seen[c.color[e]] = 1;
            }
            if (rainbow) {
                chosen = p;
                break;
            }
        }
        if (chosen < 0) throw Error("no rainbow path for a retained pair");
        values[ip.y_var[chosen]] = 1;
    }
    return values;
}

Coloring align_with_fixing(const Coloring& c, const CliqueCertificate& cert) {
    std::vector<int> perm(c.k + 1, 0);
    std::vector<char> target_taken(c.k + 1, 0);
    for (std::size_t i = 0; i < cert.members.size(); ++i) {
        int old_color = c.color[cert.members[i]];
        int target = static_cast<int>(i) + 1;
        if (perm[old_color] != 0 && perm[old_color] != target) {
            throw Error("clique edges share a color in a valid coloring");
        }
        perm[old_color] = target;
        target_taken[target] = 1;
    }
    int next = 1;
    for (int col = 1; col <= c.k; ++col) {
        if (perm[col] != 0) continue;
        while (target_taken[next]) ++next;
        perm[col] = next;
        target_taken[next] = 1;
    }
    Coloring out;
    out.k = c.k;
    out.color.resize(c.color.size());
    for (std::size_t e = 0; e < c.color.size(); ++e) out.color[e] = perm[c.color[e]];
    return out;
}

namespace {

// Enumerates maximal cliques of H (Bron-Kerbosch with pivoting), largest
// first, capped.
void bron_kerbosch(const AuxiliaryGraph& h, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (p.empty() && x.empty()) {
        if (r.size() >= 2) out.push_back(r);
        return;
    }
    int pivot = -1;
    std::size_t best_cover = 0;
    for (int cand : p) {
        std::size_t cover = 0;
        for (int w : p) {
            if (h.adjacent(cand, w)) ++cover;
        }
        if (pivot < 0 || cover > best_cover) {
            pivot = cand;
            best_cover = cover;
        }
    }
    std::vector<int> branch;
    for (int v : p) {
        if (pivot < 0 || !h.adjacent(pivot, v)) branch.push_back(v);
    }
    for (int v : branch) {
        std::vector<int> np, nx;
        for (int w : p) {
            if (h.adjacent(v, w)) np.push_back(w);
        }
        for (int w : x) {
            if (h.adjacent(v, w)) nx.push_back(w);
        }
        r.push_back(v);
        bron_kerbosch(h, r, std::move(np), std::move(nx), out, cap);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

std::vector<std::vector<int>> clique_cut_set(const AuxiliaryGraph& h,
                                             const CliqueCertificate& max_cert,
                                             std::size_t cap) {
    std::vector<std::vector<int>> cuts;
    if (max_cert.size() >= 2) cuts.push_back(max_cert.members);
    std::vector<int> r, p(h.num_vertices), x;
    for (int v = 0; v < h.num_vertices; ++v) p[v] = v;
    std::vector<std::vector<int>> maximal;
    bron_kerbosch(h, r, std::move(p), std::move(x), maximal, cap);
    for (auto& clique : maximal) {
        std::sort(clique.begin(), clique.end());
        if (cuts.size() >= cap) break;
        if (clique != max_cert.members) cuts.push_back(std::move(clique));
    }
    return cuts;
}

struct Prepared {
    LowerBound bound;
    bool have_bound = false;
    std::vector<std::vector<int>> cuts;
};

Prepared prepare_enhancements(const Graph& g, const SolveOptions& opts,
                              bool need_bound) {
    Prepared prep;
    if (need_bound || opts.clique_cuts) {
        prep.bound.diam = diameter(g);
        AuxiliaryGraph h = build_aux_graph(g);
        prep.bound.clique = max_clique(h);
        prep.bound.omega = prep.bound.clique.size();
        prep.bound.lb = std::max(prep.bound.diam, prep.bound.omega);
        prep.have_bound = true;
        if (opts.clique_cuts) {
            prep.cuts = clique_cut_set(h, prep.bound.clique,
                                       static_cast<std::size_t>(opts.clique_cut_cap));
        }
    }
    return prep;
}

// Exhaustive fallback shared by all methods: probe K upward.
SolveReport exhaustive_probe(const Graph& g, int k_start, const char* method,
                             const SolveOptions& opts, Clock::time_point t0) {
    SolveReport report;
    report.method = method;
    for (int k = std::max(1, k_start);; ++k) {
        auto round0 = Clock::now();
        ExhaustiveResult res = solve_exhaustive(g, k, opts.exhaustive_guard);
        report.rounds.push_back({k, res.feasible ? "feasible" : "infeasible",
                                 seconds_since(round0)});
        if (res.feasible) {
            report.outcome = SolveReport::Solved;
            report.src = report.lb = report.ub = res.coloring.k;
            report.coloring = std::move(res.coloring);
            report.has_coloring = true;
            break;
        }
    }
    report.solve_seconds = seconds_since(t0);
    return report;
}

}  // namespace

SolveReport solve_direct(const Graph& g, const MipBackend* backend, bool naive,
                         const SolveOptions& opts) {
    const auto t0 = Clock::now();
    SolveReport report;
    report.method = naive ? "naive" : "enhanced";

    Prepared prep = prepare_enhancements(g, opts, !naive && opts.clique_fix);
    if (prep.have_bound) {
        report.init_lb = prep.bound.lb;
        report.diam = prep.bound.diam;
        report.omega = prep.bound.omega;
    }

    int K0 = opts.ub_override;
    if (K0 <= 0) {
        Rng rng(opts.seed);
        int max_iter = opts.max_iter > 0 ? opts.max_iter : default_max_iter(g);
        HeuristicResult heur = run_heuristic(g, max_iter, rng);
        report.heur_ub = heur.best;
        report.heur_seconds = heur.seconds;
        K0 = heur.best;
    }

    if (!backend) {
        SolveReport fallback = exhaustive_probe(g, 1, report.method.c_str(), opts, t0);
        fallback.init_lb = report.init_lb;
        fallback.diam = report.diam;
        fallback.omega = report.omega;
        fallback.heur_ub = report.heur_ub;
        fallback.heur_seconds = report.heur_seconds;
        fallback.total_seconds = seconds_since(t0);
        return fallback;
    }

    ModelOptions mopts;
    mopts.eliminate = naive ? false : opts.eliminate;
    mopts.symmetry = opts.symmetry;
    mopts.path_budget = opts.path_budget;
    if (!naive && opts.clique_fix && prep.have_bound && prep.bound.clique.size() > 0) {
        mopts.clique_fix = &prep.bound.clique;
    }
    if (!naive) mopts.clique_cuts = prep.cuts;

    auto build0 = Clock::now();
    IpModel ip = build_model(g, K0, mopts);
    report.build_seconds = seconds_since(build0);
    report.paths_total = ip.paths_total;
    report.paths_retained = ip.paths_retained;

    double remaining = opts.time_limit_s - seconds_since(t0);
    if (remaining < 1.0) remaining = 1.0;
    auto solve0 = Clock::now();
    SolveStatus status = backend->solve(ip.model, remaining);
    report.solve_seconds = seconds_since(solve0);
    report.rounds.push_back({K0,
                             status.kind == SolveStatus::Optimal      ? "optimal"
                             : status.kind == SolveStatus::Feasible   ? "feasible"
                             : status.kind == SolveStatus::Infeasible ? "infeasible"
                             : status.kind == SolveStatus::TimeLimit  ? "timelimit"
                                                                      : "error",
                             report.solve_seconds});

    switch (status.kind) {
        case SolveStatus::Optimal: {
            report.src = static_cast<int>(status.objective);
            report.lb = report.ub = report.src;
            report.coloring = extract_coloring(g, ip, status.values);
            report.has_coloring = true;
            if (!verify_strong_rainbow(g, report.coloring).ok) {
                report.outcome = SolveReport::Failed;
                report.message = "optimal solution failed rainbow verification";
                break;
            }
            report.outcome = SolveReport::Solved;
            break;
        }
        case SolveStatus::TimeLimit: {
            report.outcome = SolveReport::Timeout;
            report.lb = static_cast<int>(std::ceil(status.best_bound - 1e-6));
            report.ub = status.has_values ? static_cast<int>(status.objective)
                                          : report.heur_ub;
            break;
        }
        case SolveStatus::Infeasible: {
            report.outcome = SolveReport::Failed;
            report.message = "model infeasible at K0 = heuristic bound";
            break;
        }
        default: {
            report.outcome = SolveReport::Failed;
            report.message = status.message.empty() ? "backend error" : status.message;
            break;
        }
    }
    report.total_seconds = seconds_since(t0);
    return report;
}

SolveReport solve_bottom_up(const Graph& g, const MipBackend* backend,
                            const SolveOptions& opts) {
    const auto t0 = Clock::now();
    SolveReport report;
    report.method = "bottom_up";

    Prepared prep = prepare_enhancements(g, opts, true);
    report.init_lb = prep.bound.lb;
    report.diam = prep.bound.diam;
    report.omega = prep.bound.omega;

    if (!backend) {
        SolveReport fallback =
            exhaustive_probe(g, prep.bound.lb, "bottom_up", opts, t0);
        fallback.init_lb = report.init_lb;
        fallback.diam = report.diam;
        fallback.omega = report.omega;
        fallback.total_seconds = seconds_since(t0);
        return fallback;
    }

    ModelOptions mopts;
    mopts.eliminate = opts.eliminate;
    mopts.symmetry = opts.symmetry;
    mopts.feasibility_only = !opts.zk_objective_bottom_up;
    mopts.path_budget = opts.path_budget;
    if (opts.clique_fix && prep.bound.clique.size() > 0) {
        mopts.clique_fix = &prep.bound.clique;
    }
    mopts.clique_cuts = prep.cuts;

    for (int K0 = std::max(1, prep.bound.lb);; ++K0) {
        double remaining = opts.time_limit_s - seconds_since(t0);
        if (remaining <= 0) {
            report.outcome = SolveReport::Timeout;
            report.lb = K0;
            report.ub = -1;
            break;
        }
        auto build0 = Clock::now();
        IpModel ip = build_model(g, K0, mopts);
        report.build_seconds += seconds_since(build0);
        report.paths_total = ip.paths_total;
        report.paths_retained = ip.paths_retained;

        auto solve0 = Clock::now();
        SolveStatus status = backend->solve(ip.model, remaining);
        double round_s = seconds_since(solve0);
        report.solve_seconds += round_s;

        if (status.kind == SolveStatus::Optimal || status.kind == SolveStatus::Feasible) {
            report.rounds.push_back({K0, "feasible", round_s});
            report.coloring = extract_coloring(g, ip, status.values);
            report.has_coloring = true;
            report.src = report.lb = report.ub = K0;
            if (report.coloring.k != K0) {
                report.outcome = SolveReport::Failed;
                report.message = "feasible coloring uses fewer colors than K0";
                break;
            }
            if (!verify_strong_rainbow(g, report.coloring).ok) {
                report.outcome = SolveReport::Failed;
                report.message = "feasible solution failed rainbow verification";
                break;
            }
            report.outcome = SolveReport::Solved;
            break;
        }
        if (status.kind == SolveStatus::Infeasible) {
            report.rounds.push_back({K0, "infeasible", round_s});
            continue;
        }
        if (status.kind == SolveStatus::TimeLimit) {
            report.rounds.push_back({K0, "timelimit", round_s});
            report.outcome = SolveReport::Timeout;
            report.lb = K0;
            report.ub = -1;
            break;
        }
        report.rounds.push_back({K0, "error", round_s});
        report.outcome = SolveReport::Failed;
        report.message = status.message.empty() ? "backend error" : status.message;
        break;
    }
    report.total_seconds = seconds_since(t0);  // heuristic never runs here
    return report;
}

}  // namespace srcon
