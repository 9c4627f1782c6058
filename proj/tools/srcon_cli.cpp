#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srcon/aux_graph.hpp"
#include "srcon/coloring.hpp"
#include "srcon/errors.hpp"
#include "srcon/generators.hpp"
#include "srcon/graph.hpp"
#include "srcon/heuristic.hpp"
#include "srcon/ip_model.hpp"
#include "srcon/mip_backend.hpp"
#include "srcon/util.hpp"

namespace {

using namespace srcon;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string instance_name(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", s);
    return buf;
}

// Table-style cell: exact time when solved, "[lb,ub]" on timeout with "-"
// for a missing upper bound.
std::string result_cell(const SolveReport& r) {
    if (r.outcome == SolveReport::Solved) return fmt_seconds(r.total_seconds);
    std::string ub = r.ub < 0 ? "-" : std::to_string(r.ub);
    std::string lb = r.lb < 0 ? "-" : std::to_string(r.lb);
    return "[" + lb + "," + ub + "]";
}

void append_csv(const std::string& path, const std::string& header,
                const std::string& row) {
    bool fresh = !std::ifstream(path).good();
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot write " + path);
    if (fresh) out << header << '\n';
    out << row << '\n';
}

struct CommonOpts {
    std::string method = "bottom-up";
    double time_limit = 3600.0;
    std::uint64_t seed = 1;
    int max_iter = 0;
    std::string solver_cmd;
    bool no_eliminate = false;
    bool no_clique_fix = false;
    bool clique_cuts = false;
    std::uint64_t path_budget = 5'000'000;
    std::string out_path;
    std::string csv_path;
};

SolveOptions to_solve_options(const CommonOpts& o) {
    SolveOptions s;
    s.eliminate = !o.no_eliminate;
    s.clique_fix = !o.no_clique_fix;
    s.clique_cuts = o.clique_cuts;
    s.time_limit_s = o.time_limit;
    s.max_iter = o.max_iter;
    s.seed = o.seed;
    s.path_budget = o.path_budget;
    return s;
}

// Resolves the backend: explicit --solver-cmd, then SRC_SOLVER_CMD, then
// the bundled bridge; nullopt means the exhaustive fallback.
std::optional<ExternalBackend> make_backend(const std::string& flag) {
    if (!flag.empty()) return ExternalBackend(flag);
    if (auto cmd = default_solver_command()) return ExternalBackend(*cmd);
    return std::nullopt;
}

int cmd_solve(const std::string& graph_path, const CommonOpts& opts) {
    Graph g = parse_edge_list(read_file(graph_path));
    SolveOptions sopts = to_solve_options(opts);
    auto backend = make_backend(opts.solver_cmd);
    const MipBackend* be = backend ? &*backend : nullptr;
    if (!be && g.m > sopts.exhaustive_guard) {
        throw Error("no MIP solver configured and the instance exceeds the "
                    "exhaustive fallback guard (m = " + std::to_string(g.m) +
                    " > " + std::to_string(sopts.exhaustive_guard) +
                    "); set SRC_SOLVER_CMD or --solver-cmd");
    }

    SolveReport report;
    if (opts.method == "naive") {
        report = solve_direct(g, be, true, sopts);
    } else if (opts.method == "enhanced") {
        report = solve_direct(g, be, false, sopts);
    } else if (opts.method == "bottom-up") {
        report = solve_bottom_up(g, be, sopts);
    } else {
        throw Error("unknown method: " + opts.method);
    }

    const std::string name = instance_name(graph_path);
    std::cout << "instance   " << name << "\n"
              << "n, m       " << g.n << ", " << g.m << "\n"
              << "method     " << report.method << "\n";
    if (report.init_lb >= 0) std::cout << "init lb    " << report.init_lb
                                       << " (diam " << report.diam << ", clique "
                                       << report.omega << ")\n";
    if (report.heur_ub >= 0) std::cout << "heur ub    " << report.heur_ub << " ("
                                       << fmt_seconds(report.heur_seconds) << " s)\n";
    switch (report.outcome) {
        case SolveReport::Solved:
            std::cout << "src        " << report.src << "\n";
            break;
        case SolveReport::Timeout:
            std::cout << "timeout    bounds [" << report.lb << ","
                      << (report.ub < 0 ? std::string("-") : std::to_string(report.ub))
                      << "]\n";
            break;
        case SolveReport::Failed:
            std::cout << "failed     " << report.message << "\n";
            break;
    }
    std::cout << "time       " << fmt_seconds(report.total_seconds) << " s\n";

    if (!opts.out_path.empty() && report.has_coloring) {
        write_file(opts.out_path,
                   coloring_to_json(g, report.coloring, report.method));
        std::cout << "coloring   " << opts.out_path << "\n";
    }
    if (!opts.csv_path.empty()) {
        std::ostringstream row;
        row << name << ',' << g.n << ',' << g.m << ',' << report.method << ','
            << (report.outcome == SolveReport::Solved ? std::to_string(report.src)
                                                      : std::string("-"))
            << ',' << (report.init_lb < 0 ? "-" : std::to_string(report.init_lb))
            << ',' << (report.heur_ub < 0 ? "-" : std::to_string(report.heur_ub))
            << ',' << fmt_seconds(report.heur_seconds) << ',' << result_cell(report);
        append_csv(opts.csv_path,
                   "instance,n,m,method,src,init_lb,heur_ub,heur_time,result", row.str());
    }
    if (report.outcome == SolveReport::Solved) return 0;
    if (report.outcome == SolveReport::Timeout) return 2;
    std::cerr << "error: " << report.message << "\n";
    return 1;
}

int cmd_bound(const std::string& graph_path, bool chi_exact) {
    Graph g = parse_edge_list(read_file(graph_path));
    AuxiliaryGraph h = build_aux_graph(g);
    CliqueCertificate clique = max_clique(h);
    int diam = diameter(g);
    std::cout << "diameter   " << diam << "\n"
              << "clique     " << clique.size()
              << (clique.exact ? "" : " (time limit, lower bound only)") << "\n"
              << "bound      " << std::max(diam, clique.size()) << "\n";
    if (chi_exact) {
        std::cout << "chi(H)     " << chromatic_number_exact(h) << "\n";
        std::cout << "geodetic   " << (is_geodetic(g) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_stats(const std::string& graph_path, std::uint64_t path_budget,
              const std::string& csv_path) {
    Graph g = parse_edge_list(read_file(graph_path));
    AuxiliaryGraph h = build_aux_graph(g);
    CliqueCertificate clique = max_clique(h);
    auto seps = all_separations(g);
    EliminationResult elim = compute_retained_pairs(g, seps);
    if (elim.paths_total > BigInt(path_budget)) {
        throw PathBudgetExceeded("instance exceeds the path budget");
    }
    double pct = elim.paths_total == 0
                     ? 100.0
                     : 100.0 * Rational(elim.paths_retained, elim.paths_total)
                                   .convert_to<double>();
    char dens[32], rem[32];
    std::snprintf(dens, sizeof(dens), "%.2f", 100.0 * h.density());
    std::snprintf(rem, sizeof(rem), "%.2f", pct);
    std::cout << "n          " << g.n << "\n"
              << "m          " << g.m << "\n"
              << "clique     " << clique.size() << "\n"
              << "diameter   " << diameter(g) << "\n"
              << "dens(H)    " << dens << "%\n"
              << "paths      " << elim.paths_total << "\n"
              << "retained   " << elim.paths_retained << "\n"
              << "remaining  " << rem << "%\n";
    if (!csv_path.empty()) {
        std::ostringstream row;
        row << instance_name(graph_path) << ',' << g.n << ',' << g.m << ','
            << clique.size() << ',' << diameter(g) << ',' << dens << ','
            << elim.paths_total << ',' << elim.paths_retained << ',' << rem;
        append_csv(csv_path,
                   "instance,n,m,clique,diam,dens_h_pct,paths,paths_retained,"
                   "pct_remaining", row.str());
    }
    return 0;
}

int cmd_heuristic(const std::string& graph_path, const CommonOpts& opts,
                  bool clique_seed) {
    Graph g = parse_edge_list(read_file(graph_path));
    Rng rng(opts.seed);
    int iters = opts.max_iter > 0 ? opts.max_iter : default_max_iter(g);
    CliqueCertificate cert;
    const CliqueCertificate* seed_ptr = nullptr;
    if (clique_seed) {
        cert = max_clique(build_aux_graph(g));
        seed_ptr = &cert;
    }
    HeuristicResult res = run_heuristic(g, iters, rng, seed_ptr);
    std::cout << "colors     " << res.best << "\n"
              << "iterations " << res.iterations_run << "\n"
              << "time       " << fmt_seconds(res.seconds) << " s\n";
    if (!opts.out_path.empty()) {
        write_file(opts.out_path, coloring_to_json(g, res.coloring, "heuristic"));
        std::cout << "coloring   " << opts.out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = parse_edge_list(read_file(graph_path));
    Coloring c = coloring_from_json(g, read_file(coloring_path));
    VerifyResult res = verify_strong_rainbow(g, c);
    if (res.ok) {
        std::cout << "valid strong rainbow coloring with " << c.k << " colors\n";
        return 0;
    }
    std::cout << "invalid: no rainbow shortest path between "
              << g.label(res.witness_u) << " and " << g.label(res.witness_v) << "\n";
    return 3;
}

int cmd_gen(const std::string& family, const std::vector<double>& params,
            std::uint64_t seed, int count, const std::string& out_dir) {
    GenSpec spec;
    if (family == "er") {
        if (params.size() != 2) throw Error("gen er needs: n p");
        spec.family = GenSpec::ER;
        spec.n = static_cast<int>(params[0]);
        spec.p = params[1];
    } else if (family == "ws") {
        if (params.size() != 3) throw Error("gen ws needs: n k p");
        spec.family = GenSpec::WS;
        spec.n = static_cast<int>(params[0]);
        spec.k = static_cast<int>(params[1]);
        spec.p = params[2];
    } else if (family == "ber") {
        if (params.size() != 3) throw Error("gen ber needs: n1 n2 p");
        spec.family = GenSpec::BER;
        spec.n = static_cast<int>(params[0]);
        spec.n2 = static_cast<int>(params[1]);
        spec.p = params[2];
    } else {
        throw Error("unknown family: " + family + " (expected er|ws|ber)");
    }
    if (spec.p < 0.0 || spec.p > 1.0) throw Error("p must be in [0,1]");
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        spec.index = i;
        spec.seed = splitmix64(seed + static_cast<std::uint64_t>(i));
        Graph g = spec.generate();
        std::string path =
            (out_dir.empty() ? "" : out_dir + "/") + spec.name() + ".txt";
        write_file(path, serialize_edge_list(g));
        std::cout << path << "  n=" << g.n << " m=" << g.m << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong rainbow connection number toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string graph_path, coloring_path;
    bool chi_exact = false;
    bool clique_seed = false;
    std::string family, out_dir = ".";
    std::vector<double> params;
    int count = 1;

    auto add_common = [&](CLI::App* cmd, bool solver_flags) {
        cmd->add_option("--seed", opts.seed, "RNG seed");
        cmd->add_option("--max-iter", opts.max_iter, "heuristic iterations (0 = ceil(n/5))");
        cmd->add_option("--path-budget", opts.path_budget, "max path-edge incidences");
        cmd->add_option("--out", opts.out_path, "coloring JSON output path");
        if (solver_flags) {
            cmd->add_option("--method", opts.method, "naive | enhanced | bottom-up")
                ->check(CLI::IsMember({"naive", "enhanced", "bottom-up"}));
            cmd->add_option("--time-limit", opts.time_limit, "seconds");
            cmd->add_option("--solver-cmd", opts.solver_cmd,
                            "MIP solver command with {lp} {sol} [{tl}]");
            cmd->add_flag("--no-eliminate", opts.no_eliminate, "disable pair elimination");
            cmd->add_flag("--no-clique-fix", opts.no_clique_fix, "disable clique fixing");
            cmd->add_flag("--clique-cuts", opts.clique_cuts, "add clique cut rows");
            cmd->add_option("--csv", opts.csv_path, "append a CSV result row");
        }
    };

    auto* solve = app.add_subcommand("solve", "compute src(G) exactly");
    solve->add_option("graph", graph_path, "edge list file")->required();
    add_common(solve, true);

    auto* bound = app.add_subcommand("bound", "lower bound max(diam, clique)");
    bound->add_option("graph", graph_path)->required();
    bound->add_flag("--chi-exact", chi_exact, "also compute chi(H) exactly (small H)");

    auto* stats = app.add_subcommand("stats", "path/elimination statistics");
    stats->add_option("graph", graph_path)->required();
    stats->add_option("--path-budget", opts.path_budget);
    stats->add_option("--csv", opts.csv_path, "append a CSV stats row");

    auto* heur = app.add_subcommand("heuristic", "randomized coloring upper bound");
    heur->add_option("graph", graph_path)->required();
    heur->add_flag("--clique-seed", clique_seed, "pre-color a maximum clique of H");
    add_common(heur, false);

    auto* verify = app.add_subcommand("verify", "check a coloring JSON file");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();

    auto* gen = app.add_subcommand("gen", "write random instances");
    gen->add_option("family", family, "er | ws | ber")->required();
    gen->add_option("params", params, "er: n p | ws: n k p | ber: n1 n2 p")->required();
    gen->add_option("--seed", opts.seed);
    gen->add_option("--count", count, "instances to generate");
    gen->add_option("--out-dir", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(graph_path, opts);
        if (bound->parsed()) return cmd_bound(graph_path, chi_exact);
        if (stats->parsed()) return cmd_stats(graph_path, opts.path_budget, opts.csv_path);
        if (heur->parsed()) return cmd_heuristic(graph_path, opts, clique_seed);
        if (verify->parsed()) return cmd_verify(graph_path, coloring_path);
        if (gen->parsed()) return cmd_gen(family, params, opts.seed, count, out_dir);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
