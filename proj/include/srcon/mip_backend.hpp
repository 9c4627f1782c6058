#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srcon/coloring.hpp"
#include "srcon/graph.hpp"

namespace srcon {

// Neutral binary-program representation. All data is integral and
// variable names are unique and deterministic, so models round-trip
// through the LP text format exactly.
struct LinearRow {
    std::string name;
    std::vector<std::pair<int, long long>> terms;  // (var index, coefficient)
    char sense = 'L';  // 'L' <=, 'G' >=, 'E' =
    long long rhs = 0;
};

struct NeutralModel {
    std::vector<std::string> var_names;
    std::unordered_map<std::string, int> var_index;
    std::vector<LinearRow> rows;
    std::vector<std::pair<int, long long>> objective;  // minimize
    std::vector<int> fixed;                            // -1 free, else 0/1
    std::vector<std::pair<int, int>> hint;             // optional start

    int add_var(const std::string& name);
    void add_row(LinearRow row);
    void fix(int var, int value);

    // Exact integer re-evaluation of every row (and fixings) against a
    // 0/1 assignment; writes the first violated row name into *why.
    bool check_assignment(const std::vector<int>& values,
                          std::string* why = nullptr) const;
    long long eval_objective(const std::vector<int>& values) const;
};

// CPLEX-style LP text: Minimize / Subject To / Bounds / Binary / End,
// deterministic row and column order.
std::string write_lp(const NeutralModel& model);

struct SolveStatus {
    enum Kind { Optimal, Feasible, Infeasible, TimeLimit, Error };
    Kind kind = Error;
    long long objective = 0;
    std::vector<int> values;  // 0/1 per variable; empty if none
    bool has_values = false;
    double best_bound = 0.0;  // meaningful on TimeLimit
    std::string message;
};

// Writes the model to a temp LP file, runs the solver command and parses
// the solution file. The command template must contain {lp} and {sol}
// placeholders; {tl} is replaced by the time limit in seconds if present.
// The solution file is "name value" lines with an optional leading
// "status: <optimal|feasible|infeasible|timelimit|...>" line and optional
// "bound <v>" line. Values within 1e-6 of 0/1 are rounded and every row
// is re-validated in exact integer arithmetic before the assignment is
// trusted; a violation downgrades the result to Error.
SolveStatus solve_external(const NeutralModel& model,
                           const std::string& command_template,
                           double time_limit_s);

// Solver abstraction used by the solve drivers.
class MipBackend {
  public:
    virtual ~MipBackend() = default;
    virtual SolveStatus solve(const NeutralModel& model, double time_limit_s) const = 0;
    virtual bool supports_hints() const { return false; }
    virtual std::string name() const = 0;
};

class ExternalBackend final : public MipBackend {
  public:
    explicit ExternalBackend(std::string command_template)
        : command_template_(std::move(command_template)) {}
    SolveStatus solve(const NeutralModel& model, double time_limit_s) const override {
        return solve_external(model, command_template_, time_limit_s);
    }
    std::string name() const override { return "external"; }
    const std::string& command_template() const { return command_template_; }

  private:
    std::string command_template_;
};

// Decides "some coloring with <= K0 colors strongly rainbow connects g"
// by exhaustive DFS with symmetry pruning, bypassing the LP encoding.
// Exact; guarded by edge count.
struct ExhaustiveResult {
    bool feasible = false;
    Coloring coloring;  // witness when feasible
};
ExhaustiveResult solve_exhaustive(const Graph& g, int K0, int edge_guard = 14);

// Solver command resolution: explicit argument, then the SRC_SOLVER_CMD
// environment variable, then the bundled HiGHS bridge if found.
std::optional<std::string> default_solver_command();

}  // namespace srcon
