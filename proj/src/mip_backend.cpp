#include "srcon/mip_backend.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "srcon/errors.hpp"

namespace srcon {

int NeutralModel::add_var(const std::string& name) {
    auto [it, inserted] = var_index.emplace(name, static_cast<int>(var_names.size()));
    if (!inserted) throw Error("duplicate variable name: " + name);
    var_names.push_back(name);
    fixed.push_back(-1);
    return it->second;
}

void NeutralModel::add_row(LinearRow row) { rows.push_back(std::move(row)); }

void NeutralModel::fix(int var, int value) { fixed[var] = value; }

bool NeutralModel::check_assignment(const std::vector<int>& values,
                                    std::string* why) const {
    if (values.size() != var_names.size()) {
        if (why) *why = "assignment size mismatch";
        return false;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0 && values[i] != 1) {
            if (why) *why = "non-binary value for " + var_names[i];
            return false;
        }
        if (fixed[i] >= 0 && values[i] != fixed[i]) {
            if (why) *why = "fixed variable violated: " + var_names[i];
            return false;
        }
    }
    for (const auto& row : rows) {
        long long lhs = 0;
        for (auto [var, coef] : row.terms) lhs += coef * values[var];
        bool ok = row.sense == 'L'   ? lhs <= row.rhs
                  : row.sense == 'G' ? lhs >= row.rhs
                                     : lhs == row.rhs;
        if (!ok) {
            if (why) *why = "row violated: " + row.name;
            return false;
        }
    }
    return true;
}

long long NeutralModel::eval_objective(const std::vector<int>& values) const {
    long long obj = 0;
    for (auto [var, coef] : objective) obj += coef * values[var];
    return obj;
}

namespace {

void append_terms(std::string& out, const std::vector<std::pair<int, long long>>& terms,
                  const NeutralModel& model) {
    bool first = true;
    for (auto [var, coef] : terms) {
        if (first) {
            if (coef < 0) out += "- ";
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        long long mag = std::llabs(coef);
        if (mag != 1) {
            out += std::to_string(mag);
            out += ' ';
        }
        out += model.var_names[var];
        first = false;
    }
}

}  // namespace

std::string write_lp(const NeutralModel& model) {
    std::string out = "Minimize\n obj: ";
    if (model.objective.empty()) {
        // Constant-objective convention for pure feasibility models.
        out += "0 ";
        out += model.var_names.at(0);
    } else {
        append_terms(out, model.objective, model);
    }
    out += "\nSubject To\n";
    for (const auto& row : model.rows) {
        out += ' ';
        out += row.name;
        out += ": ";
        append_terms(out, row.terms, model);
        out += row.sense == 'L' ? " <= " : row.sense == 'G' ? " >= " : " = ";
        out += std::to_string(row.rhs);
        out += '\n';
    }
    bool any_fixed = false;
    for (std::size_t i = 0; i < model.fixed.size(); ++i) {
        if (model.fixed[i] >= 0) {
            if (!any_fixed) {
                out += "Bounds\n";
                any_fixed = true;
            }
            out += ' ';
            out += model.var_names[i];
            out += " = ";
            out += std::to_string(model.fixed[i]);
            out += '\n';
        }
    }
    out += "Binary\n";
    for (const auto& name : model.var_names) {
        out += ' ';
        out += name;
        out += '\n';
    }
    out += "End\n";
    return out;
}

namespace {

std::string substitute(std::string tmpl, const std::string& key,
                       const std::string& value) {
    for (std::size_t pos; (pos = tmpl.find(key)) != std::string::npos;) {
        tmpl.replace(pos, key.size(), value);
    }
    return tmpl;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::string base =
            (std::filesystem::temp_directory_path() / "srcon_XXXXXX").string();
        std::vector<char> buf(base.begin(), base.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw BackendError("cannot create temp directory");
        path = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace

SolveStatus solve_external(const NeutralModel& model,
                           const std::string& command_template,
                           double time_limit_s) {
    SolveStatus status;
    if (command_template.find("{lp}") == std::string::npos ||
        command_template.find("{sol}") == std::string::npos) {
        status.message = "command template must contain {lp} and {sol}";
        return status;
    }
    TempDir dir;
    const std::string lp_path = (dir.path / "model.lp").string();
    const std::string sol_path = (dir.path / "model.sol").string();
    const std::string log_path = (dir.path / "solver.log").string();
    {
        std::ofstream lp(lp_path);
        lp << write_lp(model);
    }
    std::string cmd = substitute(command_template, "{lp}", lp_path);
    cmd = substitute(cmd, "{sol}", sol_path);
    {
        std::ostringstream tl;
        tl << time_limit_s;
        cmd = substitute(cmd, "{tl}", tl.str());
    }
    cmd += " > " + log_path + " 2>&1";
    int rc = std::system(cmd.c_str());

    std::ifstream sol(sol_path);
    if (!sol) {
        status.message = "solver produced no solution file (exit " +
                         std::to_string(rc) + ")";
        return status;
    }
    std::string status_word = "unknown";
    double bound = 0.0;
    bool have_bound = false;
    std::vector<double> raw(model.var_names.size(),
                            std::numeric_limits<double>::quiet_NaN());
    std::string line;
    while (std::getline(sol, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "status:") {
            ls >> status_word;
        } else if (tok == "bound") {
            ls >> bound;
            have_bound = true;
        } else if (tok == "objective") {
            double ignored;
            ls >> ignored;  // recomputed exactly below
        } else {
            double value;
            if (!(ls >> value)) {
                status.message = "unparseable solution line: " + line;
                return status;
            }
            auto it = model.var_index.find(tok);
            if (it == model.var_index.end()) {
                status.message = "unknown variable in solution: " + tok;
                return status;
            }
            raw[it->second] = value;
        }
    }

    if (status_word == "infeasible") {
        status.kind = SolveStatus::Infeasible;
        return status;
    }

    bool complete = true;
    std::vector<int> values(model.var_names.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::isnan(raw[i])) {
            complete = false;
            break;
        }
        double v = raw[i];
        if (std::fabs(v) <= 1e-6) {
            values[i] = 0;
        } else if (std::fabs(v - 1.0) <= 1e-6) {
            values[i] = 1;
        } else {
            status.message = "non-integral value for " + model.var_names[i];
            return status;
        }
    }

    if (status_word == "timelimit") {
        status.kind = SolveStatus::TimeLimit;
        status.best_bound = have_bound ? bound : 0.0;
        if (complete) {
            std::string why;
            if (model.check_assignment(values, &why)) {
                status.values = std::move(values);
                status.has_values = true;
                status.objective = model.eval_objective(status.values);
            }
        }
        return status;
    }
    if (status_word != "optimal" && status_word != "feasible") {
        status.message = "solver status: " + status_word;
        return status;
    }
    if (!complete) {
        status.message = "solution file missing variables";
        return status;
    }
    std::string why;
    if (!model.check_assignment(values, &why)) {
        status.message = "solution failed exact validation: " + why;
        return status;
    }
    status.kind = status_word == "optimal" ? SolveStatus::Optimal : SolveStatus::Feasible;
    status.values = std::move(values);
    status.has_values = true;
    status.objective = model.eval_objective(status.values);
    return status;
}

ExhaustiveResult solve_exhaustive(const Graph& g, int K0, int edge_guard) {
    if (g.m > edge_guard) {
        throw SizeGuardExceeded("exhaustive backend guard: m = " +
                                std::to_string(g.m) + " > " +
                                std::to_string(edge_guard));
    }
    ExhaustiveResult out;
    out.feasible = feasible_with_k_colors(g, K0, &out.coloring);
    return out;
}

std::optional<std::string> default_solver_command() {
    if (const char* env = std::getenv("SRC_SOLVER_CMD"); env && *env) {
        return std::string(env);
    }
#ifdef SRCON_BRIDGE_SCRIPT
    if (std::filesystem::exists(SRCON_BRIDGE_SCRIPT)) {
        return std::string("python3 ") + SRCON_BRIDGE_SCRIPT +
               " --time-limit {tl} {lp} {sol}";
    }
#endif
    return std::nullopt;
}

}  // namespace srcon
