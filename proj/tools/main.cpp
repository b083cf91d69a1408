// Copyright 2026 The pauli-discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdisc/discrim.hpp"
#include "pdisc/oracle.hpp"

using nlohmann::json;

namespace {

// Exit codes are a stable contract.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;         // I/O or parse failure
constexpr int kExitValidation = 2; // constraint violation
constexpr int kExitVerify = 3;     // oracle disagrees with the closed form

struct CliError {
    int code;
    std::string message;
};

struct ProblemFile {
    std::string kind; // "pauli" | "generalized"
    int d = 2;
    std::vector<double> q1;
    std::vector<double> q2;
    double p1 = 0.5;
};

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::vector<double> checked_probs(const json &j, const std::string &field, size_t expected_len) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw CliError{kExitValidation, field + " must be an array of probabilities"};
    }
    std::vector<double> q;
    for (const auto &x : j[field]) {
        if (!x.is_number()) {
            throw CliError{kExitValidation, field + " entries must be numbers"};
        }
        q.push_back(x.get<double>());
    }
    if (q.size() != expected_len) {
        throw CliError{kExitValidation,
                       field + " must have " + std::to_string(expected_len) + " entries"};
    }
    double sum = 0.0;
    for (const double v : q) {
        if (v < 0.0) {
            throw CliError{kExitValidation, field + " entries must be nonnegative"};
        }
        sum += v;
    }
    const double drift = std::abs(sum - 1.0);
    if (drift > 1e-6) {
        throw CliError{kExitValidation, field + " does not sum to 1 (sum = " + fmt9(sum) + ")"};
    }
    if (drift > 1e-9) {
        std::cerr << "warning: " << field << " sums to " << fmt9(sum) << ", renormalizing\n";
    }
    for (double &v : q) {
        v /= sum;
    }
    return q;
}

ProblemFile load_problem_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CliError{kExitIo, "cannot open " + path};
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw CliError{kExitIo, std::string("parse error in ") + path + ": " + e.what()};
    }

    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != 1) {
        throw CliError{kExitValidation, "version must be the integer 1"};
    }
    ProblemFile pf;
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw CliError{kExitValidation, "kind must be \"pauli\" or \"generalized\""};
    }
    pf.kind = j["kind"].get<std::string>();
    size_t len = 4;
    if (pf.kind == "pauli") {
        pf.d = 2;
    } else if (pf.kind == "generalized") {
        if (!j.contains("d") || !j["d"].is_number_integer()) {
            throw CliError{kExitValidation, "d is required for generalized channels"};
        }
        pf.d = j["d"].get<int>();
        if (pf.d < 2) {
            throw CliError{kExitValidation, "d must be >= 2"};
        }
        len = static_cast<size_t>(pf.d) * pf.d;
    } else {
        throw CliError{kExitValidation, "kind must be \"pauli\" or \"generalized\""};
    }
    pf.q1 = checked_probs(j, "q1", len);
    pf.q2 = checked_probs(j, "q2", len);
    if (!j.contains("p1") || !j["p1"].is_number()) {
        throw CliError{kExitValidation, "p1 must be a number"};
    }
    pf.p1 = j["p1"].get<double>();
    if (pf.p1 < 0.0 || pf.p1 > 1.0) {
        throw CliError{kExitValidation, "p1 must lie in [0, 1]"};
    }
    return pf;
}

pdisc::DiscriminationProblem make_problem(const ProblemFile &pf) {
    try {
        if (pf.kind == "pauli") {
            return {pdisc::PauliChannel({pf.q1[0], pf.q1[1], pf.q1[2], pf.q1[3]}),
                    pdisc::PauliChannel({pf.q2[0], pf.q2[1], pf.q2[2], pf.q2[3]}),
                    pdisc::PriorPair(pf.p1)};
        }
        return {pdisc::GeneralizedPauliChannel(pf.d, pf.q1),
                pdisc::GeneralizedPauliChannel(pf.d, pf.q2), pdisc::PriorPair(pf.p1)};
    } catch (const std::exception &e) {
        throw CliError{kExitValidation, e.what()};
    }
}

json povm_json(const pdisc::TwoOutcomePovm &povm) {
    const auto mat = [](const pdisc::HermitianMatrix &h) {
        json rows = json::array();
        for (int r = 0; r < h.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < h.dim(); ++c) {
                row.push_back({h(r, c).real(), h(r, c).imag()});
            }
            rows.push_back(row);
        }
        return rows;
    };
    return {{"P1", mat(povm.p1())}, {"P2", mat(povm.p2())}};
}

void print_povm(const std::string &label, const pdisc::TwoOutcomePovm &povm) {
    for (const auto *p : {&povm.p1(), &povm.p2()}) {
        std::cout << label << (p == &povm.p1() ? " P1:\n" : " P2:\n");
        for (int r = 0; r < p->dim(); ++r) {
            for (int c = 0; c < p->dim(); ++c) {
                const pdisc::cxd z = (*p)(r, c);
                std::cout << (c ? " " : "") << fmt9(z.real())
                          << (z.imag() < 0 ? "-" : "+") << fmt9(std::abs(z.imag())) << "i";
            }
            std::cout << "\n";
        }
    }
}

void report_solve(const ProblemFile &pf, const pdisc::DiscriminationResult &res, bool as_json,
                  bool show_povm) {
    if (as_json) {
        json out{
            {"kind", pf.kind},
            {"d", pf.d},
            {"p1", pf.p1},
            {"pe_assisted", res.pe_assisted},
            {"entanglement_required", res.entanglement_required},
        };
        if (res.pe_unassisted) {
            out["pe_unassisted"] = *res.pe_unassisted;
            out["optimal_axis"] = pdisc::axis_name(*res.optimal_axis);
        }
        if (show_povm) {
            out["assisted_povm"] = povm_json(res.assisted_povm);
            if (res.unassisted_povm) {
                out["unassisted_povm"] = povm_json(*res.unassisted_povm);
            }
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "kind=" << pf.kind << "\n";
    std::cout << "p1=" << fmt6(pf.p1) << "\n";
    std::cout << "pe_assisted=" << fmt6(res.pe_assisted) << "\n";
    if (res.pe_unassisted) {
        std::cout << "pe_unassisted=" << fmt6(*res.pe_unassisted) << "\n";
        std::cout << "optimal_axis=" << pdisc::axis_name(*res.optimal_axis) << "\n";
    }
    std::cout << "entanglement_required=" << (res.entanglement_required ? "true" : "false")
              << "\n";
    if (show_povm) {
        print_povm("assisted_povm", res.assisted_povm);
        if (res.unassisted_povm) {
            print_povm("unassisted_povm", *res.unassisted_povm);
        }
    }
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("PAULI_DISCRIM_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

int cmd_solve(const std::string &path, bool as_json, bool show_povm) {
    const ProblemFile pf = load_problem_file(path);
    const pdisc::DiscriminationProblem problem = make_problem(pf);
    report_solve(pf, pdisc::solve(problem), as_json, show_povm);
    return kExitOk;
}

int cmd_verify(const std::string &path, const pdisc::SearchConfig &cfg, bool as_json,
               bool corrupt) {
    const ProblemFile pf = load_problem_file(path);
    const pdisc::DiscriminationProblem problem = make_problem(pf);
    const pdisc::DiscriminationResult res = pdisc::solve(problem);

    // Test hook: shift the closed forms so the failure path is exercisable.
    const double bias = corrupt ? 0.01 : 0.0;

    const double closed_assisted = res.pe_assisted + bias;
    const double oracle_a = pdisc::oracle_assisted(problem, cfg);
    const double gap_assisted = std::abs(closed_assisted - oracle_a);
    constexpr double kAssistedTol = 1e-4; // stochastic search bound

    std::optional<double> closed_unassisted;
    std::optional<double> gap_unassisted;
    std::optional<double> oracle_u;
    if (res.pe_unassisted) {
        closed_unassisted = *res.pe_unassisted + bias;
        oracle_u = pdisc::oracle_unassisted(problem, cfg).pe;
        gap_unassisted = std::abs(*closed_unassisted - *oracle_u);
    }

    bool ok = gap_assisted <= kAssistedTol;
    if (gap_unassisted && *gap_unassisted > cfg.tolerance) {
        ok = false;
    }

    if (as_json) {
        json out{
            {"seed", cfg.seed},
            {"closed_pe_assisted", closed_assisted},
            {"oracle_pe_assisted", oracle_a},
            {"gap_assisted", gap_assisted},
            {"ok", ok},
        };
        if (closed_unassisted) {
            out["closed_pe_unassisted"] = *closed_unassisted;
            out["oracle_pe_unassisted"] = *oracle_u;
            out["gap_unassisted"] = *gap_unassisted;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "seed=" << cfg.seed << "\n";
        std::cout << "closed_pe_assisted=" << fmt9(closed_assisted)
                  << " oracle=" << fmt9(oracle_a) << " gap=" << fmt9(gap_assisted) << "\n";
        if (closed_unassisted) {
            std::cout << "closed_pe_unassisted=" << fmt9(*closed_unassisted)
                      << " oracle=" << fmt9(*oracle_u) << " gap=" << fmt9(*gap_unassisted)
                      << "\n";
        }
        std::cout << (ok ? "verification ok" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerify;
}

// --param accepts "p1" or "q1[k]" / "q2[k]".
struct SweepParam {
    enum class Target { P1, Q1, Q2 } target;
    int index = -1;
};

SweepParam parse_sweep_param(const std::string &s) {
    if (s == "p1") {
        return {SweepParam::Target::P1, -1};
    }
    const auto lb = s.find('[');
    if ((s.rfind("q1", 0) == 0 || s.rfind("q2", 0) == 0) && lb == 2 && s.back() == ']') {
        const int idx = std::atoi(s.substr(3, s.size() - 4).c_str());
        return {s[1] == '1' ? SweepParam::Target::Q1 : SweepParam::Target::Q2, idx};
    }
    throw CliError{kExitValidation, "--param must be p1, q1[k] or q2[k]"};
}

ProblemFile with_sweep_value(ProblemFile pf, const SweepParam &param, double v) {
    if (param.target == SweepParam::Target::P1) {
        if (v < 0.0 || v > 1.0) {
            throw CliError{kExitValidation, "swept p1 leaves [0, 1]"};
        }
        pf.p1 = v;
        return pf;
    }
    std::vector<double> &q = param.target == SweepParam::Target::Q1 ? pf.q1 : pf.q2;
    if (param.index < 0 || static_cast<size_t>(param.index) >= q.size()) {
        throw CliError{kExitValidation, "swept index out of range"};
    }
    if (v < 0.0 || v > 1.0) {
        throw CliError{kExitValidation, "swept probability leaves [0, 1]"};
    }
    const double rest = 1.0 - q[static_cast<size_t>(param.index)];
    q[static_cast<size_t>(param.index)] = v;
    // Remaining entries rescale proportionally to absorb 1 - v.
    if (rest > 0.0) {
        const double scale = (1.0 - v) / rest;
        for (size_t i = 0; i < q.size(); ++i) {
            if (i != static_cast<size_t>(param.index)) {
                q[i] *= scale;
            }
        }
    } else {
        const double share = (1.0 - v) / static_cast<double>(q.size() - 1);
        for (size_t i = 0; i < q.size(); ++i) {
            if (i != static_cast<size_t>(param.index)) {
                q[i] = share;
            }
        }
    }
    return pf;
}

int cmd_sweep(const std::string &path, const std::string &param_spec, double from, double to,
              int steps, const std::string &out_path) {
    if (steps < 0) {
        throw CliError{kExitValidation, "--steps must be >= 0"};
    }
    const ProblemFile base = load_problem_file(path);
    const SweepParam param = parse_sweep_param(param_spec);

    std::ofstream out(out_path);
    if (!out) {
        throw CliError{kExitIo, "cannot open " + out_path + " for writing"};
    }
    out << "param,pe_assisted,pe_unassisted,entanglement_required\n";
    for (int i = 0; i <= steps; ++i) {
        const double v =
            steps == 0 ? from : from + (to - from) * static_cast<double>(i) / steps;
        const ProblemFile pf = with_sweep_value(base, param, v);
        const pdisc::DiscriminationResult res = pdisc::solve(make_problem(pf));
        out << fmt9(v) << "," << fmt9(res.pe_assisted) << ","
            << (res.pe_unassisted ? fmt9(*res.pe_unassisted) : "nan") << ","
            << (res.entanglement_required ? "true" : "false") << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Minimum-error discrimination of Pauli channels"};
    app.require_subcommand(1);

    std::string input;
    bool as_json = false;
    bool show_povm = false;

    auto *solve_cmd = app.add_subcommand("solve", "Closed-form solution of a problem file");
    solve_cmd->add_option("file", input, "problem file (JSON)")->required();
    solve_cmd->add_flag("--json", as_json, "machine-readable output");
    solve_cmd->add_flag("--show-povm", show_povm, "include POVM matrices");

    pdisc::SearchConfig cfg;
    cfg.seed = default_seed();
    bool corrupt = false;
    std::string grid_spec;
    auto *verify_cmd = app.add_subcommand("verify", "Check closed forms against the oracles");
    verify_cmd->add_option("file", input, "problem file (JSON)")->required();
    verify_cmd->add_option("--restarts", cfg.restarts, "random restarts for the assisted oracle");
    verify_cmd->add_option("--seed", cfg.seed, "64-bit RNG seed");
    verify_cmd->add_option("--grid", grid_spec, "theta,phi grid resolution (e.g. 181,360)");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");
    verify_cmd->add_flag("--corrupt-closed-form", corrupt)->group("");

    std::string param_spec, csv_out;
    double from = 0.0, to = 1.0;
    int steps = 10;
    auto *sweep_cmd = app.add_subcommand("sweep", "CSV sweep of one parameter");
    sweep_cmd->add_option("file", input, "template problem file (JSON)")->required();
    sweep_cmd->add_option("--param", param_spec, "p1, q1[k] or q2[k]")->required();
    sweep_cmd->add_option("--from", from)->required();
    sweep_cmd->add_option("--to", to)->required();
    sweep_cmd->add_option("--steps", steps)->required();
    sweep_cmd->add_option("--out", csv_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitIo;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(input, as_json, show_povm);
        }
        if (*verify_cmd) {
            if (!grid_spec.empty()) {
                if (std::sscanf(grid_spec.c_str(), "%d,%d", &cfg.grid_theta, &cfg.grid_phi) != 2) {
                    throw CliError{kExitValidation, "--grid must be T,P"};
                }
            }
            return cmd_verify(input, cfg, as_json, corrupt);
        }
        return cmd_sweep(input, param_spec, from, to, steps, csv_out);
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
