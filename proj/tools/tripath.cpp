// Copyright 2026 The tripath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
// Results go to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 success, 1 usage or parse error, 2 domain error
// (invalid state, undefined postselection, bad network content),
// 3 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripath/tripath.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tripath;

struct CommonOptions {
    std::string network = "canonical";
    std::string format;
    std::string output;
};

void add_common_options(CLI::App *cmd, CommonOptions &opts, bool with_network = true) {
    if (with_network) {
        cmd->add_option("--network", opts.network,
                        "Network source: 'canonical' or a definition-file path")
            ->capture_default_str();
    }
    cmd->add_option("--format", opts.format,
                    "Output format: json or csv (default json, or $TRIPATH_FORMAT)");
    cmd->add_option("-o,--output", opts.output, "Write results to a file instead of stdout");
}

std::string resolve_format(const CommonOptions &opts) {
    std::string fmt = opts.format;
    if (fmt.empty()) {
        if (const char *env = std::getenv("TRIPATH_FORMAT")) {
            fmt = env;
        }
    }
    if (fmt.empty()) {
        fmt = "json";
    }
    if (fmt != "json" && fmt != "csv") {
        throw ParseError("unknown output format '" + fmt + "' (expected json or csv)");
    }
    return fmt;
}

InterferometerNetwork load_network(const std::string &source) {
    if (source == "canonical") {
        return canonical_network();
    }
    return build_network(load_network_definition(source));
}

// 17 significant digits: enough to round-trip any double.
std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

Complex parse_complex_amplitude(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) {
        throw ParseError("empty amplitude");
    }
    const char last = s.back();
    if (last != 'i' && last != 'j') {
        return Complex{parse_real(s), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split "a+bi" / "a-bi" at the sign of the imaginary part. Signs in
    // position 0 or directly after 'e'/'E' belong to a number.
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            const std::string real_part = body.substr(0, k);
            std::string imag_part = body.substr(k);
            if (imag_part == "+") {
                imag_part = "1";
            } else if (imag_part == "-") {
                imag_part = "-1";
            }
            return Complex{parse_real(real_part), parse_real(imag_part)};
        }
    }
    if (body.empty()) {
        return Complex{0.0, 1.0};
    }
    if (body == "-") {
        return Complex{0.0, -1.0};
    }
    return Complex{0.0, parse_real(body)};
}

// "phi-max" | "eta=<x>" | four comma-separated complex amplitudes.
DensityOperator parse_state_spec(const std::string &spec) {
    if (spec == "phi-max") {
        return DensityOperator::pure(named_state("Phi_max"));
    }
    if (spec.rfind("eta=", 0) == 0) {
        return rho_eta(parse_real(spec.substr(4)));
    }
    std::vector<std::string> parts;
    std::string current;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != kDim) {
        throw ParseError("state spec must be 'phi-max', 'eta=<x>' or " +
                         std::to_string(kDim) + " comma-separated amplitudes");
    }
    PureState::Amplitudes amps;
    for (std::size_t k = 0; k < kDim; ++k) {
        amps[k] = parse_complex_amplitude(parts[k]);
    }
    double n2 = 0.0;
    for (const auto &a : amps) {
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > 1e-6) {
        throw DomainError("amplitude list has squared norm " + fmt17(n2) +
                          "; expected 1 within 1e-6");
    }
    return DensityOperator::pure(PureState::normalized(amps));
}

std::vector<double> parse_grid(const std::string &spec) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != 3) {
        throw ParseError("grid spec must be start:stop:count, got '" + spec + "'");
    }
    const double start = parse_real(parts[0]);
    const double stop = parse_real(parts[1]);
    long count = 0;
    try {
        count = std::stol(parts[2]);
    } catch (const std::exception &) {
        throw ParseError("grid count '" + parts[2] + "' is not an integer");
    }
    if (count < 1 || count > 10'000'000) {
        throw ParseError("grid count must be in [1, 10^7]");
    }
    return uniform_grid(start, stop, static_cast<int>(count));
}

void emit(const CommonOptions &opts, const std::string &text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file '" + opts.output + "'");
    }
    out << text;
    if (text.empty() || text.back() != '\n') {
        out << '\n';
    }
}

int run_simulate(const CommonOptions &opts, const std::string &state_spec) {
    const std::string format = resolve_format(opts);
    const InterferometerNetwork net = load_network(opts.network);
    const DensityOperator rho = parse_state_spec(state_spec);

    std::vector<ProbabilityReport> reports;
    reports.reserve(net.contexts().size());
    for (const auto &ctx : net.contexts()) {
        reports.push_back(probabilities(rho, ctx));
    }

    if (format == "json") {
        ordered_json doc;
        doc["network"] = opts.network;
        doc["state"] = state_spec;
        doc["contexts"] = ordered_json::array();
        for (const auto &report : reports) {
            ordered_json ctx;
            ctx["index"] = report.context_index;
            ctx["outcomes"] = ordered_json::array();
            for (const auto &e : report.entries) {
                ctx["outcomes"].push_back({{"label", e.label}, {"probability", e.probability}});
            }
            ctx["total"] = report.total();
            doc["contexts"].push_back(ctx);
        }
        emit(opts, doc.dump(2));
    } else {
        std::string csv = "context,label,probability\n";
        for (const auto &report : reports) {
            for (const auto &e : report.entries) {
                csv += std::to_string(report.context_index) + "," + csv_quote(e.label) + "," +
                       fmt17(e.probability) + "\n";
            }
        }
        emit(opts, csv);
    }
    return 0;
}

int run_weak_values(const CommonOptions &opts, const std::string &state_spec,
                    const std::string &postselect) {
    const std::string format = resolve_format(opts);
    const InterferometerNetwork net = load_network(opts.network);
    const DensityOperator rho = parse_state_spec(state_spec);
    const WeakValueTable table = conditional_current_table(rho, net, postselect);
    const double residual = continuity_residual(table, net);

    if (format == "json") {
        ordered_json doc;
        doc["network"] = opts.network;
        doc["state"] = state_spec;
        doc["postselection"] = table.postselection;
        doc["postselection_probability"] = table.postselection_probability;
        doc["continuity_residual"] = residual;
        doc["contexts"] = ordered_json::array();
        for (const auto &row : table.contexts) {
            ordered_json ctx;
            ctx["index"] = row.context_index;
            ctx["entries"] = ordered_json::array();
            for (const auto &e : row.entries) {
                ctx["entries"].push_back(
                    {{"label", e.label}, {"re", e.value.real()}, {"im", e.value.imag()}});
            }
            doc["contexts"].push_back(ctx);
        }
        emit(opts, doc.dump(2));
    } else {
        std::string csv =
            "postselection,postselection_probability,continuity_residual,context,label,re,im\n";
        const std::string prefix = csv_quote(table.postselection) + "," +
                                   fmt17(table.postselection_probability) + "," +
                                   fmt17(residual) + ",";
        for (const auto &row : table.contexts) {
            for (const auto &e : row.entries) {
                csv += prefix + std::to_string(row.context_index) + "," + csv_quote(e.label) +
                       "," + fmt17(e.value.real()) + "," + fmt17(e.value.imag()) + "\n";
            }
        }
        emit(opts, csv);
    }
    return 0;
}

int run_sweep(const CommonOptions &opts, const std::string &grid_spec) {
    const std::string format = resolve_format(opts);
    const std::vector<double> grid = parse_grid(grid_spec);
    const std::vector<WitnessRecord> records = visibility_sweep(grid);

    std::vector<std::pair<double, double>> pn; // (p_n1, p_n2) per row
    pn.reserve(grid.size());
    for (double eta : grid) {
        const DensityOperator rho = rho_eta(eta);
        pn.emplace_back(born_probability(rho, named_state("N1")),
                        born_probability(rho, named_state("N2")));
    }

    if (format == "json") {
        ordered_json doc;
        doc["grid"] = grid_spec;
        doc["records"] = ordered_json::array();
        for (std::size_t k = 0; k < records.size(); ++k) {
            const WitnessRecord &r = records[k];
            doc["records"].push_back({{"eta", r.eta},
                                      {"p_fnl", r.p_fnl},
                                      {"p_a0", r.p_a0},
                                      {"p_0a", r.p_0a},
                                      {"witness", r.witness},
                                      {"w_n1_given_10", r.w_n1_given_10},
                                      {"w_n2_given_01", r.w_n2_given_01},
                                      {"p_n1", pn[k].first},
                                      {"p_n2", pn[k].second}});
        }
        emit(opts, doc.dump(2));
    } else {
        std::string csv = "eta,p_fnl,p_a0,p_0a,witness,w_n1_given_10,w_n2_given_01,p_n1,p_n2\n";
        for (std::size_t k = 0; k < records.size(); ++k) {
            const WitnessRecord &r = records[k];
            csv += fmt17(r.eta) + "," + fmt17(r.p_fnl) + "," + fmt17(r.p_a0) + "," +
                   fmt17(r.p_0a) + "," + fmt17(r.witness) + "," + fmt17(r.w_n1_given_10) + "," +
                   fmt17(r.w_n2_given_01) + "," + fmt17(pn[k].first) + "," +
                   fmt17(pn[k].second) + "\n";
        }
        emit(opts, csv);
    }
    return 0;
}

int run_oracle(const CommonOptions &opts) {
    const std::string format = resolve_format(opts);
    const InterferometerNetwork net = load_network(opts.network);
    const auto assignments = enumerate_assignments(net);
    const int bound = nc_max_witness(net);
    const StatementReport statements = check_statements(net, assignments);
    const double w1 = witness(rho_eta(1.0)).witness;
    const char *convention =
        "the parallel path is included as a fourth outcome of every context";

    if (format == "json") {
        ordered_json doc;
        doc["network"] = opts.network;
        doc["convention"] = convention;
        doc["assignment_count"] = assignments.size();
        doc["assignments"] = ordered_json::array();
        for (const auto &a : assignments) {
            doc["assignments"].push_back(a.selected());
        }
        doc["nc_max_witness"] = bound;
        doc["witness_at_full_visibility"] = w1;
        doc["violation_certified"] = w1 > static_cast<double>(bound);
        doc["statements"] = {
            {"checked", statements.assignments_checked},
            {"invalid_assignments", statements.invalid_assignments.size()},
            {"statement1",
             {{"description", statements.statement1.description},
              {"counterexamples", statements.statement1.counterexamples.size()}}},
            {"statement2",
             {{"description", statements.statement2.description},
              {"counterexamples", statements.statement2.counterexamples.size()}}},
            {"combined",
             {{"description", statements.combined.description},
              {"counterexamples", statements.combined.counterexamples.size()}}},
            {"all_hold", statements.all_hold()},
        };
        emit(opts, doc.dump(2));
    } else {
        std::string csv = "key,value\n";
        csv += "convention," + csv_quote(convention) + "\n";
        csv += "assignment_count," + std::to_string(assignments.size()) + "\n";
        csv += "nc_max_witness," + std::to_string(bound) + "\n";
        csv += "witness_at_full_visibility," + fmt17(w1) + "\n";
        csv += std::string("violation_certified,") +
               (w1 > static_cast<double>(bound) ? "true" : "false") + "\n";
        csv += "statement_counterexamples," +
               std::to_string(statements.counterexample_count()) + "\n";
        emit(opts, csv);
    }
    return 0;
}

int run_verify(const CommonOptions &opts, bool as_json) {
    const InterferometerNetwork net = load_network(opts.network);
    const VerificationReport report = run_verification(net);

    if (as_json) {
        ordered_json doc;
        doc["network"] = opts.network;
        doc["checks"] = ordered_json::array();
        for (const auto &c : report.checks) {
            doc["checks"].push_back(
                {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        doc["passed"] = report.passed_count();
        doc["failed"] = report.failed_count();
        doc["all_passed"] = report.all_passed();
        emit(opts, doc.dump(2));
    } else {
        std::string text;
        for (const auto &c : report.checks) {
            text += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name;
            if (!c.detail.empty()) {
                text += " -- " + c.detail;
            }
            text += "\n";
        }
        text += std::to_string(report.passed_count()) + " passed, " +
                std::to_string(report.failed_count()) + " failed\n";
        emit(opts, text);
    }
    return report.all_passed() ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Three-path interferometer simulator for two-qubit collective interference.\n"
                 "Set TRIPATH_FORMAT=json|csv to change the default output format."};
    app.require_subcommand(1);

    CommonOptions sim_opts;
    std::string sim_state = "phi-max";
    CLI::App *sim = app.add_subcommand(
        "simulate", "Born probabilities of every outcome in every measurement context");
    add_common_options(sim, sim_opts);
    sim->add_option("--state", sim_state,
                    "Input state: phi-max | eta=<x> | four comma-separated amplitudes")
        ->capture_default_str();

    CommonOptions wv_opts;
    std::string wv_state = "phi-max";
    std::string wv_postselect;
    CLI::App *wv = app.add_subcommand(
        "weak-values", "Conditional probability currents for one postselected output");
    add_common_options(wv, wv_opts);
    wv->add_option("--state", wv_state, "Input state (as for simulate)")->capture_default_str();
    wv->add_option("--postselect", wv_postselect, "Output-context outcome label, e.g. 1,0")
        ->required();

    CommonOptions sweep_opts;
    std::string sweep_grid = "0:1:101";
    CLI::App *sweep = app.add_subcommand(
        "sweep", "Witness and conditional currents across the visibility family");
    add_common_options(sweep, sweep_opts, /*with_network=*/false);
    sweep->add_option("--grid", sweep_grid, "Visibility grid start:stop:count")
        ->capture_default_str();

    CommonOptions oracle_opts;
    CLI::App *oracle = app.add_subcommand(
        "oracle", "Enumerate noncontextual assignments and certify the witness bound");
    add_common_options(oracle, oracle_opts);

    CommonOptions verify_opts;
    bool verify_json = false;
    CLI::App *verify = app.add_subcommand("verify", "Run the full invariant suite");
    add_common_options(verify, verify_opts);
    verify->add_flag("--json", verify_json, "Machine-readable results (same as --format json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);
        }
        app.exit(e);
        return 1;
    }

    try {
        if (sim->parsed()) {
            return run_simulate(sim_opts, sim_state);
        }
        if (wv->parsed()) {
            return run_weak_values(wv_opts, wv_state, wv_postselect);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_opts, sweep_grid);
        }
        if (oracle->parsed()) {
            return run_oracle(oracle_opts);
        }
        if (verify->parsed()) {
            // Human-readable by default; --json (or an explicit
            // --format json) switches to machine-readable output.
            return run_verify(verify_opts, verify_json || verify_opts.format == "json");
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
