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

/**
 * @file
 * Invariant suite for the canonical setup.
 *
 * run_verification() exercises every structural and statistical
 * invariant against a supplied network (normally the builtin canonical
 * network, or one rebuilt from a definition file). Wherever possible
 * the checks use network-derived states, so a miswired or mistuned
 * network fails loudly; closed-form cross-checks pin the convention.
 */

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tripath/analysis.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/nc_oracle.hpp"
#include "tripath/network.hpp"
#include "tripath/presets.hpp"

namespace tripath {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    std::size_t passed_count() const {
        std::size_t n = 0;
        for (const auto &c : checks) {
            n += c.passed ? 1 : 0;
        }
        return n;
    }
    std::size_t failed_count() const { return checks.size() - passed_count(); }
    bool all_passed() const { return failed_count() == 0; }
};

namespace detail {

/// |<u|v>| distance from 1; zero iff the states agree up to a phase.
inline double ray_distance(const PureState &u, const PureState &v) {
    return std::abs(std::abs(inner_product(u, v)) - 1.0);
}

class CheckRunner {
  public:
    explicit CheckRunner(VerificationReport &report) : report_(report) {}

    void run(const std::string &name, const std::function<std::pair<bool, std::string>()> &fn) {
        CheckResult result;
        result.name = name;
        try {
            const auto [ok, detail] = fn();
            result.passed = ok;
            result.detail = detail;
        } catch (const std::exception &e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(result));
    }

    /// Residual-style check: passes iff value <= bound.
    void residual(const std::string &name, double value, double bound) {
        run(name, [value, bound]() {
            return std::make_pair(value <= bound,
                                  "residual " + format_real(value) + " (bound " +
                                      format_real(bound) + ")");
        });
    }

  private:
    VerificationReport &report_;
};

} // namespace detail

/**
 * Runs the full invariant suite against `net`. The network is expected
 * to be the canonical five-stage preset (builtin or reloaded from a
 * file); all checks pass exactly for it.
 */
inline VerificationReport run_verification(const InterferometerNetwork &net) {
    VerificationReport report;
    detail::CheckRunner check(report);
    const double tight = 1e-12;

    const NetworkResiduals residuals = stage_residuals(net);
    {
        double worst = 0.0;
        for (double r : residuals.context_orthonormality) {
            worst = std::max(worst, r);
        }
        check.residual("contexts orthonormal", worst, kTol);
    }
    {
        double worst = 0.0;
        for (double r : residuals.stage_span_projector) {
            worst = std::max(worst, r);
        }
        check.residual("stage spans preserved", worst, kTol);
    }
    check.residual("total unitary is unitary", residuals.total_unitarity, kTol);

    check.run("parallel path untouched", [&]() {
        const PureState &first = net.input_context().state_of(net.parallel_path());
        double worst = 0.0;
        for (const auto &ctx : net.contexts()) {
            const PureState *s = ctx.find(net.parallel_path());
            if (s == nullptr) {
                return std::make_pair(false, "parallel path missing from context " +
                                                 std::to_string(ctx.index()));
            }
            for (std::size_t k = 0; k < kDim; ++k) {
                worst = std::max(worst, std::abs(s->amplitude(k) - first.amplitude(k)));
            }
        }
        return std::make_pair(worst <= kTol, "max amplitude drift " + detail::format_real(worst));
    });

    check.run("network matches builtin canonical bit-identically", [&]() {
        const InterferometerNetwork &builtin = canonical_network();
        if (net.stages() != builtin.stages()) {
            return std::make_pair(false, std::string("stage lists differ"));
        }
        if (net.contexts() != builtin.contexts()) {
            return std::make_pair(false, std::string("context bases differ"));
        }
        if (!(net.total_unitary() == builtin.total_unitary())) {
            return std::make_pair(false, std::string("total unitaries differ"));
        }
        return std::make_pair(true, std::string("stages, contexts and total unitary identical"));
    });

    check.run("named states appear in derived contexts", [&]() {
        double worst = 0.0;
        std::string missing;
        for (const auto &label : named_state_labels()) {
            if (label == "Phi_max") {
                continue;
            }
            if (!net.has_label(label)) {
                missing += (missing.empty() ? "" : ", ") + label;
                continue;
            }
            worst = std::max(worst, detail::ray_distance(named_state(label), net.state_of(label)));
        }
        if (!missing.empty()) {
            return std::make_pair(false, "labels not in network: " + missing);
        }
        return std::make_pair(worst <= kTol,
                              "max ray distance " + detail::format_real(worst));
    });

    check.run("inner product of N1 and N2 (closed form)", [&]() {
        const Complex g = inner_product(named_state("N1"), named_state("N2"));
        return std::make_pair(std::abs(g - Complex{-0.5}) <= tight,
                              "<N1|N2> = " + detail::format_real(g.real()));
    });

    check.run("inner product of N1 and N2 (derived)", [&]() {
        const Complex g = inner_product(net.state_of("N1"), net.state_of("N2"));
        return std::make_pair(std::abs(std::abs(g) - 0.5) <= tight,
                              "|<N1|N2>| = " + detail::format_real(std::abs(g)));
    });

    check.run("swap relations on derived states", [&]() {
        const Operator swap = swap_operator();
        double worst = 0.0;
        // f_NL is a swap eigenstate with eigenvalue +1.
        const PureState &f = net.state_of("f_NL");
        worst = std::max(worst,
                         std::abs(inner_product(apply_unitary(swap, f), f) - Complex{1.0}));
        // Swap exchanges N1 with N2 and b,0 with 0,b (up to global signs).
        worst = std::max(worst, detail::ray_distance(apply_unitary(swap, net.state_of("N1")),
                                                     net.state_of("N2")));
        worst = std::max(worst, detail::ray_distance(apply_unitary(swap, net.state_of("b,0")),
                                                     net.state_of("0,b")));
        // And is an involution.
        worst = std::max(worst, (swap * swap - Operator::identity()).max_abs_entry());
        return std::make_pair(worst <= tight, "max residual " + detail::format_real(worst));
    });

    check.run("total unitary exchanges 0,1 and 1,0 up to sign", [&]() {
        const Operator &u = net.total_unitary();
        double worst = 0.0;
        const auto expect = [&](std::size_t in, std::size_t out) {
            const PureState mapped = apply_unitary(u, PureState::basis_state(in));
            worst = std::max(worst,
                             detail::ray_distance(mapped, PureState::basis_state(out)));
        };
        expect(1, 2);
        expect(2, 1);
        expect(0, 0);
        expect(3, 3);
        return std::make_pair(worst <= tight, "max ray distance " + detail::format_real(worst));
    });

    check.run("probability closed forms across the visibility grid", [&]() {
        const PureState &f = net.state_of("f_NL");
        const PureState &n1 = net.state_of("N1");
        const PureState &n2 = net.state_of("N2");
        const PureState &a0 = net.state_of("a,0");
        const PureState &oa = net.state_of("0,a");
        double worst = 0.0;
        for (double eta : uniform_grid(0.0, 1.0, 101)) {
            const DensityOperator rho = rho_eta(eta);
            const double p_f = born_probability(rho, f);
            worst = std::max(worst, std::abs(p_f - (1.0 + eta) / 3.0));
            worst = std::max(worst, std::abs(born_probability(rho, n1) - (0.75 - p_f)));
            worst = std::max(worst, std::abs(born_probability(rho, n2) - (0.75 - p_f)));
            worst = std::max(worst, std::abs(born_probability(rho, a0) - 0.25));
            worst = std::max(worst, std::abs(born_probability(rho, oa) - 0.25));
        }
        return std::make_pair(worst <= tight, "max deviation " + detail::format_real(worst));
    });

    check.run("input-context probabilities are eta-independent", [&]() {
        double worst = 0.0;
        for (double eta : {0.0, 0.3, 0.7, 1.0}) {
            const ProbabilityReport r = probabilities(rho_eta(eta), net.input_context());
            worst = std::max(worst, std::abs(r.probability_of("0,1") - 0.5));
            worst = std::max(worst, std::abs(r.probability_of("1,0") - 0.5));
        }
        return std::make_pair(worst <= tight, "max deviation " + detail::format_real(worst));
    });

    check.run("conditional-current closed forms", [&]() {
        const PureState &n1 = net.state_of("N1");
        const PureState &n2 = net.state_of("N2");
        const PureState &o10 = net.output_context().state_of("1,0");
        const PureState &o01 = net.output_context().state_of("0,1");
        double worst = 0.0;
        for (double eta : uniform_grid(0.0, 1.0, 101)) {
            const DensityOperator rho = rho_eta(eta);
            const Complex w1 = weak_value(rho, n1, o10);
            const Complex w2 = weak_value(rho, n2, o01);
            const double expected = (0.5 - eta) / 3.0;
            worst = std::max(worst, std::abs(w1 - Complex{expected}));
            worst = std::max(worst, std::abs(w2 - Complex{expected}));
        }
        return std::make_pair(worst <= tight, "max deviation " + detail::format_real(worst));
    });

    check.run("witness from analytic and derived projectors agree", [&]() {
        double worst = 0.0;
        for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const DensityOperator rho = rho_eta(eta);
            const WitnessRecord analytic = witness(rho);
            const double derived = born_probability(rho, net.state_of("f_NL")) -
                                   born_probability(rho, net.state_of("a,0")) -
                                   born_probability(rho, net.state_of("0,a"));
            worst = std::max(worst, std::abs(analytic.witness - derived));
        }
        return std::make_pair(worst <= tight, "max deviation " + detail::format_real(worst));
    });

    check.run("witness and conditional-current sum cross zero at eta = 1/2", [&]() {
        const double w_half = witness_at(0.5).witness;
        const double s_half = weak_sum_lhs(rho_eta(0.5));
        bool ok = std::abs(w_half) <= tight && std::abs(s_half) <= tight;
        for (double eta : uniform_grid(0.0, 1.0, 101)) {
            const double w = witness_at(eta).witness;
            const double s = weak_sum_lhs(rho_eta(eta));
            if (eta < 0.5) {
                ok = ok && w < 0.0 && s > 0.0;
            } else if (eta > 0.5) {
                ok = ok && w > 0.0 && s < 0.0;
            }
            // The two certificates flip sign together.
            ok = ok && ((w > tight) == (s < -tight));
        }
        return std::make_pair(ok, "witness(1/2) = " + detail::format_real(w_half) +
                                      ", current sum(1/2) = " + detail::format_real(s_half));
    });

    check.run("weak-value table sums, orthogonality and continuity", [&]() {
        double worst_sum = 0.0;
        double worst_orth = 0.0;
        double worst_cont = 0.0;
        for (double eta : {0.3, 1.0}) {
            const DensityOperator rho = rho_eta(eta);
            for (const PathLabel &label : {PathLabel("1,0"), PathLabel("0,1")}) {
                const WeakValueTable table = conditional_current_table(rho, net, label);
                const PureState &o = net.output_context().state_of(label);
                for (const auto &row : table.contexts) {
                    worst_sum = std::max(worst_sum, std::abs(row.total() - Complex{1.0}));
                }
                for (const auto &ctx : net.contexts()) {
                    for (const auto &[l, s] : ctx.outcomes()) {
                        if (std::abs(inner_product(o, s)) < kTol) {
                            worst_orth = std::max(
                                worst_orth,
                                std::abs(table.value_in_context(
                                    static_cast<std::size_t>(ctx.index()), l)));
                        }
                    }
                }
                worst_cont = std::max(worst_cont, continuity_residual(table, net));
            }
        }
        const bool ok = worst_sum <= kTol && worst_orth <= kTol && worst_cont <= 1e-10;
        return std::make_pair(ok, "sum residual " + detail::format_real(worst_sum) +
                                      ", orthogonality residual " + detail::format_real(worst_orth) +
                                      ", continuity residual " + detail::format_real(worst_cont));
    });

    check.run("probabilities decompose over conditional currents", [&]() {
        double worst = 0.0;
        for (double eta : {0.3, 1.0}) {
            const DensityOperator rho = rho_eta(eta);
            std::vector<std::pair<double, WeakValueTable>> tables;
            for (const auto &[label, state] : net.output_context().outcomes()) {
                const double p = born_probability(rho, state);
                if (p > kPostselectionTol) {
                    tables.emplace_back(p, conditional_current_table(rho, net, label));
                }
            }
            for (const auto &ctx : net.contexts()) {
                for (const auto &[label, state] : ctx.outcomes()) {
                    double decomposed = 0.0;
                    for (const auto &[p, table] : tables) {
                        decomposed +=
                            p * table.value_in_context(static_cast<std::size_t>(ctx.index()), label)
                                    .real();
                    }
                    worst = std::max(worst,
                                     std::abs(decomposed - born_probability(rho, state)));
                }
            }
        }
        return std::make_pair(worst <= 1e-10, "max deviation " + detail::format_real(worst));
    });

    check.run("noncontextual bound and statements", [&]() {
        const auto assignments = enumerate_assignments(net);
        const int bound = nc_max_witness(net);
        const StatementReport statements = check_statements(net, assignments);
        const double w1 = witness(rho_eta(1.0)).witness;
        const bool ok = bound == 0 && statements.all_hold() &&
                        statements.invalid_assignments.empty() &&
                        std::abs(w1 - 1.0 / 6.0) <= tight && w1 > static_cast<double>(bound);
        return std::make_pair(
            ok, std::to_string(assignments.size()) + " assignments, bound " +
                    std::to_string(bound) + ", witness at full visibility " +
                    detail::format_real(w1) + ", statement counterexamples " +
                    std::to_string(statements.counterexample_count()));
    });

    return report;
}

} // namespace tripath
