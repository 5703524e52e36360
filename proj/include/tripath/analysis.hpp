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
 * Statistics on interferometer networks: per-context Born
 * probabilities, the noncontextual-inequality witness
 * P(f_NL) - P(a,0) - P(0,a), conditional probability currents (weak
 * values / Kirkwood-Dirac data), current-continuity residuals, and
 * sweeps over the visibility family rho(eta).
 *
 * Closed forms for rho(eta) on the canonical network:
 *   P(f_NL)        = (1 + eta) / 3
 *   P(N1) = P(N2)  = 3/4 - P(f_NL)
 *   P(a,0)=P(0,a)  = 1/4
 *   W(N1|1,0) = W(N2|0,1) = (1/2 - eta) / 3
 * The witness and W(N2|0,1) + W(N1|1,0) change sign together at
 * eta = 1/2.
 */

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tripath/errors.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/network.hpp"
#include "tripath/presets.hpp"

namespace tripath {

/// Born probabilities of one context's outcomes.
struct ProbabilityReport {
    struct Entry {
        PathLabel label;
        double probability;
    };

    int context_index = 0;
    std::vector<Entry> entries;

    double total() const {
        double t = 0.0;
        for (const auto &e : entries) {
            t += e.probability;
        }
        return t;
    }

    double probability_of(const PathLabel &label) const {
        for (const auto &e : entries) {
            if (e.label == label) {
                return e.probability;
            }
        }
        throw UnknownLabelError("label '" + label + "' is not in this probability report");
    }
};

/// Born probability of every outcome of a context.
inline ProbabilityReport probabilities(const DensityOperator &rho, const Context &ctx) {
    ProbabilityReport report;
    report.context_index = ctx.index();
    report.entries.reserve(ctx.outcomes().size());
    for (const auto &[label, state] : ctx.outcomes()) {
        report.entries.push_back({label, born_probability(rho, state)});
    }
    return report;
}

/**
 * Weak value of outcome |i> conditioned on postselecting |o>:
 *   W(i|o) = <o|i><i|rho|o> / <o|rho|o>.
 *
 * Invariant under global signs of |i> and |o|. Throws
 * UndefinedPostselectionError when <o|rho|o> <= kPostselectionTol:
 * conditioning on an outcome that never occurs is undefined, never a
 * silent 0/0.
 */
inline Complex weak_value(const DensityOperator &rho, const PureState &path,
                          const PureState &postselection) {
    const double p_post = matrix_element(postselection, rho.matrix(), postselection).real();
    if (p_post <= kPostselectionTol) {
        throw UndefinedPostselectionError(
            "postselection probability " + detail::format_real(p_post) +
            " is below the defined-postselection threshold");
    }
    const Complex oi = inner_product(postselection, path);
    const Complex iro = matrix_element(path, rho.matrix(), postselection);
    return oi * iro / p_post;
}

/**
 * The conditional-current table: the weak value of every path in every
 * context of a network, conditioned on one output-context outcome.
 *
 * Within each context the (complex) entries sum to 1; paths orthogonal
 * to the postselection carry weak value 0.
 */
struct WeakValueTable {
    struct Entry {
        PathLabel label;
        Complex value;
    };
    struct ContextEntries {
        int context_index = 0;
        std::vector<Entry> entries;

        Complex total() const {
            Complex t{0.0, 0.0};
            for (const auto &e : entries) {
                t += e.value;
            }
            return t;
        }
    };

    PathLabel postselection;
    double postselection_probability = 0.0;
    std::vector<ContextEntries> contexts;

    /// First occurrence of the label; shared labels have one value.
    Complex value_of(const PathLabel &label) const {
        for (const auto &ctx : contexts) {
            for (const auto &e : ctx.entries) {
                if (e.label == label) {
                    return e.value;
                }
            }
        }
        throw UnknownLabelError("label '" + label + "' is not in this weak-value table");
    }

    Complex value_in_context(std::size_t context_index, const PathLabel &label) const {
        if (context_index >= contexts.size()) {
            throw DomainError("context index out of range");
        }
        for (const auto &e : contexts[context_index].entries) {
            if (e.label == label) {
                return e.value;
            }
        }
        throw UnknownLabelError("label '" + label + "' is not in context " +
                                std::to_string(context_index));
    }
};

/**
 * Builds the full conditional-current table for postselection on the
 * output-context outcome named by `postselect`.
 */
inline WeakValueTable conditional_current_table(const DensityOperator &rho,
                                                const InterferometerNetwork &net,
                                                const PathLabel &postselect) {
    const PureState &o = net.output_context().state_of(postselect);
    WeakValueTable table;
    table.postselection = postselect;
    table.postselection_probability = born_probability(rho, o);
    if (table.postselection_probability <= kPostselectionTol) {
        throw UndefinedPostselectionError("postselection '" + postselect +
                                          "' has probability " +
                                          detail::format_real(table.postselection_probability));
    }
    for (const auto &ctx : net.contexts()) {
        WeakValueTable::ContextEntries row;
        row.context_index = ctx.index();
        row.entries.reserve(ctx.outcomes().size());
        for (const auto &[label, state] : ctx.outcomes()) {
            row.entries.push_back({label, weak_value(rho, state, o)});
        }
        table.contexts.push_back(std::move(row));
    }
    return table;
}

/**
 * Continuity residual of a conditional-current table: the largest
 * violation, over all stages, of
 *   W(in1|o) + W(in2|o) = W(out1|o) + W(out2|o).
 * Zero (to rounding) for any table built from a genuine network, since
 * each stage preserves the span of its two rails.
 */
inline double continuity_residual(const WeakValueTable &table,
                                  const InterferometerNetwork &net) {
    double res = 0.0;
    for (const auto &stage : net.stages()) {
        const std::size_t before = static_cast<std::size_t>(stage.index) - 1;
        const std::size_t after = static_cast<std::size_t>(stage.index);
        const Complex in_sum = table.value_in_context(before, stage.inputs[0]) +
                               table.value_in_context(before, stage.inputs[1]);
        const Complex out_sum = table.value_in_context(after, stage.outputs[0]) +
                                table.value_in_context(after, stage.outputs[1]);
        res = std::max(res, std::abs(in_sum - out_sum));
    }
    return res;
}

/**
 * One row of the witness analysis. For records produced from the
 * rho(eta) family, `eta` holds the visibility; otherwise it is NaN.
 * The two conditional currents are the real parts of W(N1|1,0) and
 * W(N2|0,1); they are exactly real for the rho(eta) family, and NaN
 * when the corresponding postselection has zero probability.
 */
struct WitnessRecord {
    double eta = std::numeric_limits<double>::quiet_NaN();
    double p_fnl = 0.0;
    double p_a0 = 0.0;
    double p_0a = 0.0;
    double witness = 0.0; ///< p_fnl - p_a0 - p_0a; positive values violate the noncontextual bound
    double w_n1_given_10 = std::numeric_limits<double>::quiet_NaN();
    double w_n2_given_01 = std::numeric_limits<double>::quiet_NaN();
};

/**
 * Witness of the noncontextual inequality P(f_NL) <= P(a,0) + P(0,a),
 * computed from the closed-form projectors (independent of any
 * network-derived states).
 */
inline WitnessRecord witness(const DensityOperator &rho) {
    WitnessRecord rec;
    rec.p_fnl = born_probability(rho, named_state("f_NL"));
    rec.p_a0 = born_probability(rho, named_state("a,0"));
    rec.p_0a = born_probability(rho, named_state("0,a"));
    rec.witness = rec.p_fnl - rec.p_a0 - rec.p_0a;
    try {
        rec.w_n1_given_10 = weak_value(rho, named_state("N1"), named_state("1,0")).real();
    } catch (const UndefinedPostselectionError &) {
        // leave NaN
    }
    try {
        rec.w_n2_given_01 = weak_value(rho, named_state("N2"), named_state("0,1")).real();
    } catch (const UndefinedPostselectionError &) {
        // leave NaN
    }
    return rec;
}

/// Witness record for rho(eta), with the visibility recorded.
inline WitnessRecord witness_at(double eta) {
    WitnessRecord rec = witness(rho_eta(eta));
    rec.eta = eta;
    return rec;
}

/**
 * Real part of W(N2|0,1) + W(N1|1,0). Nonnegative in every
 * noncontextual model; negativity certifies that the conditional
 * currents cannot be classical. Real for the rho(eta) family.
 */
inline double weak_sum_lhs(const DensityOperator &rho) {
    const Complex sum = weak_value(rho, named_state("N2"), named_state("0,1")) +
                        weak_value(rho, named_state("N1"), named_state("1,0"));
    return sum.real();
}

/// count uniformly spaced values from start to stop inclusive.
inline std::vector<double> uniform_grid(double start, double stop, int count) {
    if (count < 1) {
        throw DomainError("grid count must be at least 1");
    }
    if (count == 1) {
        return {start};
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        grid.push_back(start + ((stop - start) * static_cast<double>(k)) /
                                   static_cast<double>(count - 1));
    }
    return grid;
}

/// One witness record per grid point; rejects values outside [0, 1].
inline std::vector<WitnessRecord> visibility_sweep(std::span<const double> etas) {
    std::vector<WitnessRecord> records;
    records.reserve(etas.size());
    for (double eta : etas) {
        records.push_back(witness_at(eta));
    }
    return records;
}

} // namespace tripath
