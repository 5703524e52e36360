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
 * Beam-splitter interferometer networks over labeled paths.
 *
 * A network is an ordered list of two-path interferences acting inside
 * the fixed four-dimensional space. Each stage replaces the two
 * interfering outcomes of the previous measurement context by the two
 * fresh superpositions, producing a chain of orthonormal context bases
 * and a total unitary. One designated parallel path never interferes
 * and is shared by every context.
 *
 * Sign convention for every stage, applied uniformly:
 *   out1 = sqrt(R) * in1 - sqrt(1-R) * in2
 *   out2 = sqrt(1-R) * in1 + sqrt(R) * in2
 * i.e. the first-listed input contributes +sqrt(R) to the first-listed
 * output. All probabilities and conditional currents are invariant
 * under global signs of the basis states, so derived context states may
 * differ from their closed-form counterparts by a sign.
 */

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tripath/errors.hpp"
#include "tripath/hilbert.hpp"

namespace tripath {

using PathLabel = std::string;

/// One stage of a network definition, by label.
struct StageDefinition {
    std::array<PathLabel, 2> inputs;
    std::array<PathLabel, 2> outputs;
    double reflectivity = 0.5;

    friend bool operator==(const StageDefinition &, const StageDefinition &) = default;
};

/// The buildable description of a network: the four initial path labels
/// in basis order, the parallel (never-interfering) path, and the stages.
struct NetworkDefinition {
    std::array<PathLabel, 4> paths;
    PathLabel parallel;
    std::vector<StageDefinition> stages;

    friend bool operator==(const NetworkDefinition &, const NetworkDefinition &) = default;
};

/// A built stage: wiring plus reflectivity, 1-based index.
struct BeamSplitterStage {
    int index = 0;
    std::array<PathLabel, 2> inputs;
    std::array<PathLabel, 2> outputs;
    double reflectivity = 0.5;

    friend bool operator==(const BeamSplitterStage &, const BeamSplitterStage &) = default;
};

/// 2x2 real orthogonal mixing block for reflectivity R, in the fixed
/// sign convention (rows are outputs, columns inputs).
inline std::array<std::array<double, 2>, 2> beam_splitter_unitary(double R) {
    if (!(R >= 0.0 && R <= 1.0)) {
        throw DomainError("reflectivity must lie in [0, 1], got " +
                          detail::format_real(R));
    }
    const double r = std::sqrt(R);
    const double t = std::sqrt(1.0 - R);
    return {{{r, -t}, {t, r}}};
}

/**
 * One measurement context: an ordered list of four labeled outcomes.
 *
 * The constructor enforces shape (four outcomes, distinct labels) but
 * not orthonormality, so diagnostic code can represent and then flag a
 * corrupted context; see orthonormality_residual().
 */
class Context {
  public:
    using Outcome = std::pair<PathLabel, PureState>;

    Context(int index, std::vector<Outcome> outcomes)
        : index_(index), outcomes_(std::move(outcomes)) {
        if (outcomes_.size() != kDim) {
            throw NetworkBuildError("a context must have exactly 4 outcomes");
        }
        std::set<PathLabel> seen;
        for (const auto &[label, state] : outcomes_) {
            if (!seen.insert(label).second) {
                throw NetworkBuildError("duplicate outcome label '" + label +
                                        "' within a context");
            }
        }
    }

    int index() const { return index_; }
    const std::vector<Outcome> &outcomes() const { return outcomes_; }

    bool contains(const PathLabel &label) const { return find(label) != nullptr; }

    const PureState *find(const PathLabel &label) const {
        for (const auto &[l, s] : outcomes_) {
            if (l == label) {
                return &s;
            }
        }
        return nullptr;
    }

    const PureState &state_of(const PathLabel &label) const {
        const PureState *s = find(label);
        if (s == nullptr) {
            throw UnknownLabelError("label '" + label + "' is not an outcome of context " +
                                    std::to_string(index_));
        }
        return *s;
    }

    std::vector<PathLabel> labels() const {
        std::vector<PathLabel> out;
        out.reserve(outcomes_.size());
        for (const auto &[l, s] : outcomes_) {
            out.push_back(l);
        }
        return out;
    }

    friend bool operator==(const Context &, const Context &) = default;

  private:
    int index_;
    std::vector<Outcome> outcomes_;
};

/// max_ij |<i|j> - delta_ij| over the context's outcomes.
inline double orthonormality_residual(const Context &ctx) {
    double res = 0.0;
    const auto &out = ctx.outcomes();
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            const Complex g = inner_product(out[i].second, out[j].second);
            const Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            res = std::max(res, std::abs(g - expect));
        }
    }
    return res;
}

/**
 * A built interferometer network: stages, the context chain (one
 * context per stage boundary, contexts().size() == stages().size() + 1)
 * and the composed total unitary. Immutable and safely shareable.
 */
class InterferometerNetwork {
  public:
    const NetworkDefinition &definition() const { return definition_; }
    const std::vector<BeamSplitterStage> &stages() const { return stages_; }
    const std::vector<Context> &contexts() const { return contexts_; }
    const Operator &total_unitary() const { return total_unitary_; }
    const PathLabel &parallel_path() const { return definition_.parallel; }

    const Context &input_context() const { return contexts_.front(); }
    const Context &output_context() const { return contexts_.back(); }

    const Context &context_basis(std::size_t k) const {
        if (k >= contexts_.size()) {
            throw DomainError("context index " + std::to_string(k) +
                              " out of range [0, " + std::to_string(contexts_.size() - 1) + "]");
        }
        return contexts_[k];
    }

    /// All distinct outcome labels, lexicographically sorted.
    std::vector<PathLabel> distinct_labels() const {
        std::set<PathLabel> s;
        for (const auto &ctx : contexts_) {
            for (const auto &[l, st] : ctx.outcomes()) {
                s.insert(l);
            }
        }
        return {s.begin(), s.end()};
    }

    /// The state attached to a label at its first appearance. Labels
    /// denote rays: later appearances agree up to a global sign.
    const PureState &state_of(const PathLabel &label) const {
        for (const auto &ctx : contexts_) {
            if (const PureState *s = ctx.find(label)) {
                return *s;
            }
        }
        throw UnknownLabelError("label '" + label + "' does not occur in the network");
    }

    bool has_label(const PathLabel &label) const {
        for (const auto &ctx : contexts_) {
            if (ctx.contains(label)) {
                return true;
            }
        }
        return false;
    }

    friend InterferometerNetwork build_network(const NetworkDefinition &def);

    friend bool operator==(const InterferometerNetwork &, const InterferometerNetwork &) = default;

  private:
    InterferometerNetwork(NetworkDefinition def, std::vector<BeamSplitterStage> stages,
                          std::vector<Context> contexts, Operator total)
        : definition_(std::move(def)), stages_(std::move(stages)),
          contexts_(std::move(contexts)), total_unitary_(total) {}

    NetworkDefinition definition_;
    std::vector<BeamSplitterStage> stages_;
    std::vector<Context> contexts_;
    Operator total_unitary_;
};

/**
 * Assembles a network from its definition.
 *
 * Derives every context basis by applying the 2x2 stage blocks inside
 * the 4-dimensional space and composes the total unitary as the ordered
 * product of the embedded stage unitaries. Throws NetworkBuildError on
 * unknown input labels, label collisions, a label reused for a
 * different ray, or a non-orthonormal derived context.
 */
inline InterferometerNetwork build_network(const NetworkDefinition &def) {
    {
        std::set<PathLabel> seen;
        for (const auto &p : def.paths) {
            if (p.empty()) {
                throw NetworkBuildError("empty path label in 'paths'");
            }
            if (!seen.insert(p).second) {
                throw NetworkBuildError("duplicate path label '" + p + "' in 'paths'");
            }
        }
        if (seen.count(def.parallel) == 0) {
            throw NetworkBuildError("parallel path '" + def.parallel +
                                    "' is not one of the initial paths");
        }
    }

    std::vector<Context::Outcome> current;
    current.reserve(kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
        current.emplace_back(def.paths[k], PureState::basis_state(k));
    }

    // First-seen ray per label, to keep reused labels consistent.
    std::map<PathLabel, PureState> known;
    for (const auto &[l, s] : current) {
        known.emplace(l, s);
    }

    std::vector<Context> contexts;
    contexts.emplace_back(0, current);
    std::vector<BeamSplitterStage> stages;
    Operator total = Operator::identity();

    int index = 1;
    for (const auto &sd : def.stages) {
        const std::string where = "stage " + std::to_string(index);
        if (!(sd.reflectivity >= 0.0 && sd.reflectivity <= 1.0)) {
            throw NetworkBuildError(where + ": reflectivity must lie in [0, 1], got " +
                                    detail::format_real(sd.reflectivity));
        }
        if (sd.inputs[0] == sd.inputs[1]) {
            throw NetworkBuildError(where + ": the two input labels must differ");
        }
        if (sd.outputs[0] == sd.outputs[1]) {
            throw NetworkBuildError(where + ": the two output labels must differ");
        }
        for (const auto &l : sd.inputs) {
            if (l == def.parallel) {
                throw NetworkBuildError(where + ": the parallel path '" + l +
                                        "' cannot interfere");
            }
        }
        for (const auto &l : sd.outputs) {
            if (l == def.parallel) {
                throw NetworkBuildError(where + ": the parallel path '" + l +
                                        "' cannot be a stage output");
            }
            if (l.empty()) {
                throw NetworkBuildError(where + ": empty output label");
            }
        }

        std::size_t pos1 = kDim;
        std::size_t pos2 = kDim;
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (current[k].first == sd.inputs[0]) {
                pos1 = k;
            }
            if (current[k].first == sd.inputs[1]) {
                pos2 = k;
            }
        }
        if (pos1 == kDim) {
            throw NetworkBuildError(where + ": unknown input label '" + sd.inputs[0] +
                                    "' (not in the preceding context)");
        }
        if (pos2 == kDim) {
            throw NetworkBuildError(where + ": unknown input label '" + sd.inputs[1] +
                                    "' (not in the preceding context)");
        }
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (k == pos1 || k == pos2) {
                continue;
            }
            for (const auto &l : sd.outputs) {
                if (current[k].first == l) {
                    throw NetworkBuildError(where + ": output label '" + l +
                                            "' collides with an untouched path");
                }
            }
        }

        const auto block = beam_splitter_unitary(sd.reflectivity);
        const PureState &u = current[pos1].second;
        const PureState &v = current[pos2].second;
        PureState::Amplitudes xa{};
        PureState::Amplitudes ya{};
        for (std::size_t k = 0; k < kDim; ++k) {
            xa[k] = block[0][0] * u.amplitude(k) + block[0][1] * v.amplitude(k);
            ya[k] = block[1][0] * u.amplitude(k) + block[1][1] * v.amplitude(k);
        }
        const PureState x(xa);
        const PureState y(ya);

        for (const auto &[label, state] :
             {std::pair<const PathLabel &, const PureState &>{sd.outputs[0], x},
              std::pair<const PathLabel &, const PureState &>{sd.outputs[1], y}}) {
            const auto it = known.find(label);
            if (it != known.end()) {
                const double overlap = std::abs(inner_product(it->second, state));
                if (std::abs(overlap - 1.0) > kTol) {
                    throw NetworkBuildError(where + ": output label '" + label +
                                            "' reuses an existing label for a different state");
                }
            }
        }

        // Embedded stage unitary: u -> x, v -> y, untouched rails fixed.
        Operator stage_u = Operator::outer(x, u) + Operator::outer(y, v);
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (k != pos1 && k != pos2) {
                stage_u = stage_u + Operator::outer(current[k].second, current[k].second);
            }
        }
        total = stage_u * total;

        current[pos1] = {sd.outputs[0], x};
        current[pos2] = {sd.outputs[1], y};
        Context next(index, current);
        if (orthonormality_residual(next) > kTol) {
            throw NetworkBuildError(where + ": derived context is not orthonormal");
        }
        contexts.push_back(std::move(next));
        known.emplace(sd.outputs[0], x);
        known.emplace(sd.outputs[1], y);
        stages.push_back(BeamSplitterStage{index, sd.inputs, sd.outputs, sd.reflectivity});
        ++index;
    }

    if (total.unitarity_residual() > kTol) {
        throw NetworkBuildError("composed total unitary failed the unitarity check");
    }

    return InterferometerNetwork(def, std::move(stages), std::move(contexts), total);
}

/// Residuals of the structural invariants of a built network.
struct NetworkResiduals {
    std::vector<double> context_orthonormality; ///< per context
    std::vector<double> stage_span_projector;   ///< per stage: max |P_in - P_out|
    double total_unitarity = 0.0;

    double max_residual() const {
        double m = total_unitarity;
        for (double r : context_orthonormality) {
            m = std::max(m, r);
        }
        for (double r : stage_span_projector) {
            m = std::max(m, r);
        }
        return m;
    }
};

/**
 * Recomputes all structural residuals from the stored contexts:
 * orthonormality of every context, equality of the input-pair and
 * output-pair span projectors at every stage, and unitarity of the
 * total unitary.
 */
inline NetworkResiduals stage_residuals(const InterferometerNetwork &net) {
    NetworkResiduals out;
    for (const auto &ctx : net.contexts()) {
        out.context_orthonormality.push_back(orthonormality_residual(ctx));
    }
    for (const auto &stage : net.stages()) {
        const Context &before = net.contexts()[static_cast<std::size_t>(stage.index) - 1];
        const Context &after = net.contexts()[static_cast<std::size_t>(stage.index)];
        const PureState &u = before.state_of(stage.inputs[0]);
        const PureState &v = before.state_of(stage.inputs[1]);
        const PureState &x = after.state_of(stage.outputs[0]);
        const PureState &y = after.state_of(stage.outputs[1]);
        const Operator p_in = Operator::outer(u, u) + Operator::outer(v, v);
        const Operator p_out = Operator::outer(x, x) + Operator::outer(y, y);
        out.stage_span_projector.push_back((p_in - p_out).max_abs_entry());
    }
    out.total_unitarity = net.total_unitary().unitarity_residual();
    return out;
}

} // namespace tripath
