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
 * Brute-force oracle over deterministic noncontextual outcome
 * assignments.
 *
 * An assignment gives every distinct path label a definite value 0 or 1
 * (shared labels carry a single value across all contexts) subject to:
 *   - exactly one outcome per context is 1 (the parallel path counts as
 *     a fourth outcome of every context), and
 *   - no two mutually exclusive outcomes are both 1, where exclusivity
 *     is derived numerically from the states (|<u|v>| < kTol).
 * Exhaustive enumeration over this tiny label set yields the exact
 * integer bound of the inequality witness; linearity extends the bound
 * to all mixtures of assignments.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tripath/errors.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/network.hpp"

namespace tripath {

/// A deterministic 0/1 valuation of all distinct outcome labels.
struct NCAssignment {
    std::map<PathLabel, int> valuation; // lexicographic by label

    int value_of(const PathLabel &label) const {
        const auto it = valuation.find(label);
        return it == valuation.end() ? 0 : it->second;
    }

    /// Labels valued 1, in lexicographic order.
    std::vector<PathLabel> selected() const {
        std::vector<PathLabel> out;
        for (const auto &[label, v] : valuation) {
            if (v == 1) {
                out.push_back(label);
            }
        }
        return out;
    }

    friend bool operator==(const NCAssignment &, const NCAssignment &) = default;
};

namespace detail {

struct LabelUniverse {
    std::vector<PathLabel> labels;           // lexicographic
    std::vector<std::uint32_t> context_masks;
    std::vector<std::uint32_t> exclusive_pair_masks;
};

inline LabelUniverse label_universe(const InterferometerNetwork &net) {
    LabelUniverse u;
    u.labels = net.distinct_labels();
    if (u.labels.size() > 24) {
        throw DomainError("assignment enumeration supports at most 24 distinct labels");
    }
    std::map<PathLabel, std::size_t> pos;
    for (std::size_t k = 0; k < u.labels.size(); ++k) {
        pos[u.labels[k]] = k;
    }
    // Distinct contexts as label sets (the shared input/output context
    // contributes one constraint).
    std::vector<std::uint32_t> seen;
    for (const auto &ctx : net.contexts()) {
        std::uint32_t mask = 0;
        for (const auto &[label, state] : ctx.outcomes()) {
            mask |= std::uint32_t{1} << pos.at(label);
        }
        if (std::find(seen.begin(), seen.end(), mask) == seen.end()) {
            seen.push_back(mask);
        }
    }
    u.context_masks = std::move(seen);
    for (std::size_t i = 0; i < u.labels.size(); ++i) {
        for (std::size_t j = i + 1; j < u.labels.size(); ++j) {
            const Complex g =
                inner_product(net.state_of(u.labels[i]), net.state_of(u.labels[j]));
            if (std::abs(g) < kTol) {
                u.exclusive_pair_masks.push_back((std::uint32_t{1} << i) |
                                                 (std::uint32_t{1} << j));
            }
        }
    }
    return u;
}

inline bool admissible(const LabelUniverse &u, std::uint32_t mask) {
    for (const std::uint32_t ctx : u.context_masks) {
        if (std::popcount(mask & ctx) != 1) {
            return false;
        }
    }
    for (const std::uint32_t pair : u.exclusive_pair_masks) {
        if ((mask & pair) == pair) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/**
 * Every admissible assignment, exhaustively, ordered by the valuation
 * read as a binary number over the lexicographic label order.
 */
inline std::vector<NCAssignment> enumerate_assignments(const InterferometerNetwork &net) {
    const detail::LabelUniverse u = detail::label_universe(net);
    std::vector<NCAssignment> out;
    const std::uint32_t end = std::uint32_t{1} << u.labels.size();
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (!detail::admissible(u, mask)) {
            continue;
        }
        NCAssignment a;
        for (std::size_t k = 0; k < u.labels.size(); ++k) {
            a.valuation[u.labels[k]] = (mask >> k) & 1u;
        }
        out.push_back(std::move(a));
    }
    return out;
}

/**
 * Exact integer maximum of v(f_NL) - v(a,0) - v(0,a) over all
 * admissible assignments; labels absent from the network contribute 0.
 * By linearity this bounds the witness in every noncontextual model.
 */
inline int nc_max_witness(const InterferometerNetwork &net) {
    const auto assignments = enumerate_assignments(net);
    if (assignments.empty()) {
        throw DomainError("no admissible noncontextual assignment exists for this network");
    }
    int best = std::numeric_limits<int>::min();
    for (const auto &a : assignments) {
        best = std::max(best, a.value_of("f_NL") - a.value_of("a,0") - a.value_of("0,a"));
    }
    return best;
}

/**
 * Result of checking the two conditional statements implied by the
 * shared collective outcome f_NL, plus their combination:
 *   statement 1: v(f_NL)=1 and v(0,1)=1  =>  v(0,a)=1
 *   statement 2: v(f_NL)=1 and v(1,0)=1  =>  v(a,0)=1
 *   combined:    v(f_NL)=1              =>  v(a,0)=1 or v(0,a)=1
 * Assignments that fail the context constraints are reported as
 * invalid and are not tested against the statements.
 */
struct StatementReport {
    struct Check {
        std::string description;
        std::vector<NCAssignment> counterexamples;
    };

    std::size_t assignments_checked = 0;
    std::vector<NCAssignment> invalid_assignments;
    Check statement1{"f_NL=1 and 0,1=1 imply 0,a=1", {}};
    Check statement2{"f_NL=1 and 1,0=1 imply a,0=1", {}};
    Check combined{"f_NL=1 implies a,0=1 or 0,a=1", {}};

    std::size_t counterexample_count() const {
        return statement1.counterexamples.size() + statement2.counterexamples.size() +
               combined.counterexamples.size();
    }

    bool all_hold() const { return counterexample_count() == 0; }
};

inline StatementReport check_statements(const InterferometerNetwork &net,
                                        const std::vector<NCAssignment> &assignments) {
    const detail::LabelUniverse u = detail::label_universe(net);
    std::map<PathLabel, std::size_t> pos;
    for (std::size_t k = 0; k < u.labels.size(); ++k) {
        pos[u.labels[k]] = k;
    }

    StatementReport report;
    report.assignments_checked = assignments.size();
    for (const auto &a : assignments) {
        std::uint32_t mask = 0;
        bool known_labels = true;
        for (const auto &[label, v] : a.valuation) {
            if (v != 0 && v != 1) {
                known_labels = false;
                break;
            }
            const auto it = pos.find(label);
            if (it == pos.end()) {
                known_labels = false;
                break;
            }
            if (v == 1) {
                mask |= std::uint32_t{1} << it->second;
            }
        }
        if (!known_labels || !detail::admissible(u, mask)) {
            report.invalid_assignments.push_back(a);
            continue;
        }
        if (a.value_of("f_NL") == 1) {
            if (a.value_of("0,1") == 1 && a.value_of("0,a") != 1) {
                report.statement1.counterexamples.push_back(a);
            }
            if (a.value_of("1,0") == 1 && a.value_of("a,0") != 1) {
                report.statement2.counterexamples.push_back(a);
            }
            if (a.value_of("a,0") != 1 && a.value_of("0,a") != 1) {
                report.combined.counterexamples.push_back(a);
            }
        }
    }
    return report;
}

} // namespace tripath
