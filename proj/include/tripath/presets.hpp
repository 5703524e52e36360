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
 * The canonical five-stage network and the named objects that live on
 * it: closed-form outcome states, the swap operator and the
 * visibility family rho(eta).
 *
 * Canonical wiring (top-to-bottom rail order "0,0", "0,1", "1,0" with
 * "1,1" parallel), reflectivities [1/2, 1/3, 1/4, 1/3, 1/2]:
 *
 *   stage 1: ("0,0", "1,0") -> ("a,0", "b,0")    R = 1/2
 *   stage 2: ("0,1", "a,0") -> ("f_NL", "N1")    R = 1/3
 *   stage 3: ("N1", "b,0")  -> ("N2", "0,b")     R = 1/4
 *   stage 4: ("f_NL", "N2") -> ("1,0", "0,a")    R = 1/3
 *   stage 5: ("0,a", "0,b") -> ("0,0", "0,1")    R = 1/2
 *
 * The chain visits five distinct measurement contexts; the input and
 * output contexts carry the same labels, with "0,1" and "1,0"
 * exchanged by the network's total unitary.
 *
 * Named states are defined analytically here, in the fixed sign
 * convention of network.hpp, and are deliberately an independent code
 * path from the network-derived context bases; tests and the verify
 * suite cross-check the two.
 */

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tripath/errors.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/network.hpp"

namespace tripath {

/// Definition of the canonical five-stage network.
inline NetworkDefinition canonical_definition() {
    NetworkDefinition def;
    def.paths = {"0,0", "0,1", "1,0", "1,1"};
    def.parallel = "1,1";
    def.stages = {
        {{"0,0", "1,0"}, {"a,0", "b,0"}, 1.0 / 2.0},
        {{"0,1", "a,0"}, {"f_NL", "N1"}, 1.0 / 3.0},
        {{"N1", "b,0"}, {"N2", "0,b"}, 1.0 / 4.0},
        {{"f_NL", "N2"}, {"1,0", "0,a"}, 1.0 / 3.0},
        {{"0,a", "0,b"}, {"0,0", "0,1"}, 1.0 / 2.0},
    };
    return def;
}

/// Builds a fresh canonical network.
inline InterferometerNetwork build_canonical_network() {
    return build_network(canonical_definition());
}

/// Shared immutable instance of the canonical network.
inline const InterferometerNetwork &canonical_network() {
    static const InterferometerNetwork net = build_canonical_network();
    return net;
}

/// Labels accepted by named_state().
inline const std::vector<std::string> &named_state_labels() {
    static const std::vector<std::string> labels = {
        "0,0", "0,1", "1,0", "1,1", "a,0", "b,0",
        "0,a", "0,b", "f_NL", "N1", "N2", "Phi_max",
    };
    return labels;
}

/**
 * Closed-form state for a named outcome (or for "Phi_max", the
 * maximally entangled symmetric superposition of "0,1" and "1,0").
 */
inline PureState named_state(const std::string &label) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    if (label == "0,0") {
        return PureState::basis_state(0);
    }
    if (label == "0,1") {
        return PureState::basis_state(1);
    }
    if (label == "1,0") {
        return PureState::basis_state(2);
    }
    if (label == "1,1") {
        return PureState::basis_state(3);
    }
    if (label == "a,0") {
        return PureState({Complex{s2}, Complex{0.0}, Complex{-s2}, Complex{0.0}});
    }
    if (label == "b,0") {
        return PureState({Complex{s2}, Complex{0.0}, Complex{s2}, Complex{0.0}});
    }
    if (label == "0,a") {
        return PureState({Complex{s2}, Complex{-s2}, Complex{0.0}, Complex{0.0}});
    }
    if (label == "0,b") {
        return PureState({Complex{s2}, Complex{s2}, Complex{0.0}, Complex{0.0}});
    }
    if (label == "f_NL") {
        return PureState({Complex{-s3}, Complex{s3}, Complex{s3}, Complex{0.0}});
    }
    if (label == "N1") {
        return PureState({Complex{s6}, Complex{2.0 * s6}, Complex{-s6}, Complex{0.0}});
    }
    if (label == "N2") {
        return PureState({Complex{s6}, Complex{-s6}, Complex{2.0 * s6}, Complex{0.0}});
    }
    if (label == "Phi_max") {
        return PureState({Complex{0.0}, Complex{s2}, Complex{s2}, Complex{0.0}});
    }
    throw UnknownLabelError("unknown named state '" + label + "'");
}

/// Permutation exchanging |0,1> and |1,0>, fixing |0,0> and |1,1>.
inline Operator swap_operator() {
    Operator::Matrix m{};
    m[0 * kDim + 0] = Complex{1.0};
    m[1 * kDim + 2] = Complex{1.0};
    m[2 * kDim + 1] = Complex{1.0};
    m[3 * kDim + 3] = Complex{1.0};
    return Operator(m);
}

/**
 * The visibility family
 *   rho(eta) = (|0,1><0,1| + |1,0><1,0| + eta |0,1><1,0| + eta |1,0><0,1|) / 2,
 * interpolating from the incoherent mixture (eta = 0) to the pure
 * maximally entangled state (eta = 1).
 */
inline DensityOperator rho_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("visibility eta must lie in [0, 1], got " +
                          detail::format_real(eta));
    }
    Operator::Matrix m{};
    m[1 * kDim + 1] = Complex{0.5};
    m[2 * kDim + 2] = Complex{0.5};
    m[1 * kDim + 2] = Complex{0.5 * eta};
    m[2 * kDim + 1] = Complex{0.5 * eta};
    return DensityOperator(Operator(m));
}

} // namespace tripath
