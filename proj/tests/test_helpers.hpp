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

// Deterministic generators for property-style tests. All randomness is
// seeded explicitly so failures reproduce.

#pragma once

#include <cmath>
#include <random>

#include "tripath/hilbert.hpp"
#include "tripath/network.hpp"
#include "tripath/presets.hpp"

namespace tripath::testing {

inline Complex random_complex(std::mt19937 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return Complex{n(rng), n(rng)};
}

inline PureState random_pure_state(std::mt19937 &rng) {
    PureState::Amplitudes a;
    for (auto &x : a) {
        x = random_complex(rng);
    }
    return PureState::normalized(a);
}

/// Random unitary from modified Gram-Schmidt on a Gaussian matrix.
inline Operator random_unitary(std::mt19937 &rng) {
    std::array<std::array<Complex, kDim>, kDim> cols;
    for (auto &col : cols) {
        for (auto &x : col) {
            x = random_complex(rng);
        }
    }
    for (std::size_t j = 0; j < kDim; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Complex proj{0.0, 0.0};
            for (std::size_t k = 0; k < kDim; ++k) {
                proj += std::conj(cols[i][k]) * cols[j][k];
            }
            for (std::size_t k = 0; k < kDim; ++k) {
                cols[j][k] -= proj * cols[i][k];
            }
        }
        double norm = 0.0;
        for (const auto &x : cols[j]) {
            norm += std::norm(x);
        }
        const double inv = 1.0 / std::sqrt(norm);
        for (auto &x : cols[j]) {
            x *= inv;
        }
    }
    Operator::Matrix m{};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            m[r * kDim + c] = cols[c][r];
        }
    }
    return Operator(m);
}

/// Random full-rank density operator G G^dag / tr.
inline DensityOperator random_density(std::mt19937 &rng) {
    Operator::Matrix g{};
    for (auto &x : g) {
        x = random_complex(rng);
    }
    const Operator go(g);
    Operator prod = go * go.dagger();
    const double tr = prod.trace().real();
    return DensityOperator((1.0 / tr) * prod);
}

/// Random visibility state from the rho(eta) family.
inline DensityOperator random_rho_eta(std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return rho_eta(u(rng));
}

/// Canonical wiring with random reflectivities.
inline InterferometerNetwork random_wired_network(std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    NetworkDefinition def = canonical_definition();
    for (auto &stage : def.stages) {
        stage.reflectivity = u(rng);
    }
    return build_network(def);
}

} // namespace tripath::testing
