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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/presets.hpp"

using namespace tripath;
using Catch::Matchers::WithinAbs;

TEST_CASE("pure states enforce normalization and finiteness") {
    CHECK_THROWS_AS(PureState({Complex{1.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}}),
                    InvalidStateError);
    CHECK_THROWS_AS(PureState({Complex{std::nan("")}, Complex{0.0}, Complex{0.0}, Complex{0.0}}),
                    InvalidStateError);
    CHECK_THROWS_AS(PureState::normalized({Complex{0.0}, Complex{0.0}, Complex{0.0}, Complex{0.0}}),
                    InvalidStateError);

    const PureState s = PureState::normalized({Complex{1.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}});
    CHECK_THAT(s.squared_norm(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("inner product is the physics convention") {
    const PureState n1 = named_state("N1");
    const PureState n2 = named_state("N2");
    const Complex g = inner_product(n1, n2);
    CHECK_THAT(g.real(), WithinAbs(-0.5, 1e-12));
    CHECK_THAT(g.imag(), WithinAbs(0.0, 1e-12));

    // <u|u> = 1 for any normalized state.
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        const PureState u = testing::random_pure_state(rng);
        CHECK_THAT(std::abs(inner_product(u, u) - Complex{1.0}), WithinAbs(0.0, 1e-12));
    }

    // Conjugate linearity in the first argument.
    const PureState a = PureState::normalized({Complex{0.0, 1.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}});
    const PureState b = PureState::basis_state(0);
    CHECK_THAT(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))),
               WithinAbs(0.0, 1e-15));
}

TEST_CASE("same-context collective outcomes are orthogonal") {
    // Derived independently from the stage blocks: f_NL and N1 are the two
    // outputs of a 2x2 orthogonal mixing of |0,1> and |a,0>.
    const auto block = beam_splitter_unitary(1.0 / 3.0);
    const PureState o1 = named_state("0,1");
    const PureState a0 = named_state("a,0");
    PureState::Amplitudes f{};
    PureState::Amplitudes n1{};
    for (std::size_t k = 0; k < kDim; ++k) {
        f[k] = block[0][0] * o1.amplitude(k) + block[0][1] * a0.amplitude(k);
        n1[k] = block[1][0] * o1.amplitude(k) + block[1][1] * a0.amplitude(k);
    }
    const Complex g = inner_product(PureState(f), PureState(n1));
    CHECK_THAT(std::abs(g), WithinAbs(0.0, 1e-12));
    // And they match the closed-form states.
    CHECK_THAT(std::abs(inner_product(PureState(f), named_state("f_NL")) - Complex{1.0}),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("born probabilities") {
    const PureState f = named_state("f_NL");

    SECTION("projector onto itself") {
        const DensityOperator rho = DensityOperator::pure(f);
        CHECK_THAT(born_probability(rho, f), WithinAbs(1.0, 1e-12));
    }
    SECTION("maximally entangled input gives 2/3 on the central outcome") {
        CHECK_THAT(born_probability(rho_eta(1.0), f), WithinAbs(2.0 / 3.0, 1e-12));
    }
    SECTION("incoherent mixture gives 1/3") {
        CHECK_THAT(born_probability(rho_eta(0.0), f), WithinAbs(1.0 / 3.0, 1e-12));
    }
    SECTION("probabilities over an orthonormal basis sum to 1") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = testing::random_density(rng);
            const Operator u = testing::random_unitary(rng);
            double total = 0.0;
            for (std::size_t k = 0; k < kDim; ++k) {
                total += born_probability(rho, apply_unitary(u, PureState::basis_state(k)));
            }
            CHECK_THAT(total, WithinAbs(1.0, 1e-10));
        }
    }
}

TEST_CASE("unitary application") {
    const Operator swap = swap_operator();

    SECTION("identity fixes any state") {
        std::mt19937 rng(5);
        const PureState s = testing::random_pure_state(rng);
        CHECK(apply_unitary(Operator::identity(), s) == s);
    }
    SECTION("swap fixes f_NL and exchanges N1 with N2") {
        const PureState f = named_state("f_NL");
        const PureState swapped = apply_unitary(swap, f);
        for (std::size_t k = 0; k < kDim; ++k) {
            CHECK_THAT(std::abs(swapped.amplitude(k) - f.amplitude(k)), WithinAbs(0.0, 1e-15));
        }
        const PureState n2 = apply_unitary(swap, named_state("N1"));
        for (std::size_t k = 0; k < kDim; ++k) {
            CHECK_THAT(std::abs(n2.amplitude(k) - named_state("N2").amplitude(k)),
                       WithinAbs(0.0, 1e-15));
        }
    }
    SECTION("non-unitary operators are rejected") {
        Operator::Matrix m{};
        m[0] = Complex{2.0};
        CHECK_THROWS_AS(apply_unitary(Operator(m), PureState::basis_state(0)), NonUnitaryError);
    }
    SECTION("unitaries preserve inner products") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const Operator u = testing::random_unitary(rng);
            const PureState a = testing::random_pure_state(rng);
            const PureState b = testing::random_pure_state(rng);
            const Complex before = inner_product(a, b);
            const Complex after = inner_product(apply_unitary(u, a), apply_unitary(u, b));
            CHECK_THAT(std::abs(before - after), WithinAbs(0.0, 1e-10));
        }
    }
    SECTION("conjugation preserves density invariants") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = testing::random_density(rng);
            const Operator u = testing::random_unitary(rng);
            const DensityOperator rotated = apply_unitary(u, rho); // ctor revalidates
            const auto d = validate_density(rotated.matrix());
            CHECK(d.valid());
        }
    }
}

TEST_CASE("density validation diagnostics") {
    SECTION("maximally mixed state is valid") {
        const auto d = validate_density(0.25 * Operator::identity());
        CHECK(d.valid());
        CHECK_THAT(d.min_eigenvalue, WithinAbs(0.25, 1e-12));
    }
    SECTION("trace violations are flagged") {
        const auto d = validate_density(0.5 * Operator::identity());
        CHECK_FALSE(d.valid());
        CHECK_THAT(d.trace_residual, WithinAbs(1.0, 1e-12));
        CHECK(d.hermiticity_residual <= 1e-15);
        CHECK_THROWS_AS(DensityOperator(0.5 * Operator::identity()), InvalidDensityError);
    }
    SECTION("non-Hermitian matrices are flagged") {
        Operator::Matrix m{};
        m[0 * kDim + 0] = Complex{1.0};
        m[0 * kDim + 1] = Complex{0.5};
        const auto d = validate_density(Operator(m));
        CHECK_FALSE(d.valid());
        CHECK_THAT(d.hermiticity_residual, WithinAbs(0.5, 1e-12));
    }
    SECTION("negative eigenvalues are flagged") {
        Operator::Matrix m{};
        m[0 * kDim + 0] = Complex{1.5};
        m[1 * kDim + 1] = Complex{-0.5};
        const auto d = validate_density(Operator(m));
        CHECK_FALSE(d.valid());
        CHECK_THAT(d.min_eigenvalue, WithinAbs(-0.5, 1e-12));
    }
    SECTION("visibility family diagnostics at half coherence") {
        const auto d = validate_density(rho_eta(0.5).matrix());
        CHECK(d.hermiticity_residual < kTol);
        CHECK(d.trace_residual < kTol);
        CHECK(d.min_eigenvalue >= -kTol);
    }
}

TEST_CASE("hermitian eigensolver") {
    SECTION("diagonal matrices are already solved") {
        Operator::Matrix m{};
        m[0 * kDim + 0] = Complex{0.4};
        m[1 * kDim + 1] = Complex{0.3};
        m[2 * kDim + 2] = Complex{0.2};
        m[3 * kDim + 3] = Complex{0.1};
        const auto eig = hermitian_eigenvalues(Operator(m));
        CHECK_THAT(eig[0], WithinAbs(0.1, 1e-14));
        CHECK_THAT(eig[3], WithinAbs(0.4, 1e-14));
    }
    SECTION("coherence block of the visibility family") {
        // The 2x2 block [[1/2, eta/2], [eta/2, 1/2]] has eigenvalues
        // (1 +/- eta) / 2; the other two eigenvalues vanish.
        for (double eta : {0.0, 0.5, 1.0}) {
            const auto eig = hermitian_eigenvalues(rho_eta(eta).matrix());
            CHECK_THAT(eig[0], WithinAbs(0.0, 1e-13));
            CHECK_THAT(eig[1], WithinAbs(0.0, 1e-13));
            CHECK_THAT(eig[2], WithinAbs((1.0 - eta) / 2.0, 1e-13));
            CHECK_THAT(eig[3], WithinAbs((1.0 + eta) / 2.0, 1e-13));
        }
    }
    SECTION("spectrum is unitarily invariant") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = testing::random_density(rng);
            const Operator u = testing::random_unitary(rng);
            const auto before = hermitian_eigenvalues(rho.matrix());
            const auto after = hermitian_eigenvalues((u * rho.matrix() * u.dagger()));
            for (std::size_t k = 0; k < kDim; ++k) {
                CHECK_THAT(before[k], WithinAbs(after[k], 1e-11));
            }
        }
    }
    SECTION("eigenvalues of a random density sum to its trace") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = testing::random_density(rng);
            const auto eig = hermitian_eigenvalues(rho.matrix());
            double total = 0.0;
            for (double e : eig) {
                total += e;
            }
            CHECK_THAT(total, WithinAbs(1.0, 1e-12));
        }
    }
}
