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

#include <algorithm>
#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "tripath/network.hpp"
#include "tripath/presets.hpp"

using namespace tripath;
using Catch::Matchers::WithinAbs;

TEST_CASE("beam splitter block") {
    SECTION("full reflection is the identity block") {
        const auto b = beam_splitter_unitary(1.0);
        CHECK(b[0][0] == 1.0);
        CHECK(b[0][1] == 0.0);
        CHECK(b[1][0] == 0.0);
        CHECK(b[1][1] == 1.0);
    }
    SECTION("balanced mixing") {
        const auto b = beam_splitter_unitary(0.5);
        const double s = 1.0 / std::sqrt(2.0);
        CHECK_THAT(b[0][0], WithinAbs(s, 1e-15));
        CHECK_THAT(b[0][1], WithinAbs(-s, 1e-15));
        CHECK_THAT(b[1][0], WithinAbs(s, 1e-15));
        CHECK_THAT(b[1][1], WithinAbs(s, 1e-15));
    }
    SECTION("full transmission is the antidiagonal") {
        const auto b = beam_splitter_unitary(0.0);
        CHECK(b[0][0] == 0.0);
        CHECK(b[0][1] == -1.0);
        CHECK(b[1][0] == 1.0);
        CHECK(b[1][1] == 0.0);
    }
    SECTION("reflectivity range is enforced") {
        CHECK_THROWS_AS(beam_splitter_unitary(-0.1), DomainError);
        CHECK_THROWS_AS(beam_splitter_unitary(1.1), DomainError);
    }
    SECTION("block is orthogonal for any reflectivity") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            const auto b = beam_splitter_unitary(u(rng));
            CHECK_THAT(b[0][0] * b[0][1] + b[1][0] * b[1][1], WithinAbs(0.0, 1e-15));
            CHECK_THAT(b[0][0] * b[0][0] + b[1][0] * b[1][0], WithinAbs(1.0, 1e-15));
        }
    }
}

namespace {

NetworkDefinition single_stage_definition() {
    NetworkDefinition def;
    def.paths = {"0,0", "0,1", "1,0", "1,1"};
    def.parallel = "1,1";
    def.stages = {{{"0,0", "1,0"}, {"a,0", "b,0"}, 0.5}};
    return def;
}

} // namespace

TEST_CASE("network construction") {
    SECTION("empty stage list leaves the input basis") {
        NetworkDefinition def = single_stage_definition();
        def.stages.clear();
        const InterferometerNetwork net = build_network(def);
        REQUIRE(net.contexts().size() == 1);
        for (std::size_t k = 0; k < kDim; ++k) {
            CHECK(net.input_context().outcomes()[k].second == PureState::basis_state(k));
        }
        CHECK((net.total_unitary() == Operator::identity()));
    }

    SECTION("a single balanced stage produces the expected context") {
        const InterferometerNetwork net = build_network(single_stage_definition());
        REQUIRE(net.contexts().size() == 2);
        auto labels = net.context_basis(1).labels();
        std::sort(labels.begin(), labels.end());
        CHECK(labels == std::vector<PathLabel>{"0,1", "1,1", "a,0", "b,0"});
        const PureState &a0 = net.context_basis(1).state_of("a,0");
        const double s = 1.0 / std::sqrt(2.0);
        CHECK_THAT(std::abs(a0.amplitude(0) - Complex{s}), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(a0.amplitude(2) - Complex{-s}), WithinAbs(0.0, 1e-15));
    }

    SECTION("unknown input labels are rejected") {
        NetworkDefinition def = single_stage_definition();
        def.stages[0].inputs = {"0,0", "nope"};
        CHECK_THROWS_AS(build_network(def), NetworkBuildError);
    }

    SECTION("the parallel path cannot interfere") {
        NetworkDefinition def = single_stage_definition();
        def.stages[0].inputs = {"0,0", "1,1"};
        CHECK_THROWS_AS(build_network(def), NetworkBuildError);
    }

    SECTION("output labels cannot collide with untouched paths") {
        NetworkDefinition def = single_stage_definition();
        def.stages[0].outputs = {"a,0", "0,1"};
        CHECK_THROWS_AS(build_network(def), NetworkBuildError);
    }

    SECTION("a label cannot be reused for a different state") {
        NetworkDefinition def = single_stage_definition();
        def.stages.push_back({{"0,1", "a,0"}, {"0,0", "N1"}, 1.0 / 3.0});
        CHECK_THROWS_AS(build_network(def), NetworkBuildError);
    }

    SECTION("reflectivity out of range is rejected") {
        NetworkDefinition def = single_stage_definition();
        def.stages[0].reflectivity = 1.5;
        CHECK_THROWS_AS(build_network(def), NetworkBuildError);
    }
}

TEST_CASE("canonical preset") {
    const InterferometerNetwork &net = canonical_network();

    SECTION("five stages, six contexts, reflectivities as wired") {
        REQUIRE(net.stages().size() == 5);
        REQUIRE(net.contexts().size() == 6);
        const std::vector<double> expected = {0.5, 1.0 / 3.0, 0.25, 1.0 / 3.0, 0.5};
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(net.stages()[k].reflectivity == expected[k]);
        }
        CHECK(net.parallel_path() == "1,1");
    }

    SECTION("the final context is the input context with 0,1 and 1,0 exchanged") {
        const auto in_labels = net.input_context().labels();
        const auto out_labels = net.output_context().labels();
        CHECK(in_labels == std::vector<PathLabel>{"0,0", "0,1", "1,0", "1,1"});
        CHECK(out_labels == std::vector<PathLabel>{"0,0", "1,0", "0,1", "1,1"});
        for (const auto &[label, state] : net.output_context().outcomes()) {
            const PureState &original = net.input_context().state_of(label);
            CHECK_THAT(std::abs(std::abs(inner_product(original, state)) - 1.0),
                       WithinAbs(0.0, 1e-12));
        }
    }

    SECTION("context 2 contains the collective outcomes, derived from the blocks") {
        // Independent derivation: multiply the stage-1 and stage-2 blocks.
        const auto b1 = beam_splitter_unitary(0.5);
        const auto b2 = beam_splitter_unitary(1.0 / 3.0);
        PureState::Amplitudes a0{};
        a0[0] = b1[0][0];
        a0[2] = b1[0][1];
        PureState::Amplitudes f{};
        PureState::Amplitudes n1{};
        for (std::size_t k = 0; k < kDim; ++k) {
            const Complex o1 = (k == 1) ? Complex{1.0} : Complex{0.0};
            f[k] = b2[0][0] * o1 + b2[0][1] * a0[k];
            n1[k] = b2[1][0] * o1 + b2[1][1] * a0[k];
        }
        const Context &ctx2 = net.context_basis(2);
        CHECK_THAT(std::abs(std::abs(inner_product(PureState(f), ctx2.state_of("f_NL"))) - 1.0),
                   WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(std::abs(inner_product(PureState(n1), ctx2.state_of("N1"))) - 1.0),
                   WithinAbs(0.0, 1e-12));
        // And the closed forms match Eq.-style expansions exactly.
        CHECK_THAT(std::abs(inner_product(named_state("f_NL"), ctx2.state_of("f_NL")) -
                            Complex{1.0}),
                   WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(inner_product(named_state("N1"), ctx2.state_of("N1")) - Complex{1.0}),
                   WithinAbs(0.0, 1e-12));
    }

    SECTION("context lookup validates the index") {
        CHECK_THROWS_AS(net.context_basis(6), DomainError);
        CHECK(net.context_basis(0).index() == 0);
    }

    SECTION("the parallel path state is identical in all contexts") {
        for (const auto &ctx : net.contexts()) {
            CHECK(ctx.state_of("1,1") == PureState::basis_state(3));
        }
    }

    SECTION("eleven distinct labels") {
        CHECK(net.distinct_labels().size() == 11);
    }
}

TEST_CASE("network residuals") {
    SECTION("canonical network is tight") {
        const NetworkResiduals r = stage_residuals(canonical_network());
        CHECK(r.max_residual() < 1e-12);
    }

    SECTION("random reflectivities stay within tolerance") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            const InterferometerNetwork net = testing::random_wired_network(rng);
            CHECK(stage_residuals(net).max_residual() < kTol);
            for (const auto &ctx : net.contexts()) {
                CHECK(orthonormality_residual(ctx) < 1e-10);
            }
        }
    }

    SECTION("a hand-corrupted context is flagged") {
        const PureState bad = PureState::normalized(
            {Complex{1.0}, Complex{0.2}, Complex{0.0}, Complex{0.0}});
        const Context corrupted(0, {{"0,0", bad},
                                    {"0,1", PureState::basis_state(1)},
                                    {"1,0", PureState::basis_state(2)},
                                    {"1,1", PureState::basis_state(3)}});
        CHECK(orthonormality_residual(corrupted) > kTol);
    }
}
