// Copyright 2026 The daqc-qft Authors
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


#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "daqc/errors.hpp"
#include "daqc/qft/qft.hpp"
#include "daqc/sim/dense.hpp"
#include "test_util.hpp"

namespace {

using namespace daqc;
using namespace daqc::testing;
using std::numbers::pi;

Eigen::MatrixXcd reversal_matrix(int n) {
    return unitary_from_action(n, [](Statevector &s) { qft::apply_readout_permutation(s); });
}

TEST(ExactQft, MatchesDiscreteFourierTransform) {
    std::mt19937_64 rng(20);
    for (int n = 1; n <= 7; ++n) {
        const Statevector in = random_state(n, rng);
        const Eigen::VectorXcd expected = dft_matrix(n) * as_vector(in);
        EXPECT_LT((as_vector(qft::exact_qft(in)) - expected).norm(), 1e-12) << n;
        EXPECT_LT((qft::exact_qft_matrix(n) - dft_matrix(n)).norm(), 1e-12) << n;
    }
}

TEST(QftAngles, ThetaAndAlphaValues) {
    EXPECT_DOUBLE_EQ(qft::theta(2), pi / 8);
    EXPECT_DOUBLE_EQ(qft::theta(3), pi / 16);
    EXPECT_THROW(qft::theta(1), InvalidInput);
    EXPECT_DOUBLE_EQ(qft::alpha(1, 2, 1), pi / 8);
    EXPECT_DOUBLE_EQ(qft::alpha(1, 3, 1), pi / 16);
    EXPECT_DOUBLE_EQ(qft::alpha(2, 3, 1), 0.0);
    EXPECT_DOUBLE_EQ(qft::alpha(2, 3, 2), pi / 8);
    EXPECT_THROW(qft::alpha(2, 2, 1), InvalidInput);
}

TEST(QftPlan, BlockTargetsCoupleOnlyTheBlockControl) {
    const qft::QftPlan plan = qft::build_qft_plan(5);
    ASSERT_EQ(plan.blocks.size(), 4u);
    EXPECT_EQ(plan.final_hadamard, 5);
    for (const qft::QftBlock &b : plan.blocks) {
        for (auto [c, k] : b.ising.pairs()) {
            const double expected = c == b.m ? pi / std::ldexp(1.0, k - b.m + 2) : 0.0;
            EXPECT_DOUBLE_EQ(b.ising.coupling(c, k), expected);
        }
        EXPECT_EQ(b.sqg_layer.size(), 1u + 2u * (5u - static_cast<unsigned>(b.m)));
    }
}

TEST(QftPlan, ExactZzRealizationReproducesQft) {
    for (int n = 1; n <= 7; ++n) {
        const qft::QftPlan plan = qft::build_qft_plan(n);
        const Eigen::MatrixXcd u = reversal_matrix(n) * build_dense_unitary(qft::plan_ops(plan), n);
        EXPECT_LT(phase_insensitive_distance(u, dft_matrix(n)), 1e-9) << n;
    }
}

TEST(DigitalCircuit, BothFormsReproduceQft) {
    for (int n = 1; n <= 6; ++n) {
        for (bool zz : {false, true}) {
            const Eigen::MatrixXcd u = reversal_matrix(n) * build_dense_unitary(qft::build_dqc_circuit(n, zz), n);
            EXPECT_LT(phase_insensitive_distance(u, dft_matrix(n)), 1e-9) << n << " zz=" << zz;
        }
    }
}

TEST(DigitalCircuit, ZzFormUsesTwoEntanglersPerControlledRotation) {
    const auto ops = qft::build_dqc_circuit(5, true);
    int entanglers = 0;
    for (const Op &op : ops) {
        if (const auto *z = std::get_if<ZzRotation>(&op)) {
            EXPECT_DOUBLE_EQ(z->angle, pi / 4);
            ++entanglers;
        }
    }
    EXPECT_EQ(entanglers, 2 * 10);
}

TEST(ZzConstruction, EqualsZzExponentialForRandomAngles) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> d(-pi, pi);
    const Eigen::MatrixXcd zz = on_qubits(2, {{1, 'Z'}, {2, 'Z'}});
    for (int i = 0; i < 100; ++i) {
        const double a = d(rng);
        const Eigen::MatrixXcd u = build_dense_unitary(qft::zz_gate_sequence(a, 1, 2), 2);
        EXPECT_LT(phase_insensitive_distance(u, expi(zz, a)), 1e-10);
    }
    EXPECT_THROW(qft::zz_gate_sequence(0.1, 2, 2), InvalidInput);
}

TEST(ZzConstruction, ControlledRotationSplitsIntoLocalAndZzPhases) {
    for (int k = 2; k <= 6; ++k) {
        const double t = qft::theta(k);
        const std::vector<Op> ops{Rotation{1, Generator::Z, -t}, Rotation{2, Generator::Z, -t},
                                  ZzRotation{1, 2, t}};
        const Eigen::MatrixXcd crk = build_dense_unitary({controlled_rk(1, 2, k)}, 2);
        EXPECT_LT(phase_insensitive_distance(build_dense_unitary(ops, 2), crk), 1e-12) << k;
    }
}

TEST(BitReversal, IsAnInvolution) {
    for (int n = 1; n <= 8; ++n) {
        const auto p = qft::bit_reversal(n);
        for (std::size_t i = 0; i < p.size(); ++i) {
            EXPECT_EQ(p[p[i]], i);
        }
    }
    EXPECT_EQ(qft::bit_reversal(3)[1], 4u);
}

TEST(TestStates, WAndGhzAreOrthonormal) {
    for (int n = 2; n <= 7; ++n) {
        const Statevector w = qft::w_state(n);
        const Statevector g = qft::ghz_state(n);
        EXPECT_NEAR(w.norm(), 1.0, 1e-14);
        EXPECT_NEAR(std::abs(inner_product(w, g)), 0.0, 1e-15);
        const Statevector b = qft::beta_state(n, pi / 4);
        EXPECT_NEAR(fidelity(b, w), 0.5, 1e-14);
        EXPECT_NEAR(fidelity(qft::beta_state(n, 0.0), g), 1.0, 1e-14);
    }
    EXPECT_THROW(qft::w_state(1), InvalidInput);
}

}  // namespace
