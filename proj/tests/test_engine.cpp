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

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "daqc/engine/daqc.hpp"
#include "daqc/errors.hpp"
#include "daqc/sim/dense.hpp"
#include "test_util.hpp"

namespace {

using namespace daqc;
using namespace daqc::engine;
using namespace daqc::testing;
using std::numbers::pi;

std::string read_golden(const std::string &name) {
    std::ifstream in(std::string(DAQC_TEST_DATA_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Eigen::MatrixXcd schedule_unitary(const DaqcSchedule &s) {
    return build_dense_unitary(s.lower(), s.n_qubits(), &s.resource());
}

Eigen::MatrixXcd reversal_matrix(int n) {
    return unitary_from_action(n, [](Statevector &s) { qft::apply_readout_permutation(s); });
}

// Determinant from the spectrum of M = J - 2 A, A the pair-overlap adjacency
// (triangular graph): (N^2-9N+16)/2 once, -2(N-4) with multiplicity N-1, and 4
// with multiplicity N(N-3)/2.
double closed_form_determinant(int n) {
    const double k = n * (n - 1) / 2.0;
    const double top = (n * n - 9.0 * n + 16.0) / 2.0;
    const double mid = -2.0 * (n - 4);
    const double rest = k - 1 - (n - 1);
    return top * std::pow(mid, n - 1) * std::pow(4.0, rest);
}

TEST(Vectorize, KnownIndicesAndRoundTrip) {
    EXPECT_EQ(vectorize_pair(1, 2, 3), 1);
    EXPECT_EQ(vectorize_pair(1, 3, 3), 2);
    EXPECT_EQ(vectorize_pair(2, 3, 3), 3);
    for (int n = 2; n <= 10; ++n) {
        int expected = 1;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                EXPECT_EQ(vectorize_pair(a, b, n), expected);
                EXPECT_EQ(unvectorize_pair(expected, n), std::make_pair(a, b));
                ++expected;
            }
        }
        EXPECT_EQ(expected - 1, pair_count(n));
    }
    EXPECT_THROW(vectorize_pair(2, 2, 3), InvalidInput);
    EXPECT_THROW(vectorize_pair(3, 2, 3), InvalidInput);
    EXPECT_THROW(unvectorize_pair(4, 3), InvalidInput);
}

TEST(SignMatrix, SmallCases) {
    const SignMatrix m2(2);
    ASSERT_EQ(m2.size(), 1);
    EXPECT_EQ(m2(1, 1), 1);
    const SignMatrix m3(3);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            EXPECT_EQ(m3(a, b), a == b ? 1 : -1);
        }
    }
    EXPECT_THROW(SignMatrix(1), InvalidInput);
}

TEST(SignMatrix, StructuralInvariants) {
    for (int n = 2; n <= 8; ++n) {
        const SignMatrix m(n);
        for (int a = 1; a <= m.size(); ++a) {
            EXPECT_EQ(m(a, a), 1);
            for (int b = 1; b <= m.size(); ++b) {
                EXPECT_EQ(m(a, b), m(b, a));
                EXPECT_TRUE(m(a, b) == 1 || m(a, b) == -1);
            }
        }
    }
}

TEST(SignMatrix, ExactDeterminantMatchesSpectralFormula) {
    for (int n = 2; n <= 10; ++n) {
        const double det = SignMatrix(n).determinant();
        const double oracle = closed_form_determinant(n);
        EXPECT_NEAR(det, oracle, 1e-9 * std::max(1.0, std::abs(oracle))) << n;
        EXPECT_EQ(det == 0.0, n == 4) << n;
    }
    EXPECT_EQ(SignMatrix(3).determinant(), -4.0);
    EXPECT_TRUE(SignMatrix(4).singular());
    for (int n = 5; n <= 7; ++n) {
        const double lu = SignMatrix(n).dense().determinant();
        EXPECT_NEAR(SignMatrix(n).determinant(), lu, 1e-6 * std::abs(lu));
    }
}

TEST(SolveTimes, QftBlockOneAtThreeQubits) {
    const qft::QftPlan plan = qft::build_qft_plan(3);
    const auto t = solve_times(plan.blocks[0].ising);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_NEAR(t[0], -pi / 32, 1e-14);
    EXPECT_NEAR(t[1], -pi / 16, 1e-14);
    EXPECT_NEAR(t[2], -3 * pi / 32, 1e-14);
}

TEST(SolveTimes, HomogeneousAndZeroTargets) {
    for (double tf : {1.0, 2.5}) {
        IsingSpec target(3, 1.0, tf);
        for (auto [j, k] : target.pairs()) {
            target.set_coupling(j, k, 1.0);
        }
        for (double x : solve_times(target)) {
            EXPECT_NEAR(x, -tf, 1e-14);
        }
    }
    for (int n : {2, 3, 5, 6}) {
        for (double x : solve_times(IsingSpec(n))) {
            EXPECT_EQ(x, 0.0);
        }
    }
}

TEST(SolveTimes, FourQubitsIsRejected) {
    try {
        solve_times(IsingSpec::homogeneous(4));
        FAIL() << "expected SingularSignMatrix";
    } catch (const SingularSignMatrix &e) {
        EXPECT_STREQ(e.what(), "singular sign matrix for N=4");
    }
}

TEST(SolveTimes, ResidualBelowTolerance) {
    std::mt19937_64 rng(30);
    for (int n : {2, 3, 5, 6, 7}) {
        const IsingSpec s = random_ising(n, rng, 1.7, 0.6);
        EXPECT_LT(solve_residual(s, solve_times(s)), 1e-10);
    }
}

TEST(Stepwise, StructureForThreeQubits) {
    const DaqcSchedule s = build_sdaqc_schedule({0.1, 0.2, 0.3});
    EXPECT_EQ(s.n_qubits(), 3);
    int analog = 0;
    int flips = 0;
    for (const Op &op : s.lower()) {
        analog += std::holds_alternative<AnalogBlock>(op);
        flips += std::holds_alternative<Rotation>(op);
    }
    EXPECT_EQ(analog, 3);
    EXPECT_EQ(flips, 12);  // 6 layers of two X pulses
    EXPECT_THROW(build_sdaqc_schedule({0.1, 0.2}), InvalidInput);
}

TEST(Stepwise, ReproducesTargetEvolutionExactly) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> gd(0.5, 2.0);
    for (int n : {2, 3, 5, 6}) {
        for (int i = 0; i < 50; ++i) {
            const double g = i % 2 ? gd(rng) : 1.0;
            const double tf = i % 3 ? gd(rng) : 1.0;
            const IsingSpec target = random_ising(n, rng, g, tf);
            const DaqcSchedule s = build_sdaqc_schedule(solve_times(target), g);
            const Eigen::MatrixXcd expected = expi(ising_matrix(target), tf);
            EXPECT_LT(phase_insensitive_distance(schedule_unitary(s), expected), 1e-9) << n;
        }
    }
}

TEST(Stepwise, ExecuteMatchesTargetOnStates) {
    std::mt19937_64 rng(32);
    const IsingSpec target = random_ising(5, rng);
    const DaqcSchedule s = build_sdaqc_schedule(solve_times(target));
    Statevector psi = random_state(5, rng);
    const Eigen::VectorXcd expected = expi(ising_matrix(target), 1.0) * as_vector(psi);
    execute_schedule(psi, s);
    EXPECT_GT(std::norm(expected.dot(as_vector(psi))), 1 - 1e-9);

    Statevector wrong = random_state(3, rng);
    EXPECT_THROW(execute_schedule(wrong, s), InvalidInput);
}

TEST(Stepwise, ZeroTargetActsAsIdentity) {
    const DaqcSchedule s = build_sdaqc_schedule(solve_times(IsingSpec(5)));
    EXPECT_LT(phase_insensitive_distance(schedule_unitary(s), Eigen::MatrixXcd::Identity(32, 32)), 1e-12);
}

TEST(Banged, WindowsMergeAdjacentFlips) {
    const DaqcSchedule s = build_bdaqc_schedule({0.1, 0.2, 0.3}, 0.01);
    const std::vector<std::vector<int>> expected{{1, 2}, {2, 3}, {1, 2}, {2, 3}};
    EXPECT_EQ(s.windows(), expected);
}

TEST(Banged, CaptionTimingRule) {
    const double dt = 0.01;
    const DaqcSchedule s = build_bdaqc_schedule({0.1, 0.2, 0.3}, dt);
    const auto seg = s.segment_durations();
    EXPECT_NEAR(seg[0], 0.1 - 1.5 * dt, 1e-15);
    EXPECT_NEAR(seg[1], 0.2 - dt, 1e-15);
    EXPECT_NEAR(seg[2], 0.3 - 1.5 * dt, 1e-15);
    EXPECT_NEAR(s.total_analog_time(), 0.6, 1e-15);

    const DaqcSchedule one = build_bdaqc_schedule({0.4}, dt);
    EXPECT_NEAR(one.segment_durations()[0], 0.4 - 2 * dt, 1e-15);

    const DaqcSchedule uni = build_bdaqc_schedule({0.1, 0.2, 0.3}, dt, 1.0, BangedTiming::Uniform);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(uni.segment_durations()[i], 0.1 * (i + 1) - dt, 1e-15);
    }
}

TEST(Banged, NegativeSegmentsAreKeptAndFlagged) {
    const DaqcSchedule s = build_bdaqc_schedule({0.01, 0.2, 0.3}, 0.01);
    EXPECT_TRUE(s.has_negative_segments());
    EXPECT_NEAR(s.segment_durations()[0], -0.005, 1e-15);
    EXPECT_FALSE(build_bdaqc_schedule({0.1, 0.2, 0.3}, 0.01).has_negative_segments());
}

TEST(Banged, RejectsNonPositiveWindow) {
    EXPECT_THROW(build_bdaqc_schedule({0.1, 0.2, 0.3}, 0.0), InvalidInput);
    EXPECT_THROW(build_bdaqc_schedule({0.1, 0.2, 0.3}, -1e-3), InvalidInput);
}

TEST(Banged, CloseToStepwiseForShortWindows) {
    std::mt19937_64 rng(33);
    const IsingSpec target = random_ising(3, rng);
    const auto t = solve_times(target);
    for (int i = 0; i < 5; ++i) {
        const Statevector psi = random_state(3, rng);
        Statevector a = psi;
        Statevector b = psi;
        execute_schedule(a, build_sdaqc_schedule(t));
        execute_schedule(b, build_bdaqc_schedule(t, 1e-3));
        EXPECT_GT(fidelity(a, b), 0.9999);
    }
}

TEST(Banged, DistanceShrinksWithWindow) {
    const qft::QftPlan plan = qft::build_qft_plan(3);
    const Eigen::MatrixXcd step = build_dense_unitary(compile_qft_daqc(plan, Mode::Stepwise));
    double previous = 1e9;
    for (double dt : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double d = phase_insensitive_distance(build_dense_unitary(compile_qft_daqc(plan, Mode::Banged, dt)), step);
        EXPECT_LT(d, previous) << dt;
        previous = d;
    }
}

TEST(Dump, MatchesGoldenFiles) {
    const qft::QftPlan plan = qft::build_qft_plan(3);
    const auto t = solve_times(plan.blocks[0].ising);
    EXPECT_EQ(build_sdaqc_schedule(t).dump(), read_golden("sdaqc_n3_block1.txt"));
    EXPECT_EQ(build_bdaqc_schedule(t, 0.003).dump(), read_golden("bdaqc_n3_block1.txt"));
}

TEST(CompileQft, StepwiseIsExact) {
    for (int n : {2, 3, 5, 6}) {
        const Program p = compile_qft_daqc(qft::build_qft_plan(n), Mode::Stepwise);
        const Eigen::MatrixXcd u = reversal_matrix(n) * build_dense_unitary(p);
        EXPECT_LT(phase_insensitive_distance(u, dft_matrix(n)), 1e-9) << n;
    }
}

TEST(CompileQft, BangedThreeQubitsAboveNinetyNinePercent) {
    const Program p = compile_qft_daqc(qft::build_qft_plan(3), Mode::Banged);
    const ProgramRunner runner(p);
    std::mt19937_64 rng(34);
    for (int i = 0; i < 10; ++i) {
        const Statevector in = random_state(3, rng);
        Statevector out = in;
        runner.run(out);
        qft::apply_readout_permutation(out);
        EXPECT_GT(fidelity(out, qft::exact_qft(in)), 0.99);
    }
}

TEST(CompileQft, FourQubitsIsRejected) {
    EXPECT_THROW(compile_qft_daqc(qft::build_qft_plan(4), Mode::Stepwise), SingularSignMatrix);
    EXPECT_THROW(compile_qft_daqc(qft::build_qft_plan(4), Mode::Banged), SingularSignMatrix);
}

TEST(CompileQft, OneSchedulePerBlock) {
    const auto s = qft_block_schedules(qft::build_qft_plan(5), Mode::Banged, 0.01);
    ASSERT_EQ(s.size(), 4u);
    for (const DaqcSchedule &x : s) {
        EXPECT_EQ(x.items().size(), 10u);
        EXPECT_EQ(x.windows().size(), 11u);
    }
}

}  // namespace
