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
#include "daqc/sim/dense.hpp"
#include "daqc/sim/evolution.hpp"
#include "daqc/sim/gates.hpp"
#include "daqc/sim/program.hpp"
#include "test_util.hpp"

namespace {

using namespace daqc;
using namespace daqc::testing;
using std::numbers::pi;

Eigen::MatrixXcd to_eigen(const Mat2 &m) {
    Eigen::MatrixXcd e(2, 2);
    e << m[0], m[1], m[2], m[3];
    return e;
}

TEST(Statevector, BasisUsesQubitOneAsMostSignificantBit) {
    EXPECT_EQ(qubit_mask(3, 1), 4u);
    EXPECT_EQ(qubit_mask(3, 3), 1u);
    EXPECT_EQ(z_eigenvalue(3, 1, 4), -1);
    EXPECT_EQ(z_eigenvalue(3, 2, 4), 1);
    const Statevector s = Statevector::basis(2, 3);
    EXPECT_EQ(s[3], cplx(1, 0));
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(Statevector, RejectsUnnormalizedAmplitudes) {
    EXPECT_THROW(Statevector::from_amplitudes({cplx(1, 0), cplx(1, 0)}), InvalidInput);
    EXPECT_THROW(Statevector::from_amplitudes({cplx(1, 0), cplx(0, 0), cplx(0, 0)}), InvalidInput);
}

TEST(Statevector, FidelityIsPhaseInsensitive) {
    std::mt19937_64 rng(5);
    const Statevector a = random_state(3, rng);
    std::vector<cplx> rot(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        rot[i] = a[i] * std::polar(1.0, 0.7);
    }
    EXPECT_NEAR(fidelity(a, Statevector::from_amplitudes(rot)), 1.0, 1e-14);
}

TEST(Gates, RotationMatchesMatrixExponentialOfGenerator) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (Generator g : {Generator::X, Generator::Y, Generator::Z, Generator::Hadamard}) {
        const Eigen::MatrixXcd gen = to_eigen(generator_matrix(g));
        for (int i = 0; i < 20; ++i) {
            const double a = d(rng);
            const Eigen::MatrixXcd expected = expi(gen, a);
            EXPECT_LT((to_eigen(rotation_matrix(g, a)) - expected).norm(), 1e-12) << to_string(g);
        }
    }
}

TEST(Gates, HadamardGeneratorAtHalfPiIsHadamard) {
    const Eigen::MatrixXcd h = to_eigen(rotation_matrix(Generator::Hadamard, pi / 2));
    EXPECT_LT(phase_distance(h, to_eigen(mat2::hadamard())), 1e-12);
}

TEST(Gates, SingleQubitApplicationMatchesKroneckerEmbedding) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for (int q = 1; q <= n; ++q) {
            Statevector s = random_state(n, rng);
            const Eigen::VectorXcd before = as_vector(s);
            const Mat2 m = rotation_matrix(Generator::Y, 0.3 * q);
            apply_single_qubit(s, SingleQubitGate{q, m});
            Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
            for (int k = 1; k <= n; ++k) {
                full = kron(full, k == q ? to_eigen(m) : Eigen::MatrixXcd::Identity(2, 2));
            }
            EXPECT_LT((as_vector(s) - full * before).norm(), 1e-12);
            EXPECT_LT((embed_single_qubit(n, q, m) - full).norm(), 1e-14);
        }
    }
}

TEST(Gates, RejectsNonUnitaryMatrix) {
    Statevector s = Statevector::basis(2, 0);
    EXPECT_THROW(apply_single_qubit(s, SingleQubitGate{1, Mat2{2.0, 0.0, 0.0, 1.0}}), InvalidInput);
    EXPECT_THROW(apply_single_qubit(s, SingleQubitGate{3, mat2::pauli_x()}), InvalidInput);
}

TEST(Gates, ControlledRkIsPhaseOnElevenComponent) {
    for (int k = 1; k <= 6; ++k) {
        const Eigen::MatrixXcd u = unitary_from_action(2, [&](Statevector &s) {
            apply_diagonal_two_qubit(s, controlled_rk(1, 2, k));
        });
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4);
        expected(3, 3) = std::polar(1.0, 2 * pi / std::ldexp(1.0, k));
        EXPECT_LT((u - expected).norm(), 1e-14) << k;
    }
}

TEST(Gates, ZzRotationMatchesDenseExponential) {
    std::mt19937_64 rng(8);
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            if (a == b) {
                continue;
            }
            const Eigen::MatrixXcd u =
                unitary_from_action(4, [&](Statevector &s) { apply_zz_rotation(s, a, b, 0.37); });
            EXPECT_LT((u - expi(on_qubits(4, {{a, 'Z'}, {b, 'Z'}}), 0.37)).norm(), 1e-12);
        }
    }
}

TEST(Gates, ConjugationByXFlipsOnlyItsOwnZ) {
    const int n = 4;
    for (int q = 1; q <= n; ++q) {
        const Eigen::MatrixXcd x = on_qubits(n, {{q, 'X'}});
        for (int k = 1; k <= n; ++k) {
            const Eigen::MatrixXcd z = on_qubits(n, {{k, 'Z'}});
            const Eigen::MatrixXcd expected = q == k ? Eigen::MatrixXcd(-z) : z;
            EXPECT_LT((x * z * x - expected).norm(), 1e-14);
        }
    }
}

TEST(Ising, ValidatesPairsAndCoupling) {
    IsingSpec s(3);
    EXPECT_THROW(s.set_coupling(2, 2, 1.0), InvalidInput);
    EXPECT_THROW(s.coupling(0, 1), InvalidInput);
    EXPECT_THROW(IsingSpec(3, 0.0), InvalidInput);
    s.set_coupling(3, 1, 0.5);
    EXPECT_EQ(s.coupling(1, 3), 0.5);
    EXPECT_EQ(s.pairs().size(), 3u);
    EXPECT_TRUE(IsingSpec::homogeneous(4, 2.0).is_homogeneous());
    EXPECT_FALSE(IsingSpec::nearest_neighbour_line(4).is_homogeneous());
    EXPECT_TRUE(IsingSpec(4).all_zero());
}

TEST(Evolution, DiagonalMatchesDenseExponential) {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 5; ++n) {
        const IsingSpec spec = random_ising(n, rng);
        const Eigen::MatrixXcd u =
            unitary_from_action(n, [&](Statevector &s) { evolve_ising_diagonal(s, spec, 0.83); });
        EXPECT_LT((u - expi(ising_matrix(spec), 0.83)).norm(), 1e-11);
        EXPECT_LT((ising_unitary(spec, 0.83) - u).norm(), 1e-11);
    }
}

TEST(Evolution, HermitianExponentialMatchesPade) {
    std::mt19937_64 rng(10);
    std::normal_distribution<double> d(0.0, 1.0);
    Eigen::MatrixXcd a(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            a(i, j) = cplx(d(rng), d(rng));
        }
    }
    const Eigen::MatrixXcd h = a + a.adjoint();
    EXPECT_LT((expm_hermitian(h, -0.4) - expi(h, -0.4)).norm(), 1e-11);
    EXPECT_THROW(DenseHamiltonian(Eigen::MatrixXcd(a)), InvalidInput);
}

TEST(DriveWindow, SectorRouteMatchesDenseRoutes) {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 6; ++n) {
        const IsingSpec resource = IsingSpec::homogeneous(n, 1.0);
        Program p;
        p.n_qubits = n;
        p.resource = resource;
        const ProgramRunner runner(p);
        const std::vector<std::vector<int>> windows = {{1}, {1, n}, {1, 2}, n >= 4 ? std::vector<int>{1, 2, 3, 4}
                                                                                   : std::vector<int>{2}};
        for (const auto &q : windows) {
            DriveWindow w{q, 0.05, {}};
            if (q.size() == 2) {
                w.drive_scale = {1.0003, 0.9991};
            }
            const Eigen::MatrixXcd u = unitary_from_action(n, [&](Statevector &s) { runner.apply(s, w); });
            Eigen::MatrixXcd h = ising_matrix(resource);
            for (std::size_t a = 0; a < q.size(); ++a) {
                const double scale = w.drive_scale.empty() ? 1.0 : w.drive_scale[a];
                h += scale * pi / (2 * w.duration) * on_qubits(n, {{q[a], 'X'}});
            }
            EXPECT_LT((u - expi(h, w.duration)).norm(), 1e-10) << "n=" << n;
            EXPECT_LT((u - drive_window_dense(resource, w)).norm(), 1e-10) << "n=" << n;
        }
    }
}

TEST(DriveWindow, WithoutResourceGivesIX) {
    Program p;
    p.n_qubits = 1;
    p.resource = IsingSpec::homogeneous(1);
    const ProgramRunner runner(p);
    const Eigen::MatrixXcd u =
        unitary_from_action(1, [&](Statevector &s) { runner.apply(s, DriveWindow{{1}, 0.2, {}}); });
    EXPECT_LT((u - cplx(0, 1) * pauli('X')).norm(), 1e-12);
}

TEST(DriveWindow, InhomogeneousResourceFallsBackToDense) {
    std::mt19937_64 rng(12);
    Program p;
    p.n_qubits = 4;
    p.resource = random_ising(4, rng);
    const ProgramRunner runner(p);
    const DriveWindow w{{2, 3}, 0.1, {}};
    const Eigen::MatrixXcd u = unitary_from_action(4, [&](Statevector &s) { runner.apply(s, w); });
    Eigen::MatrixXcd h = ising_matrix(p.resource);
    h += pi / 0.2 * (on_qubits(4, {{2, 'X'}}) + on_qubits(4, {{3, 'X'}}));
    EXPECT_LT((u - expi(h, 0.1)).norm(), 1e-10);
}

TEST(Program, RunnerMatchesIndependentDenseBuild) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ang(-2.0, 2.0);
    const int n = 4;
    Program p;
    p.n_qubits = n;
    p.resource = IsingSpec::homogeneous(n, 0.7);
    for (int i = 0; i < 30; ++i) {
        const int q = 1 + static_cast<int>(rng() % n);
        const int r = 1 + static_cast<int>((q + rng() % (n - 1)) % n);
        switch (i % 6) {
            case 0:
                p.ops.emplace_back(Rotation{q, Generator::X, ang(rng)});
                break;
            case 1:
                p.ops.emplace_back(Rotation{q, Generator::Hadamard, ang(rng)});
                break;
            case 2:
                p.ops.emplace_back(ZzRotation{q, r == q ? (q % n) + 1 : r, ang(rng)});
                break;
            case 3:
                p.ops.emplace_back(AnalogBlock{ang(rng), AnalogKind::Stepwise});
                break;
            case 4:
                p.ops.emplace_back(DriveWindow{{q}, 0.01, {}});
                break;
            default:
                p.ops.emplace_back(controlled_rk(q, r == q ? (q % n) + 1 : r, 3));
        }
    }
    const ProgramRunner runner(p);
    const Eigen::MatrixXcd u = unitary_from_action(n, [&](Statevector &s) { runner.run(s); });
    EXPECT_LT((u - build_dense_unitary(p)).norm(), 1e-10);
}

TEST(Dense, PhaseInsensitiveDistanceIgnoresGlobalPhase) {
    std::mt19937_64 rng(14);
    const Eigen::MatrixXcd u = ising_unitary(random_ising(3, rng), 0.5);
    EXPECT_LT(phase_insensitive_distance(std::polar(1.0, 1.1) * u, u), 1e-13);
    EXPECT_GT(phase_insensitive_distance(u, Eigen::MatrixXcd::Identity(8, 8)), 0.1);
}

}  // namespace
