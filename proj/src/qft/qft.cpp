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


#include "daqc/qft/qft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "daqc/errors.hpp"

namespace daqc::qft {

using std::numbers::pi;

Statevector exact_qft(const Statevector &state) {
    const std::size_t dim = state.dim();
    std::vector<cplx> twiddle(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        twiddle[j] = std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(dim));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<cplx> out(dim, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < dim; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t omega = 0; omega < dim; ++omega) {
            acc += state[omega] * twiddle[(omega * k) % dim];
        }
        out[k] = acc * scale;
    }
    return Statevector::from_amplitudes(std::move(out));
}

Eigen::MatrixXcd exact_qft_matrix(int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd f(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index omega = 0; omega < dim; ++omega) {
            const auto phase_index = static_cast<double>((omega * k) % dim);
            f(k, omega) = scale * std::polar(1.0, 2.0 * pi * phase_index / static_cast<double>(dim));
        }
    }
    return f;
}

double theta(int k) {
    if (k < 2) {
        throw InvalidInput("theta_k is defined for k >= 2, got k = " + std::to_string(k));
    }
    return pi / std::ldexp(1.0, k + 1);
}

double alpha(int c, int k, int m) {
    if (c < 1 || k <= c || m < 1) {
        throw InvalidInput("alpha(c, k, m) needs 1 <= c < k and m >= 1");
    }
    if (c != m) {
        return 0.0;
    }
    return pi / std::ldexp(1.0, k - m + 2);
}

Rotation hadamard_gate(int qubit) {
    return Rotation{qubit, Generator::Hadamard, pi / 2.0};
}

QftPlan build_qft_plan(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidInput("QFT plan needs 1 <= n <= " + std::to_string(kMaxQubits));
    }
    QftPlan plan;
    plan.n_qubits = n_qubits;
    for (int m = 1; m < n_qubits; ++m) {
        QftBlock block;
        block.m = m;
        block.ising = IsingSpec(n_qubits);
        block.sqg_layer.push_back(hadamard_gate(m));
        // The identity part of theta_k (1 - Z_q - Z_m) is a global phase and
        // is dropped.
        for (int k = 2; k <= n_qubits - m + 1; ++k) {
            const int partner = k + m - 1;
            block.sqg_layer.push_back(Rotation{m, Generator::Z, -theta(k)});
            block.sqg_layer.push_back(Rotation{partner, Generator::Z, -theta(k)});
        }
        for (auto [c, k] : block.ising.pairs()) {
            block.ising.set_coupling(c, k, alpha(c, k, m));
        }
        plan.blocks.push_back(std::move(block));
    }
    plan.final_hadamard = n_qubits;
    plan.readout_permutation = bit_reversal(n_qubits);
    return plan;
}

std::vector<Op> plan_ops(const QftPlan &plan) {
    std::vector<Op> ops;
    for (const QftBlock &block : plan.blocks) {
        for (const Rotation &r : block.sqg_layer) {
            ops.emplace_back(r);
        }
        const double t_final = block.ising.target_time();
        for (auto [c, k] : block.ising.pairs()) {
            const double g = block.ising.coupling(c, k);
            if (g != 0.0) {
                ops.emplace_back(ZzRotation{c, k, g * t_final});
            }
        }
    }
    ops.emplace_back(hadamard_gate(plan.final_hadamard));
    return ops;
}

std::vector<Op> zz_gate_sequence(double alpha_angle, int c, int k) {
    if (c == k) {
        throw InvalidInput("ZZ gate construction needs two distinct qubits");
    }
    const double quarter = pi / 4.0;
    // Operator product e^{i pi/4 Y_c} e^{i pi/4 ZZ} e^{i a Y_c} X_k e^{i pi/4 ZZ} X_k e^{-i pi/4 Y_c},
    // listed right to left. X_k is exp(i pi/2 X) = i X; the two factors of i
    // give a global sign.
    return {
        Rotation{c, Generator::Y, -quarter},
        Rotation{k, Generator::X, pi / 2.0},
        ZzRotation{c, k, quarter},
        Rotation{k, Generator::X, pi / 2.0},
        Rotation{c, Generator::Y, alpha_angle},
        ZzRotation{c, k, quarter},
        Rotation{c, Generator::Y, quarter},
    };
}

std::vector<Op> build_dqc_circuit(int n_qubits, bool use_zz_construction) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidInput("DQC circuit needs 1 <= n <= " + std::to_string(kMaxQubits));
    }
    std::vector<Op> ops;
    for (int m = 1; m < n_qubits; ++m) {
        ops.emplace_back(hadamard_gate(m));
        for (int k = 2; k <= n_qubits - m + 1; ++k) {
            const int partner = k + m - 1;
            if (!use_zz_construction) {
                ops.emplace_back(controlled_rk(partner, m, k));
                continue;
            }
            ops.emplace_back(Rotation{m, Generator::Z, -theta(k)});
            ops.emplace_back(Rotation{partner, Generator::Z, -theta(k)});
            for (Op &op : zz_gate_sequence(alpha(m, partner, m), m, partner)) {
                ops.push_back(std::move(op));
            }
        }
    }
    ops.emplace_back(hadamard_gate(n_qubits));
    return ops;
}

std::vector<std::uint64_t> bit_reversal(int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<std::uint64_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint64_t r = 0;
        for (int b = 0; b < n_qubits; ++b) {
            if (i & (std::size_t{1} << b)) {
                r |= std::uint64_t{1} << (n_qubits - 1 - b);
            }
        }
        perm[i] = r;
    }
    return perm;
}

void apply_readout_permutation(Statevector &state) {
    const auto perm = bit_reversal(state.n_qubits());
    auto amps = state.amplitudes();
    std::vector<cplx> out(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out[perm[i]] = amps[i];
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

}  // namespace daqc::qft
