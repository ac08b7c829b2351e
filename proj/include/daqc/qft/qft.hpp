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


#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "daqc/sim/ising.hpp"
#include "daqc/sim/program.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc::qft {

/// y_k = 2^{-n/2} sum_Omega a_Omega exp(2 pi i Omega k / 2^n), evaluated
/// directly in O(4^n).
Statevector exact_qft(const Statevector &state);
Eigen::MatrixXcd exact_qft_matrix(int n_qubits);

/// Local Z-phase angle pi / 2^{k+1} carried by the k-th controlled rotation of
/// a block. Throws InvalidInput for k < 2.
double theta(int k);

/// ZZ coupling of pair (c, k) inside block m: pi / 2^{k-m+2} when c == m,
/// zero otherwise. Requires 1 <= c < k.
double alpha(int c, int k, int m);

/// One controlled-rotation block: the Hadamard on qubit m, the local Z phases
/// of its controlled rotations, and the ZZ Ising target realizing their
/// entangling part.
struct QftBlock {
    int m = 1;
    std::vector<Rotation> sqg_layer;
    IsingSpec ising = IsingSpec(1);
};

struct QftPlan {
    int n_qubits = 1;
    std::vector<QftBlock> blocks;  // n - 1 blocks, m = 1 .. n-1
    int final_hadamard = 1;        // qubit n
    std::vector<std::uint64_t> readout_permutation;
};

QftPlan build_qft_plan(int n_qubits);

/// Ops for the plan with each block's Ising target applied as exact ZZ
/// rotations. The readout permutation is not included.
std::vector<Op> plan_ops(const QftPlan &plan);

/// Hadamard as a generator rotation: exp(i pi/2 (1 - (Z + X)/sqrt 2)).
Rotation hadamard_gate(int qubit);

/// Digital QFT. Plain mode emits Hadamards and cR_k gates. ZZ mode rewrites
/// each cR_k as its two local Z phases followed by zz_gate_sequence(theta_k),
/// so every controlled rotation costs two fixed pi/4 ZZ entanglers.
std::vector<Op> build_dqc_circuit(int n_qubits, bool use_zz_construction);

/// exp(i alpha Z_c Z_k) from two fixed exp(i pi/4 Z_c Z_k) entanglers, Y
/// rotations on c and X flips on k. Returned in application order.
std::vector<Op> zz_gate_sequence(double alpha_angle, int c, int k);

/// Bit-reversal map: out[perm[i]] = in[i].
std::vector<std::uint64_t> bit_reversal(int n_qubits);
void apply_readout_permutation(Statevector &state);

Statevector w_state(int n_qubits);
Statevector ghz_state(int n_qubits);
/// sin(beta) |W_n> + cos(beta) |GHZ_n>.
Statevector beta_state(int n_qubits, double beta);

}  // namespace daqc::qft
