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
#include <functional>
#include <vector>

#include "daqc/sim/program.hpp"

namespace daqc {

inline constexpr int kMaxDenseQubits = 10;

/// Full 2^n x 2^n matrix of a single-qubit operator embedded on `qubit`.
Eigen::MatrixXcd embed_single_qubit(int n_qubits, int qubit, const Mat2 &m);

/// Dense product U_last ... U_first of an op sequence, built from Kronecker
/// embeddings and dense exponentials (never from the statevector kernels),
/// so it can serve as an oracle for them. Throws InvalidInput when an op
/// refers to qubits outside the register or n exceeds kMaxDenseQubits.
Eigen::MatrixXcd build_dense_unitary(const std::vector<Op> &ops, int n_qubits,
                                     const IsingSpec *resource = nullptr);
Eigen::MatrixXcd build_dense_unitary(const Program &program);

/// min over phi of ||A - e^{i phi} B||_F, attained at phi = arg tr(B^dagger A).
double phase_insensitive_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Column-by-column matrix of a linear map given as an in-place state update.
Eigen::MatrixXcd unitary_from_action(int n_qubits, const std::function<void(Statevector &)> &action);

/// exp(i t H_ZZ) for an Ising spec, written out densely.
Eigen::MatrixXcd ising_unitary(const IsingSpec &spec, double t);

}  // namespace daqc
