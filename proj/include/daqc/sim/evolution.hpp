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
#include "daqc/sim/statevector.hpp"

namespace daqc {

/// Precomputed spectrum of a diagonal Ising Hamiltonian, so repeated
/// evolutions cost one exp per distinct energy level plus a vector multiply.
class DiagonalEvolution {
public:
    explicit DiagonalEvolution(const IsingSpec &spec);

    int n_qubits() const { return n_; }
    const std::vector<double> &levels() const { return levels_; }
    double energy(std::uint64_t index) const { return levels_[level_of_[index]]; }

    /// state <- exp(i t H) state. Negative t is allowed.
    void apply(Statevector &state, double t) const;

private:
    int n_;
    std::vector<double> levels_;
    std::vector<std::uint32_t> level_of_;
};

/// Multiplies each basis amplitude by exp(i t sum_{j<k} g_jk z_j z_k).
void evolve_ising_diagonal(Statevector &state, const IsingSpec &spec, double t);

/// Hermitian matrix on the full register (hbar = 1).
class DenseHamiltonian {
public:
    /// Throws InvalidInput if the matrix is not square or not Hermitian within
    /// 1e-10.
    explicit DenseHamiltonian(Eigen::MatrixXcd matrix);

    /// Diagonal Ising Hamiltonian written out densely.
    static DenseHamiltonian from_ising(const IsingSpec &spec);

    const Eigen::MatrixXcd &matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Eigen::MatrixXcd matrix_;
};

/// exp(i t H) through a Hermitian eigendecomposition.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd &hermitian, double t);

/// state <- exp(i t H) state; exact up to the eigensolver's round-off.
void expm_evolve(Statevector &state, const DenseHamiltonian &h, double t);

}  // namespace daqc
