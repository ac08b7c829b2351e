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


#include "daqc/sim/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "daqc/errors.hpp"
#include "daqc/sim/kernels.hpp"

namespace daqc {

DiagonalEvolution::DiagonalEvolution(const IsingSpec &spec) : n_(spec.n_qubits()) {
    const std::size_t dim = std::size_t{1} << n_;
    std::vector<double> energy(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        energy[i] = spec.energy(i);
    }
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return energy[a] < energy[b]; });

    level_of_.resize(dim);
    for (std::size_t idx : order) {
        if (levels_.empty() || energy[idx] - levels_.back() > 1e-13 * (1.0 + std::abs(energy[idx]))) {
            levels_.push_back(energy[idx]);
        }
        level_of_[idx] = static_cast<std::uint32_t>(levels_.size() - 1);
    }
}

void DiagonalEvolution::apply(Statevector &state, double t) const {
    if (state.n_qubits() != n_) {
        throw InvalidInput("register size mismatch in diagonal evolution");
    }
    if (t == 0.0) {
        return;
    }
    std::vector<cplx> level_phase(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        level_phase[l] = std::polar(1.0, t * levels_[l]);
    }
    std::vector<cplx> phases(level_of_.size());
    for (std::size_t i = 0; i < phases.size(); ++i) {
        phases[i] = level_phase[level_of_[i]];
    }
    kernels::active().mul_diag(state.amplitudes(), phases);
}

void evolve_ising_diagonal(Statevector &state, const IsingSpec &spec, double t) {
    if (spec.n_qubits() != state.n_qubits()) {
        throw InvalidInput("register size mismatch in Ising evolution");
    }
    const std::size_t dim = state.dim();
    std::vector<cplx> phases(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        phases[i] = std::polar(1.0, t * spec.energy(i));
    }
    kernels::active().mul_diag(state.amplitudes(), phases);
}

DenseHamiltonian::DenseHamiltonian(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw InvalidInput("Hamiltonian must be square");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidInput("Hamiltonian is not Hermitian within 1e-10");
    }
}

DenseHamiltonian DenseHamiltonian::from_ising(const IsingSpec &spec) {
    const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        h(i, i) = spec.energy(static_cast<std::uint64_t>(i));
    }
    return DenseHamiltonian(std::move(h));
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd &hermitian, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian);
    if (eig.info() != Eigen::Success) {
        throw NumericalFailure("Hermitian eigendecomposition did not converge");
    }
    const Eigen::VectorXd &w = eig.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        phases(i) = std::polar(1.0, t * w(i));
    }
    const Eigen::MatrixXcd &v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

void expm_evolve(Statevector &state, const DenseHamiltonian &h, double t) {
    if (h.dim() != static_cast<Eigen::Index>(state.dim())) {
        throw InvalidInput("Hamiltonian dimension does not match the state");
    }
    const Eigen::MatrixXcd u = expm_hermitian(h.matrix(), t);
    auto amps = state.amplitudes();
    Eigen::Map<Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
    const Eigen::VectorXcd out = u * psi;
    psi = out;
}

}  // namespace daqc
