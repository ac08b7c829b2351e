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


#include "daqc/sim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "daqc/errors.hpp"
#include "daqc/sim/kernels.hpp"

namespace daqc {
namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidInput("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                           std::to_string(n_qubits));
    }
}

int qubits_for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
        throw InvalidInput("amplitude count must be a power of two >= 2, got " + std::to_string(length));
    }
    const int n = std::countr_zero(length);
    check_qubit_count(n);
    return n;
}

}  // namespace

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw InvalidInput("basis index " + std::to_string(index) + " out of range for " +
                           std::to_string(n_qubits) + " qubits");
    }
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    amps[index] = 1.0;
    return Statevector(n_qubits, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
    const int n = qubits_for_length(amplitudes.size());
    const double norm2 = kernels::active().norm2(amplitudes);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
        throw InvalidInput("amplitudes are not normalized (norm " + std::to_string(std::sqrt(norm2)) + ")");
    }
    return Statevector(n, std::move(amplitudes));
}

Statevector Statevector::normalized(std::vector<cplx> amplitudes) {
    const int n = qubits_for_length(amplitudes.size());
    const double norm = std::sqrt(kernels::active().norm2(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InvalidInput("cannot normalize a zero or non-finite vector");
    }
    for (cplx &a : amplitudes) {
        a /= norm;
    }
    return Statevector(n, std::move(amplitudes));
}

double Statevector::norm() const {
    return std::sqrt(kernels::active().norm2(amps_));
}

cplx inner_product(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw InvalidInput("inner product of states with different dimensions");
    }
    return kernels::active().inner(a.amplitudes(), b.amplitudes());
}

double fidelity(const Statevector &a, const Statevector &b) {
    const double f = std::norm(inner_product(a, b));
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace daqc
