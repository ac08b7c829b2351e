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


#include <cmath>
#include <numbers>

#include "daqc/errors.hpp"
#include "daqc/qft/qft.hpp"

namespace daqc::qft {
namespace {

void require_two_qubits(int n) {
    if (n < 2) {
        throw InvalidInput("W and GHZ states need at least 2 qubits");
    }
}

}  // namespace

Statevector w_state(int n_qubits) {
    require_two_qubits(n_qubits);
    std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (int q = 1; q <= n_qubits; ++q) {
        amps[qubit_mask(n_qubits, q)] = a;
    }
    return Statevector::from_amplitudes(std::move(amps));
}

Statevector ghz_state(int n_qubits) {
    require_two_qubits(n_qubits);
    std::vector<cplx> amps(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps.front() = 1.0 / std::numbers::sqrt2;
    amps.back() = 1.0 / std::numbers::sqrt2;
    return Statevector::from_amplitudes(std::move(amps));
}

Statevector beta_state(int n_qubits, double beta) {
    const Statevector w = w_state(n_qubits);
    const Statevector ghz = ghz_state(n_qubits);
    std::vector<cplx> amps(w.dim());
    const double s = std::sin(beta);
    const double c = std::cos(beta);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = s * w[i] + c * ghz[i];
    }
    // W and GHZ have disjoint supports for n >= 2, so this only absorbs round-off.
    return Statevector::normalized(std::move(amps));
}

}  // namespace daqc::qft
