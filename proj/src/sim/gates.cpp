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


#include "daqc/sim/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "daqc/errors.hpp"

namespace daqc {

namespace mat2 {

Mat2 identity() {
    return {1.0, 0.0, 0.0, 1.0};
}
Mat2 pauli_x() {
    return {0.0, 1.0, 1.0, 0.0};
}
Mat2 pauli_y() {
    return {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0};
}
Mat2 pauli_z() {
    return {1.0, 0.0, 0.0, -1.0};
}
Mat2 hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}

Mat2 product(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

double unitarity_defect(const Mat2 &u) {
    const Mat2 p = product(u, adjoint(u));
    const Mat2 id = identity();
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(p[i] - id[i]));
    }
    return worst;
}

}  // namespace mat2

std::string_view to_string(Generator g) {
    switch (g) {
        case Generator::X:
            return "X";
        case Generator::Y:
            return "Y";
        case Generator::Z:
            return "Z";
        case Generator::Hadamard:
            return "H";
    }
    return "?";
}

Mat2 generator_matrix(Generator g) {
    switch (g) {
        case Generator::X:
            return mat2::pauli_x();
        case Generator::Y:
            return mat2::pauli_y();
        case Generator::Z:
            return mat2::pauli_z();
        case Generator::Hadamard: {
            const Mat2 h = mat2::hadamard();
            return {1.0 - h[0], -h[1], -h[2], 1.0 - h[3]};
        }
    }
    return mat2::identity();
}

Mat2 rotation_matrix(Generator g, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const cplx is{0.0, s};
    if (g == Generator::Hadamard) {
        // G = 1 - Hhat with Hhat^2 = 1: exp(i a G) = e^{i a} (cos a - i sin a Hhat).
        const Mat2 h = mat2::hadamard();
        const cplx phase = std::polar(1.0, angle);
        return {phase * (c - is * h[0]), phase * (-is * h[1]), phase * (-is * h[2]), phase * (c - is * h[3])};
    }
    // Pauli P: exp(i a P) = cos a + i sin a P.
    const Mat2 p = generator_matrix(g);
    return {c + is * p[0], is * p[1], is * p[2], c + is * p[3]};
}

DiagonalTwoQubitGate controlled_rk(int control, int target, int k) {
    if (k < 1) {
        throw InvalidInput("controlled rotation index must be >= 1");
    }
    DiagonalTwoQubitGate gate;
    gate.control = control;
    gate.target = target;
    gate.phases[3] = std::polar(1.0, 2.0 * std::numbers::pi / std::ldexp(1.0, k));
    return gate;
}

namespace {

void check_qubit(const Statevector &state, int qubit) {
    if (qubit < 1 || qubit > state.n_qubits()) {
        throw InvalidInput("qubit index " + std::to_string(qubit) + " out of range for " +
                           std::to_string(state.n_qubits()) + " qubits");
    }
}

}  // namespace

void apply_single_qubit(Statevector &state, const SingleQubitGate &gate) {
    check_qubit(state, gate.target);
    if (mat2::unitarity_defect(gate.matrix) > 1e-10) {
        throw InvalidInput("single-qubit matrix is not unitary");
    }
    kernels::active().apply_1q(state.amplitudes(), qubit_mask(state.n_qubits(), gate.target), gate.matrix);
}

void apply_diagonal_two_qubit(Statevector &state, const DiagonalTwoQubitGate &gate) {
    check_qubit(state, gate.control);
    check_qubit(state, gate.target);
    if (gate.control == gate.target) {
        throw InvalidInput("control and target must differ");
    }
    for (const cplx &p : gate.phases) {
        if (std::abs(std::abs(p) - 1.0) > 1e-12) {
            throw InvalidInput("diagonal gate phases must have unit modulus");
        }
    }
    const std::size_t cm = qubit_mask(state.n_qubits(), gate.control);
    const std::size_t tm = qubit_mask(state.n_qubits(), gate.target);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t sel = ((i & cm) ? 2u : 0u) | ((i & tm) ? 1u : 0u);
        amps[i] *= gate.phases[sel];
    }
}

void apply_zz_rotation(Statevector &state, int qubit_a, int qubit_b, double angle) {
    check_qubit(state, qubit_a);
    check_qubit(state, qubit_b);
    if (qubit_a == qubit_b) {
        throw InvalidInput("ZZ rotation needs two distinct qubits");
    }
    const std::size_t mask = qubit_mask(state.n_qubits(), qubit_a) | qubit_mask(state.n_qubits(), qubit_b);
    const cplx same = std::polar(1.0, angle);
    const cplx differ = std::conj(same);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // z_a z_b = +1 when both bits agree.
        const auto bits = std::popcount(i & mask);
        amps[i] *= (bits == 1) ? differ : same;
    }
}

}  // namespace daqc
