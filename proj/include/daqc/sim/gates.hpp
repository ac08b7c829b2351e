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

#include <array>
#include <string_view>

#include "daqc/sim/kernels.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc {

using kernels::Mat2;

namespace mat2 {
Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 product(const Mat2 &a, const Mat2 &b);  // a * b
Mat2 adjoint(const Mat2 &a);
/// Largest entry of |U U^dagger - 1|.
double unitarity_defect(const Mat2 &u);
}  // namespace mat2

/// Hermitian generators G of single-qubit gates exp(i * angle * G).
///
/// `Hadamard` is 1 - (Z + X)/sqrt(2), so exp(i * pi/2 * G) is exactly the
/// Hadamard matrix (no stray global phase).
enum class Generator { X, Y, Z, Hadamard };

std::string_view to_string(Generator g);
Mat2 generator_matrix(Generator g);

/// exp(i * angle * G), evaluated in closed form.
Mat2 rotation_matrix(Generator g, double angle);

struct SingleQubitGate {
    int target = 1;  // 1-based
    Mat2 matrix = mat2::identity();
};

/// Diagonal gate on (control, target). phases[(c << 1) | t] multiplies basis
/// states whose control bit is c and target bit is t.
struct DiagonalTwoQubitGate {
    int control = 1;
    int target = 2;
    std::array<cplx, 4> phases{1.0, 1.0, 1.0, 1.0};
};

/// cR_k = |0><0| x 1 + |1><1| x diag(1, e^{2 pi i / 2^k}).
DiagonalTwoQubitGate controlled_rk(int control, int target, int k);

/// Applies U on the target qubit. Throws InvalidInput for a bad target or a
/// matrix that is not unitary within 1e-10.
void apply_single_qubit(Statevector &state, const SingleQubitGate &gate);

/// Throws InvalidInput for control == target, out-of-range qubits, or phases
/// that are not of unit modulus within 1e-12.
void apply_diagonal_two_qubit(Statevector &state, const DiagonalTwoQubitGate &gate);

/// exp(i * angle * Z_a Z_b) applied in place.
void apply_zz_rotation(Statevector &state, int qubit_a, int qubit_b, double angle);

}  // namespace daqc
