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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace daqc {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 14;

/// Bit of the basis index that encodes `qubit` (1-based). Qubit 1 is the most
/// significant bit, so basis labels read like the top-to-bottom wires of a
/// circuit diagram.
inline std::size_t qubit_mask(int n_qubits, int qubit) {
    return std::size_t{1} << (n_qubits - qubit);
}

/// Computational-basis eigenvalue of Z on `qubit`: +1 for bit 0, -1 for bit 1.
inline int z_eigenvalue(int n_qubits, int qubit, std::uint64_t index) {
    return (index & qubit_mask(n_qubits, qubit)) ? -1 : 1;
}

/// Normalized pure state of n qubits.
class Statevector {
public:
    /// |index>; throws InvalidInput when index >= 2^n or n is outside [1, 14].
    static Statevector basis(int n_qubits, std::uint64_t index);

    /// Takes ownership of amplitudes whose length is a power of two and whose
    /// norm is 1 within 1e-10.
    static Statevector from_amplitudes(std::vector<cplx> amplitudes);

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static Statevector normalized(std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

private:
    Statevector(int n_qubits, std::vector<cplx> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<cplx> amps_;
};

/// |<a|b>|^2. Throws InvalidInput on dimension mismatch.
double fidelity(const Statevector &a, const Statevector &b);

/// <a|b>.
cplx inner_product(const Statevector &a, const Statevector &b);

}  // namespace daqc
