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

#include <cstdint>
#include <utility>
#include <vector>

namespace daqc {

/// Two-body ZZ Ising Hamiltonian sum_{j<k} g_jk Z_j Z_k on n qubits, together
/// with the resource coupling g and the target time t_F a DAQC compilation
/// is measured against.
class IsingSpec {
public:
    explicit IsingSpec(int n_qubits, double resource_coupling = 1.0, double target_time = 1.0);

    /// All couplings equal to g (the always-on analog resource).
    static IsingSpec homogeneous(int n_qubits, double g = 1.0);

    /// Only the nearest-neighbour pairs (q, q+1) coupled, with strength g.
    static IsingSpec nearest_neighbour_line(int n_qubits, double g = 1.0);

    int n_qubits() const { return n_; }
    double resource_coupling() const { return g_; }
    double target_time() const { return t_final_; }

    /// 1-based qubits, order-insensitive; j == k is rejected.
    double coupling(int j, int k) const;
    void set_coupling(int j, int k, double value);

    /// Pairs (j, k), j < k, in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;

    /// Couplings listed in pairs() order.
    std::vector<double> vectorized() const;

    bool is_homogeneous(double tol = 0.0) const;
    bool all_zero() const;

    /// sum_{j<k} g_jk z_j z_k for the computational basis state `index`.
    double energy(std::uint64_t index) const;

private:
    std::size_t slot(int j, int k) const;

    int n_;
    double g_;
    double t_final_;
    std::vector<double> couplings_;  // row-major n*n, upper triangle used
};

}  // namespace daqc
