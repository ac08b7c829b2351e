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


#include "daqc/sim/ising.hpp"

#include <cmath>
#include <string>

#include "daqc/errors.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc {

IsingSpec::IsingSpec(int n_qubits, double resource_coupling, double target_time)
    : n_(n_qubits), g_(resource_coupling), t_final_(target_time) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidInput("IsingSpec qubit count out of range: " + std::to_string(n_qubits));
    }
    if (!(resource_coupling > 0.0) || !std::isfinite(resource_coupling)) {
        throw InvalidInput("resource coupling g must be positive and finite");
    }
    if (!std::isfinite(target_time)) {
        throw InvalidInput("target time must be finite");
    }
    couplings_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
}

IsingSpec IsingSpec::homogeneous(int n_qubits, double g) {
    IsingSpec spec(n_qubits, g);
    for (auto [j, k] : spec.pairs()) {
        spec.set_coupling(j, k, g);
    }
    return spec;
}

IsingSpec IsingSpec::nearest_neighbour_line(int n_qubits, double g) {
    IsingSpec spec(n_qubits, g);
    for (int q = 1; q < n_qubits; ++q) {
        spec.set_coupling(q, q + 1, g);
    }
    return spec;
}

std::size_t IsingSpec::slot(int j, int k) const {
    if (j < 1 || k < 1 || j > n_ || k > n_ || j == k) {
        throw InvalidInput("invalid coupling pair (" + std::to_string(j) + ", " + std::to_string(k) + ")");
    }
    if (j > k) {
        std::swap(j, k);
    }
    return static_cast<std::size_t>(j - 1) * n_ + (k - 1);
}

double IsingSpec::coupling(int j, int k) const {
    return couplings_[slot(j, k)];
}

void IsingSpec::set_coupling(int j, int k, double value) {
    if (!std::isfinite(value)) {
        throw InvalidInput("coupling must be finite");
    }
    couplings_[slot(j, k)] = value;
}

std::vector<std::pair<int, int>> IsingSpec::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 1; j <= n_; ++j) {
        for (int k = j + 1; k <= n_; ++k) {
            out.emplace_back(j, k);
        }
    }
    return out;
}

std::vector<double> IsingSpec::vectorized() const {
    std::vector<double> out;
    for (auto [j, k] : pairs()) {
        out.push_back(coupling(j, k));
    }
    return out;
}

bool IsingSpec::is_homogeneous(double tol) const {
    const auto v = vectorized();
    if (v.empty()) {
        return true;
    }
    for (double x : v) {
        if (std::abs(x - v.front()) > tol) {
            return false;
        }
    }
    return true;
}

bool IsingSpec::all_zero() const {
    for (double x : couplings_) {
        if (x != 0.0) {
            return false;
        }
    }
    return true;
}

double IsingSpec::energy(std::uint64_t index) const {
    double e = 0.0;
    for (int j = 1; j <= n_; ++j) {
        const int zj = z_eigenvalue(n_, j, index);
        for (int k = j + 1; k <= n_; ++k) {
            const double g = couplings_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)];
            if (g != 0.0) {
                e += g * zj * z_eigenvalue(n_, k, index);
            }
        }
    }
    return e;
}

}  // namespace daqc
