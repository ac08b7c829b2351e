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


#include "daqc/sim/program.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <sstream>

#include "daqc/errors.hpp"
#include "daqc/sim/kernels.hpp"

namespace daqc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double drive_amplitude(const DriveWindow &w, std::size_t a) {
    const double scale = w.drive_scale.empty() ? 1.0 : w.drive_scale[a];
    return scale * std::numbers::pi / (2.0 * w.duration);
}

std::vector<int> checked_window_qubits(const DriveWindow &w, int n) {
    if (!(w.duration > 0.0)) {
        throw InvalidInput("drive window duration must be positive");
    }
    if (!w.drive_scale.empty() && w.drive_scale.size() != w.qubits.size()) {
        throw InvalidInput("drive window scale count does not match its qubits");
    }
    std::vector<int> sorted = w.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("drive window lists a qubit twice");
    }
    for (int q : sorted) {
        if (q < 1 || q > n) {
            throw InvalidInput("drive window qubit out of range");
        }
    }
    return sorted;
}

}  // namespace

std::string describe(const Op &op) {
    std::ostringstream os;
    std::visit(Overloaded{
                   [&](const Rotation &r) {
                       os << "R" << to_string(r.generator) << "(" << r.angle << ") q" << r.qubit;
                   },
                   [&](const ZzRotation &z) { os << "ZZ(" << z.angle << ") q" << z.first << ",q" << z.second; },
                   [&](const DiagonalTwoQubitGate &d) { os << "CPHASE q" << d.control << ",q" << d.target; },
                   [&](const AnalogBlock &a) {
                       os << (a.kind == AnalogKind::Stepwise ? "ANALOG_S(" : "ANALOG_B(") << a.duration << ")";
                   },
                   [&](const DriveWindow &w) {
                       os << "WINDOW(" << w.duration << ")";
                       for (int q : w.qubits) {
                           os << " q" << q;
                       }
                   },
               },
               op);
    return os.str();
}

ProgramRunner::ProgramRunner(const Program &program)
    : program_(program), resource_evolution_(program.resource) {
    if (program_.resource.n_qubits() != program_.n_qubits) {
        throw InvalidInput("program resource register does not match the program register");
    }
}

void ProgramRunner::run(Statevector &state, OpPerturbation *noise) const {
    if (state.n_qubits() != program_.n_qubits) {
        throw InvalidInput("state register does not match the program register");
    }
    for (const Op &op : program_.ops) {
        if (noise != nullptr) {
            apply(state, noise->perturb(op));
        } else {
            apply(state, op);
        }
    }
}

void ProgramRunner::apply(Statevector &state, const Op &op) const {
    std::visit(Overloaded{
                   [&](const Rotation &r) {
                       apply_single_qubit(state, SingleQubitGate{r.qubit, rotation_matrix(r.generator, r.angle)});
                   },
                   [&](const ZzRotation &z) { apply_zz_rotation(state, z.first, z.second, z.angle); },
                   [&](const DiagonalTwoQubitGate &d) { apply_diagonal_two_qubit(state, d); },
                   [&](const AnalogBlock &a) { resource_evolution_.apply(state, a.duration); },
                   [&](const DriveWindow &w) { apply_window(state, w); },
               },
               op);
}

// With a homogeneous resource g * sum_{j<k} Z_j Z_k the window Hamiltonian
// splits into blocks labelled by F = sum of z over the undriven qubits:
//   H_F = g [ sum_{a<b in D} z_a z_b + F sum_{a in D} z_a + (F^2 - r) / 2 ]
//         + sum_{a in D} Omega_a X_a,
// with r undriven qubits. Only r + 1 small exponentials are needed.
void ProgramRunner::apply_window(Statevector &state, const DriveWindow &w) const {
    const int n = program_.n_qubits;
    const std::vector<int> driven = checked_window_qubits(w, n);
    if (driven.empty()) {
        resource_evolution_.apply(state, w.duration);
        return;
    }
    const IsingSpec &resource = program_.resource;
    if (!resource.is_homogeneous()) {
        const Eigen::MatrixXcd u = drive_window_dense(resource, w);
        auto amps = state.amplitudes();
        Eigen::Map<Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
        const Eigen::VectorXcd out = u * psi;
        psi = out;
        return;
    }

    const double g = n >= 2 ? resource.coupling(1, 2) : 0.0;
    const int k = static_cast<int>(driven.size());
    const int r = n - k;
    const Eigen::Index local_dim = Eigen::Index{1} << k;

    // Amplitudes in the same order as w.qubits, so drive_scale lines up.
    std::vector<double> omega(driven.size());
    for (std::size_t a = 0; a < driven.size(); ++a) {
        const auto pos = std::find(w.qubits.begin(), w.qubits.end(), driven[a]) - w.qubits.begin();
        omega[a] = drive_amplitude(w, static_cast<std::size_t>(pos));
    }

    // Local bit a (MSB first) is driven qubit driven[a].
    auto local_z = [&](Eigen::Index s, int a) { return ((s >> (k - 1 - a)) & 1) ? -1 : 1; };

    std::vector<Eigen::MatrixXcd> sector(static_cast<std::size_t>(r) + 1);
    for (int ones = 0; ones <= r; ++ones) {
        const int field = r - 2 * ones;
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(local_dim, local_dim);
        for (Eigen::Index s = 0; s < local_dim; ++s) {
            double diag = 0.5 * (static_cast<double>(field) * field - r);
            for (int a = 0; a < k; ++a) {
                diag += field * local_z(s, a);
                for (int b = a + 1; b < k; ++b) {
                    diag += local_z(s, a) * local_z(s, b);
                }
            }
            h(s, s) = g * diag;
            for (int a = 0; a < k; ++a) {
                h(s ^ (Eigen::Index{1} << (k - 1 - a)), s) += omega[static_cast<std::size_t>(a)];
            }
        }
        sector[static_cast<std::size_t>(ones)] = expm_hermitian(h, w.duration);
    }

    std::vector<std::size_t> offset(static_cast<std::size_t>(local_dim), 0);
    std::size_t driven_mask = 0;
    for (Eigen::Index s = 0; s < local_dim; ++s) {
        for (int a = 0; a < k; ++a) {
            if ((s >> (k - 1 - a)) & 1) {
                offset[static_cast<std::size_t>(s)] |= qubit_mask(n, driven[static_cast<std::size_t>(a)]);
            }
        }
    }
    for (int q : driven) {
        driven_mask |= qubit_mask(n, q);
    }

    auto amps = state.amplitudes();
    Eigen::VectorXcd local(local_dim);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & driven_mask) {
            continue;
        }
        const int ones = std::popcount(base);
        for (Eigen::Index s = 0; s < local_dim; ++s) {
            local(s) = amps[base | offset[static_cast<std::size_t>(s)]];
        }
        const Eigen::VectorXcd out = sector[static_cast<std::size_t>(ones)] * local;
        for (Eigen::Index s = 0; s < local_dim; ++s) {
            amps[base | offset[static_cast<std::size_t>(s)]] = out(s);
        }
    }
}

Eigen::MatrixXcd drive_window_dense(const IsingSpec &resource, const DriveWindow &w) {
    const int n = resource.n_qubits();
    checked_window_qubits(w, n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        h(i, i) = resource.energy(static_cast<std::uint64_t>(i));
    }
    for (std::size_t a = 0; a < w.qubits.size(); ++a) {
        const double omega = drive_amplitude(w, a);
        const auto mask = static_cast<Eigen::Index>(qubit_mask(n, w.qubits[a]));
        for (Eigen::Index i = 0; i < dim; ++i) {
            h(i ^ mask, i) += omega;
        }
    }
    return expm_hermitian(h, w.duration);
}

}  // namespace daqc
