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


#include "daqc/sim/dense.hpp"

#include <cmath>
#include <string>

#include "daqc/errors.hpp"

namespace daqc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_dense_qubit(int n, int q) {
    if (q < 1 || q > n) {
        throw InvalidInput("op acts on qubit " + std::to_string(q) + " outside a " + std::to_string(n) +
                           "-qubit register");
    }
}

Eigen::MatrixXcd pauli_z_string(int n, int a, int b) {
    return embed_single_qubit(n, a, mat2::pauli_z()) * embed_single_qubit(n, b, mat2::pauli_z());
}

}  // namespace

Eigen::MatrixXcd embed_single_qubit(int n_qubits, int qubit, const Mat2 &m) {
    // Kronecker product 1 x ... x m x ... x 1 with qubit 1 leftmost.
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n_qubits; ++q) {
        Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
        if (q == qubit) {
            factor << m[0], m[1], m[2], m[3];
        }
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * factor;
            }
        }
        out = std::move(next);
    }
    return out;
}

Eigen::MatrixXcd build_dense_unitary(const std::vector<Op> &ops, int n, const IsingSpec *resource) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw InvalidInput("dense unitaries are limited to 1.." + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (resource != nullptr && resource->n_qubits() != n) {
        throw InvalidInput("resource register does not match");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    auto need_resource = [&]() -> const IsingSpec & {
        if (resource == nullptr) {
            throw InvalidInput("analog op in a sequence without a resource Hamiltonian");
        }
        return *resource;
    };

    Eigen::MatrixXcd u = id;
    for (const Op &op : ops) {
        Eigen::MatrixXcd step = std::visit(
            Overloaded{
                [&](const Rotation &r) -> Eigen::MatrixXcd {
                    check_dense_qubit(n, r.qubit);
                    const Mat2 g = generator_matrix(r.generator);
                    return expm_hermitian(embed_single_qubit(n, r.qubit, g), r.angle);
                },
                [&](const ZzRotation &z) -> Eigen::MatrixXcd {
                    check_dense_qubit(n, z.first);
                    check_dense_qubit(n, z.second);
                    if (z.first == z.second) {
                        throw InvalidInput("ZZ rotation on a single qubit");
                    }
                    return expm_hermitian(pauli_z_string(n, z.first, z.second), z.angle);
                },
                [&](const DiagonalTwoQubitGate &d) -> Eigen::MatrixXcd {
                    check_dense_qubit(n, d.control);
                    check_dense_qubit(n, d.target);
                    const Mat2 p0{1.0, 0.0, 0.0, 0.0};
                    const Mat2 p1{0.0, 0.0, 0.0, 1.0};
                    const Mat2 diag0{d.phases[0], 0.0, 0.0, d.phases[1]};
                    const Mat2 diag1{d.phases[2], 0.0, 0.0, d.phases[3]};
                    return embed_single_qubit(n, d.control, p0) * embed_single_qubit(n, d.target, diag0) +
                           embed_single_qubit(n, d.control, p1) * embed_single_qubit(n, d.target, diag1);
                },
                [&](const AnalogBlock &a) -> Eigen::MatrixXcd {
                    const IsingSpec &res = need_resource();
                    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
                    for (auto [j, k] : res.pairs()) {
                        if (res.coupling(j, k) != 0.0) {
                            h += res.coupling(j, k) * pauli_z_string(n, j, k);
                        }
                    }
                    return expm_hermitian(h, a.duration);
                },
                [&](const DriveWindow &w) -> Eigen::MatrixXcd { return drive_window_dense(need_resource(), w); },
            },
            op);
        u = step * u;
    }
    return u;
}

Eigen::MatrixXcd build_dense_unitary(const Program &program) {
    return build_dense_unitary(program.ops, program.n_qubits, &program.resource);
}

double phase_insensitive_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput("matrix shapes differ");
    }
    const std::complex<double> overlap = (b.adjoint() * a).trace();
    const std::complex<double> phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
    return (a - phase * b).norm();
}

Eigen::MatrixXcd unitary_from_action(int n_qubits, const std::function<void(Statevector &)> &action) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        Statevector col = Statevector::basis(n_qubits, static_cast<std::uint64_t>(c));
        action(col);
        for (Eigen::Index r = 0; r < dim; ++r) {
            u(r, c) = col[static_cast<std::size_t>(r)];
        }
    }
    return u;
}

Eigen::MatrixXcd ising_unitary(const IsingSpec &spec, double t) {
    const int n = spec.n_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (auto [j, k] : spec.pairs()) {
        if (spec.coupling(j, k) != 0.0) {
            h += spec.coupling(j, k) * pauli_z_string(n, j, k);
        }
    }
    return expm_hermitian(h, t);
}

}  // namespace daqc
