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


#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "daqc/engine/daqc.hpp"

namespace daqc::engine {

SingularSignMatrix::SingularSignMatrix(int n_qubits)
    : InvalidInput("singular sign matrix for N=" + std::to_string(n_qubits)) {}

int pair_count(int n_qubits) {
    return n_qubits * (n_qubits - 1) / 2;
}

int vectorize_pair(int n, int m, int n_qubits) {
    if (n < 1 || m > n_qubits || n >= m) {
        throw InvalidInput("vectorize_pair needs 1 <= n < m <= N");
    }
    return n_qubits * (n - 1) - n * (n + 1) / 2 + m;
}

std::pair<int, int> unvectorize_pair(int alpha, int n_qubits) {
    if (alpha < 1 || alpha > pair_count(n_qubits)) {
        throw InvalidInput("pair index out of range");
    }
    // Row n starts at vectorize_pair(n, n+1) and holds N - n entries.
    int n = 1;
    while (alpha > vectorize_pair(n, n_qubits, n_qubits)) {
        ++n;
    }
    const int m = alpha - (n_qubits * (n - 1) - n * (n + 1) / 2);
    return {n, m};
}

SignMatrix::SignMatrix(int n_qubits) : n_(n_qubits), size_(pair_count(n_qubits)) {
    if (n_qubits < 2) {
        throw InvalidInput("sign matrix needs N >= 2");
    }
    entries_.resize(static_cast<std::size_t>(size_) * size_);
    for (int a = 1; a <= size_; ++a) {
        const auto [n, m] = unvectorize_pair(a, n_);
        for (int b = 1; b <= size_; ++b) {
            const auto [j, k] = unvectorize_pair(b, n_);
            const int overlaps = (n == j) + (n == k) + (m == j) + (m == k);
            entries_[static_cast<std::size_t>(a - 1) * size_ + (b - 1)] = (overlaps % 2 == 0) ? 1 : -1;
        }
    }
}

int SignMatrix::operator()(int alpha, int beta) const {
    if (alpha < 1 || beta < 1 || alpha > size_ || beta > size_) {
        throw InvalidInput("sign matrix index out of range");
    }
    return entries_[static_cast<std::size_t>(alpha - 1) * size_ + (beta - 1)];
}

Eigen::MatrixXd SignMatrix::dense() const {
    Eigen::MatrixXd m(size_, size_);
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            m(a, b) = entries_[static_cast<std::size_t>(a) * size_ + b];
        }
    }
    return m;
}

double SignMatrix::determinant() const {
    // Bareiss fraction-free elimination: every intermediate is an integer minor.
    using boost::multiprecision::cpp_int;
    const auto n = static_cast<std::size_t>(size_);
    std::vector<cpp_int> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        a[i] = entries_[i];
    }
    auto at = [&](std::size_t r, std::size_t c) -> cpp_int & { return a[r * n + c]; };
    int sign = 1;
    cpp_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0.0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(at(k, c), at(swap_row, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = at(k, k);
    }
    const cpp_int det = sign * at(n - 1, n - 1);
    return det.convert_to<double>();
}

SignMatrix sign_matrix(int n_qubits) {
    return SignMatrix(n_qubits);
}

std::vector<double> solve_times(const IsingSpec &target) {
    const int n = target.n_qubits();
    if (n < 2) {
        return {};
    }
    if (n == 4) {
        throw SingularSignMatrix(n);
    }
    const SignMatrix sign(n);
    const std::vector<double> couplings = target.vectorized();
    Eigen::VectorXd rhs(sign.size());
    const double scale = target.target_time() / target.resource_coupling();
    for (int b = 0; b < sign.size(); ++b) {
        rhs(b) = couplings[static_cast<std::size_t>(b)] * scale;
    }
    // M is symmetric, so t_alpha M_{alpha beta} = g_beta is the same as M t = g.
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(sign.dense());
    if (!lu.isInvertible()) {
        throw SingularSignMatrix(n);
    }
    const Eigen::VectorXd t = lu.solve(rhs);
    std::vector<double> times(t.data(), t.data() + t.size());
    const double residual = solve_residual(target, times);
    if (!(residual < 1e-10)) {
        throw NumericalFailure("sign-matrix solve residual " + std::to_string(residual) + " exceeds 1e-10");
    }
    return times;
}

double solve_residual(const IsingSpec &target, const std::vector<double> &times) {
    const SignMatrix sign(target.n_qubits());
    if (static_cast<int>(times.size()) != sign.size()) {
        throw InvalidInput("time vector length does not match the pair count");
    }
    const std::vector<double> couplings = target.vectorized();
    const double back = target.resource_coupling() / target.target_time();
    double worst = 0.0;
    for (int b = 1; b <= sign.size(); ++b) {
        double g = 0.0;
        for (int a = 1; a <= sign.size(); ++a) {
            g += times[static_cast<std::size_t>(a - 1)] * sign(a, b);
        }
        worst = std::max(worst, std::abs(g * back - couplings[static_cast<std::size_t>(b - 1)]));
    }
    return worst;
}

}  // namespace daqc::engine
