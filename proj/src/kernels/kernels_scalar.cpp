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

#include "daqc/sim/kernels.hpp"

namespace daqc::kernels {
namespace {

void apply_1q_scalar(std::span<cplx> amps, std::size_t mask, const Mat2 &m) {
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i0 = base; i0 < base + mask; ++i0) {
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i0 | mask];
            amps[i0] = m[0] * a0 + m[1] * a1;
            amps[i0 | mask] = m[2] * a0 + m[3] * a1;
        }
    }
}

void mul_diag_scalar(std::span<cplx> amps, std::span<const cplx> phases) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= phases[i];
    }
}

cplx inner_scalar(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm2_scalar(std::span<const cplx> a) {
    double acc = 0.0;
    for (const cplx &z : a) {
        acc += std::norm(z);
    }
    return acc;
}

constexpr KernelTable kScalar{
    Isa::Scalar, "scalar", &apply_1q_scalar, &mul_diag_scalar, &inner_scalar, &norm2_scalar,
};

}  // namespace

const KernelTable &scalar_table() {
    return kScalar;
}

}  // namespace daqc::kernels
