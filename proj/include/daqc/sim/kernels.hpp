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
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace daqc::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

enum class Isa { Scalar, Avx2 };

/// Inner loops of the statevector engine. Every instruction set provides the
/// same table; the scalar one is the reference the others are tested against.
struct KernelTable {
    Isa isa;
    std::string_view name;

    /// amps[i0], amps[i0 | mask] <- m * (amps[i0], amps[i0 | mask]) for every
    /// index i0 with the mask bit clear. mask is a single bit below amps.size().
    void (*apply_1q)(std::span<cplx> amps, std::size_t mask, const Mat2 &m);

    /// amps[i] *= phases[i].
    void (*mul_diag)(std::span<cplx> amps, std::span<const cplx> phases);

    /// sum_i conj(a[i]) * b[i].
    cplx (*inner)(std::span<const cplx> a, std::span<const cplx> b);

    /// sum_i |a[i]|^2.
    double (*norm2)(std::span<const cplx> a);
};

const KernelTable &scalar_table();

/// True when the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

/// Throws std::invalid_argument when the variant is unavailable.
const KernelTable &table(Isa isa);

/// Table picked once at startup: the best supported variant, unless the
/// DAQC_ISA environment variable names another one ("scalar" or "avx2").
const KernelTable &active();

namespace detail {
#if defined(DAQC_HAVE_AVX2)
const KernelTable &avx2_table();
#endif
}  // namespace detail

}  // namespace daqc::kernels
