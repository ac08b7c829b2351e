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

// AVX2 + FMA variants. One __m256d holds two interleaved complex doubles
// (re0, im0, re1, im1). This translation unit is the only one compiled with
// -mavx2 -mfma; callers reach it through the dispatch table after a CPU check.

#include <immintrin.h>

#include "daqc/sim/kernels.hpp"

namespace daqc::kernels {
namespace {

inline double *raw(std::span<cplx> s) {
    return reinterpret_cast<double *>(s.data());
}
inline const double *raw(std::span<const cplx> s) {
    return reinterpret_cast<const double *>(s.data());
}

// v * c for a broadcast complex scalar c = (cr, ci).
inline __m256d cmul_scalar(__m256d v, __m256d cr, __m256d ci) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, cr, _mm256_mul_pd(swapped, ci));
}

// Lane-wise complex product a * b.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0b1111);
    const __m256d swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(swapped, bi));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void apply_1q_avx2(std::span<cplx> amps, std::size_t mask, const Mat2 &m) {
    const std::size_t dim = amps.size();
    double *p = raw(amps);
    if (mask == 1) {
        // Pair members are adjacent: one register holds (a0, a1).
        const __m256d col0 = _mm256_setr_pd(m[0].real(), m[0].imag(), m[2].real(), m[2].imag());
        const __m256d col1 = _mm256_setr_pd(m[1].real(), m[1].imag(), m[3].real(), m[3].imag());
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(p + 2 * i, _mm256_add_pd(cmul(a0, col0), cmul(a1, col1)));
        }
        return;
    }
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i0 = base; i0 < base + mask; i0 += 2) {
            double *q0 = p + 2 * i0;
            double *q1 = p + 2 * (i0 + mask);
            const __m256d a0 = _mm256_loadu_pd(q0);
            const __m256d a1 = _mm256_loadu_pd(q1);
            const __m256d r0 = _mm256_add_pd(cmul_scalar(a0, m00r, m00i), cmul_scalar(a1, m01r, m01i));
            const __m256d r1 = _mm256_add_pd(cmul_scalar(a0, m10r, m10i), cmul_scalar(a1, m11r, m11i));
            _mm256_storeu_pd(q0, r0);
            _mm256_storeu_pd(q1, r1);
        }
    }
}

void mul_diag_avx2(std::span<cplx> amps, std::span<const cplx> phases) {
    double *p = raw(amps);
    const double *f = raw(phases);
    const std::size_t n = amps.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(p + 2 * i, cmul(_mm256_loadu_pd(p + 2 * i), _mm256_loadu_pd(f + 2 * i)));
    }
    for (; i < n; ++i) {
        amps[i] *= phases[i];
    }
}

cplx inner_avx2(std::span<const cplx> a, std::span<const cplx> b) {
    const double *pa = raw(a);
    const double *pb = raw(b);
    const std::size_t n = a.size();
    // re += ar*br + ai*bi ; im += ar*bi - ai*br
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
    }
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, acc_im);
    cplx acc{hsum(acc_re), (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3])};
    for (; i < n; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm2_avx2(std::span<const cplx> a) {
    const double *pa = raw(a);
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += std::norm(a[i]);
    }
    return total;
}

constexpr KernelTable kAvx2{
    Isa::Avx2, "avx2", &apply_1q_avx2, &mul_diag_avx2, &inner_avx2, &norm2_avx2,
};

}  // namespace

namespace detail {
const KernelTable &avx2_table() {
    return kAvx2;
}
}  // namespace detail

}  // namespace daqc::kernels
