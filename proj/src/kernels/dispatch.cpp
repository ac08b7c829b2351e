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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "daqc/sim/kernels.hpp"

namespace daqc::kernels {

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(DAQC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable &table(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("kernel variant not available on this build or CPU");
    }
#if defined(DAQC_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        return detail::avx2_table();
    }
#endif
    return scalar_table();
}

namespace {

const KernelTable &select_at_startup() {
    if (const char *forced = std::getenv("DAQC_ISA")) {
        const std::string name(forced);
        if (name == "scalar") {
            return scalar_table();
        }
        if (name == "avx2" && isa_supported(Isa::Avx2)) {
            return table(Isa::Avx2);
        }
    }
    if (isa_supported(Isa::Avx2)) {
        return table(Isa::Avx2);
    }
    return scalar_table();
}

}  // namespace

const KernelTable &active() {
    static const KernelTable &chosen = select_at_startup();
    return chosen;
}

}  // namespace daqc::kernels
