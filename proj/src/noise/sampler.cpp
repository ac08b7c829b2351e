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


#include <type_traits>

#include "daqc/errors.hpp"
#include "daqc/noise/noise.hpp"

namespace daqc::noise {

double sample_noise(NoiseKind kind, const NoiseConfig &config, std::mt19937_64 &rng) {
    switch (kind) {
        case NoiseKind::SQG: {
            const double s = config.sqg_halfwidth();
            if (s == 0.0) {
                return 1.0;
            }
            return std::uniform_real_distribution<double>(1.0 - s, 1.0 + s)(rng);
        }
        case NoiseKind::TQG: {
            const double sigma = config.tqg_sigma();
            if (sigma == 0.0) {
                return 0.0;
            }
            return std::normal_distribution<double>(0.0, sigma)(rng);
        }
        case NoiseKind::ABN_Stepwise:
        case NoiseKind::ABN_Banged: {
            const double sigma =
                config.abn_sigma(kind == NoiseKind::ABN_Stepwise ? AnalogKind::Stepwise : AnalogKind::Banged);
            if (sigma == 0.0) {
                return 0.0;
            }
            return std::normal_distribution<double>(0.0, sigma)(rng);
        }
    }
    throw InvalidInput("unknown noise kind");
}

Op GateNoise::perturb(const Op &ideal) {
    return std::visit(
        [&](const auto &op) -> Op {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, Rotation>) {
                Rotation r = op;
                if (r.generator != Generator::Hadamard || config_.hadamard_noise) {
                    r.angle *= sample_noise(NoiseKind::SQG, config_, rng_);
                }
                return r;
            } else if constexpr (std::is_same_v<T, ZzRotation>) {
                ZzRotation z = op;
                z.angle *= 1.0 + sample_noise(NoiseKind::TQG, config_, rng_);
                return z;
            } else if constexpr (std::is_same_v<T, AnalogBlock>) {
                AnalogBlock a = op;
                a.duration += sample_noise(
                    a.kind == AnalogKind::Stepwise ? NoiseKind::ABN_Stepwise : NoiseKind::ABN_Banged, config_, rng_);
                return a;
            } else if constexpr (std::is_same_v<T, DriveWindow>) {
                DriveWindow w = op;
                if (w.drive_scale.empty()) {
                    w.drive_scale.assign(w.qubits.size(), 1.0);
                }
                for (double &s : w.drive_scale) {
                    s *= sample_noise(NoiseKind::SQG, config_, rng_);
                }
                return w;
            } else {
                throw InvalidInput("noise model does not cover controlled-phase gates");
            }
        },
        ideal);
}

void apply_noisy_gate(Statevector &state, const Op &ideal, const NoiseConfig &config, std::mt19937_64 &rng,
                      const IsingSpec *resource) {
    Program program;
    program.n_qubits = state.n_qubits();
    program.resource = resource != nullptr ? *resource : IsingSpec::homogeneous(state.n_qubits());
    GateNoise noise(config, rng);
    const Op faulty = noise.perturb(ideal);
    ProgramRunner(program).apply(state, faulty);
}

}  // namespace daqc::noise
