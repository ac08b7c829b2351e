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


#include "daqc/engine/daqc.hpp"

namespace daqc::engine {

std::vector<DaqcSchedule> qft_block_schedules(const qft::QftPlan &plan, Mode mode, double delta_t,
                                              BangedTiming timing) {
    if (plan.n_qubits == 4) {
        throw SingularSignMatrix(4);
    }
    if (mode == Mode::Banged && !(delta_t > 0.0)) {
        throw InvalidInput("delta_t must be positive");
    }
    std::vector<DaqcSchedule> out;
    for (const qft::QftBlock &block : plan.blocks) {
        const std::vector<double> times = solve_times(block.ising);
        const double g = block.ising.resource_coupling();
        if (mode == Mode::Stepwise) {
            out.push_back(build_sdaqc_schedule(times, g));
        } else {
            out.push_back(build_bdaqc_schedule(times, delta_t, g, timing));
        }
    }
    return out;
}

Program compile_qft_daqc(const qft::QftPlan &plan, Mode mode, double delta_t, BangedTiming timing) {
    const std::vector<DaqcSchedule> schedules = qft_block_schedules(plan, mode, delta_t, timing);
    Program program;
    program.n_qubits = plan.n_qubits;
    program.resource = IsingSpec::homogeneous(plan.n_qubits, 1.0);
    for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
        for (const Rotation &r : plan.blocks[b].sqg_layer) {
            program.ops.emplace_back(r);
        }
        for (Op &op : schedules[b].lower()) {
            program.ops.push_back(std::move(op));
        }
    }
    program.ops.emplace_back(qft::hadamard_gate(plan.final_hadamard));
    return program;
}

}  // namespace daqc::engine
