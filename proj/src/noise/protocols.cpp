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


#include <algorithm>
#include <cctype>
#include <string>

#include "daqc/errors.hpp"
#include "daqc/noise/noise.hpp"
#include "daqc/qft/qft.hpp"

namespace daqc::noise {
namespace {

Program make_program(Protocol protocol, int n, double delta_t, engine::BangedTiming timing) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidInput("qubit count out of range: " + std::to_string(n));
    }
    if (protocol == Protocol::DQC) {
        Program p;
        p.n_qubits = n;
        p.resource = IsingSpec::homogeneous(n);
        p.ops = qft::build_dqc_circuit(n, true);
        return p;
    }
    const engine::Mode mode = protocol == Protocol::sDAQC ? engine::Mode::Stepwise : engine::Mode::Banged;
    return engine::compile_qft_daqc(qft::build_qft_plan(n), mode, delta_t, timing);
}

}  // namespace

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::DQC:
            return "DQC";
        case Protocol::sDAQC:
            return "sDAQC";
        case Protocol::bDAQC:
            return "bDAQC";
    }
    return "?";
}

Protocol parse_protocol(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "dqc") {
        return Protocol::DQC;
    }
    if (lower == "sdaqc") {
        return Protocol::sDAQC;
    }
    if (lower == "bdaqc") {
        return Protocol::bDAQC;
    }
    throw InvalidInput("unknown protocol '" + std::string(text) + "'");
}

ProtocolProgram::ProtocolProgram(Protocol protocol, int n_qubits, double delta_t, engine::BangedTiming timing)
    : protocol_(protocol),
      delta_t_(protocol == Protocol::bDAQC ? delta_t : 0.0),
      runner_(make_program(protocol, n_qubits, delta_t, timing)) {}

double ProtocolProgram::fidelity(const Statevector &input, const Statevector &reference,
                                 OpPerturbation *noise) const {
    Statevector state = input;
    runner_.run(state, noise);
    qft::apply_readout_permutation(state);
    return daqc::fidelity(reference, state);
}

std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
    return std::mt19937_64(seq);
}

double run_protocol(Protocol protocol, int n_qubits, const Statevector &input, const NoiseConfig &config,
                    std::mt19937_64 &rng) {
    config.validate();
    if (input.n_qubits() != n_qubits) {
        throw InvalidInput("input state register does not match n");
    }
    const ProtocolProgram program(protocol, n_qubits, config.delta_t);
    GateNoise noise(config, rng);
    return program.fidelity(input, qft::exact_qft(input), config.noiseless() ? nullptr : &noise);
}

}  // namespace daqc::noise
