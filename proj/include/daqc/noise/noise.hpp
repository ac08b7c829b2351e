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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "daqc/engine/daqc.hpp"
#include "daqc/sim/program.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc::noise {

/// Coherent control-error widths. Every width is multiplied by error_scale.
struct NoiseConfig {
    double sqgn = 0.0005;      // half-width of the uniform amplitude factor
    double tqgn = 0.2;         // width of the entangler-angle error
    bool tqgn_is_std = true;   // false: tqgn * error_scale is a variance
    double abn_s = 0.02;       // analog timing error, stepwise blocks
    double abn_b = 0.01;       // analog timing error, banged segments
    double error_scale = 1.0;
    std::uint64_t seed = 20260101;
    double delta_t = engine::kDefaultDeltaT;
    bool hadamard_noise = true;  // not a JSON key

    void validate() const;

    double sqg_halfwidth() const { return sqgn * error_scale; }
    double tqg_sigma() const;
    double abn_sigma(AnalogKind kind) const;
    bool noiseless() const;

    /// Strict: unknown keys and wrong types raise InvalidInput.
    static NoiseConfig from_json(const std::string &text);
    static NoiseConfig load(const std::string &path);
    std::string to_json() const;
};

enum class NoiseKind { SQG, TQG, ABN_Stepwise, ABN_Banged };

/// SQG: amplitude factor in [1-s, 1+s]; TQG: relative entangler error;
/// ABN: additive time error. Zero width returns the exact degenerate value.
double sample_noise(NoiseKind kind, const NoiseConfig &config, std::mt19937_64 &rng);

/// Replaces each ideal op by an independently drawn faulty version:
/// rotation angles scale by the SQG factor, ZZ angles by (1 + eps), analog
/// durations shift by delta, and each driven qubit of a drive window gets its
/// own SQG factor on the drive amplitude. Controlled-phase gates are rejected.
class GateNoise : public OpPerturbation {
public:
    GateNoise(const NoiseConfig &config, std::mt19937_64 &rng) : config_(config), rng_(rng) {}
    Op perturb(const Op &ideal) override;

private:
    const NoiseConfig &config_;
    std::mt19937_64 &rng_;
};

/// Applies one noisy op. `resource` is needed for analog blocks and drive
/// windows; it defaults to the homogeneous unit-coupling register.
void apply_noisy_gate(Statevector &state, const Op &ideal, const NoiseConfig &config, std::mt19937_64 &rng,
                      const IsingSpec *resource = nullptr);

enum class Protocol { DQC, sDAQC, bDAQC };

std::string_view protocol_name(Protocol p);
/// Case-insensitive "dqc", "sdaqc", "bdaqc".
Protocol parse_protocol(std::string_view text);

/// Compiled QFT for one protocol. Immutable; safe to share across threads.
class ProtocolProgram {
public:
    ProtocolProgram(Protocol protocol, int n_qubits, double delta_t = engine::kDefaultDeltaT,
                    engine::BangedTiming timing = engine::BangedTiming::Caption);

    Protocol protocol() const { return protocol_; }
    /// Window length for bDAQC, 0 otherwise.
    double delta_t() const { return delta_t_; }
    int n_qubits() const { return runner_.program().n_qubits; }
    const Program &program() const { return runner_.program(); }

    /// Runs the program, applies the bit-reversal readout and returns the
    /// fidelity against `reference` (normally exact_qft(input)).
    double fidelity(const Statevector &input, const Statevector &reference, OpPerturbation *noise) const;

private:
    Protocol protocol_;
    double delta_t_;
    ProgramRunner runner_;
};

std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot);

double run_protocol(Protocol protocol, int n_qubits, const Statevector &input, const NoiseConfig &config,
                    std::mt19937_64 &rng);

struct ExperimentRecord {
    Protocol protocol = Protocol::DQC;
    int n_qubits = 0;
    double beta = 0.0;
    int shots = 0;
    std::uint64_t seed = 0;
    double mean_fidelity = 0.0;
    double std_fidelity = 0.0;  // sample std, 0 for one shot
    double delta_t = 0.0;       // 0 for DQC and sDAQC
    double error_scale = 0.0;
};

/// threads <= 0 uses the hardware concurrency. Shot i draws from
/// shot_rng(config.seed, i); results are reduced in shot order, so the
/// record does not depend on the thread count.
ExperimentRecord monte_carlo(Protocol protocol, int n_qubits, double beta, int shots, const NoiseConfig &config,
                             int threads = 0);

ExperimentRecord monte_carlo(const ProtocolProgram &program, double beta, int shots, const NoiseConfig &config,
                             int threads = 0);

std::vector<double> default_beta_grid(int points = 21);

/// One record per (protocol, n, beta), sorted by that key.
std::vector<ExperimentRecord> sweep_beta(const std::vector<Protocol> &protocols, const std::vector<int> &qubits,
                                         const std::vector<double> &betas, int shots, const NoiseConfig &config,
                                         int threads = 0);

/// beta = pi/4; one record per (protocol, n, scale), sorted by that key.
std::vector<ExperimentRecord> sweep_error_scale(const std::vector<Protocol> &protocols,
                                                const std::vector<int> &qubits, const std::vector<double> &scales,
                                                int shots, const NoiseConfig &config, int threads = 0);

struct BetaSummary {
    Protocol protocol = Protocol::DQC;
    int n_qubits = 0;
    double mean_fidelity = 0.0;   // average of per-beta means
    double standard_error = 0.0;  // average of per-beta std / sqrt(shots)
    int beta_points = 0;
};

std::vector<BetaSummary> summarize_beta(const std::vector<ExperimentRecord> &records);

}  // namespace daqc::noise
