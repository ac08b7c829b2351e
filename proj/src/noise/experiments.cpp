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
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "daqc/errors.hpp"
#include "daqc/noise/noise.hpp"
#include "daqc/qft/qft.hpp"

namespace daqc::noise {
namespace {

int resolve_threads(int threads, int shots) {
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(t, 1, std::max(shots, 1));
}

std::vector<Protocol> sorted_protocols(std::vector<Protocol> protocols) {
    std::sort(protocols.begin(), protocols.end());
    protocols.erase(std::unique(protocols.begin(), protocols.end()), protocols.end());
    return protocols;
}

void reject_singular(const std::vector<Protocol> &protocols, const std::vector<int> &qubits) {
    const bool daqc = std::any_of(protocols.begin(), protocols.end(), [](Protocol p) { return p != Protocol::DQC; });
    if (daqc && std::find(qubits.begin(), qubits.end(), 4) != qubits.end()) {
        throw engine::SingularSignMatrix(4);
    }
}

std::vector<int> sorted_qubits(std::vector<int> qubits) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    for (int n : qubits) {
        if (n < 2 || n > kMaxQubits) {
            throw InvalidInput("sweeps need 2 <= n <= " + std::to_string(kMaxQubits));
        }
    }
    return qubits;
}

}  // namespace

ExperimentRecord monte_carlo(const ProtocolProgram &program, double beta, int shots, const NoiseConfig &config,
                             int threads) {
    if (shots < 1) {
        throw InvalidInput("shots must be >= 1");
    }
    config.validate();
    const int n = program.n_qubits();
    const Statevector input = qft::beta_state(n, beta);
    const Statevector reference = qft::exact_qft(input);

    double mean = 0.0;
    double std_dev = 0.0;
    if (config.noiseless()) {
        mean = program.fidelity(input, reference, nullptr);
    } else {
        std::vector<double> fid(static_cast<std::size_t>(shots));
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < shots; i = next.fetch_add(1)) {
                std::mt19937_64 rng = shot_rng(config.seed, static_cast<std::uint64_t>(i));
                GateNoise noise(config, rng);
                fid[static_cast<std::size_t>(i)] = program.fidelity(input, reference, &noise);
            }
        };
        const int t = resolve_threads(threads, shots);
        std::vector<std::thread> pool;
        for (int k = 1; k < t; ++k) {
            pool.emplace_back(worker);
        }
        worker();
        for (std::thread &th : pool) {
            th.join();
        }
        // Sequential reduction in shot order keeps the result thread-count independent.
        double sum = 0.0;
        for (double f : fid) {
            sum += f;
        }
        mean = sum / shots;
        double sq = 0.0;
        for (double f : fid) {
            sq += (f - mean) * (f - mean);
        }
        std_dev = shots > 1 ? std::sqrt(sq / (shots - 1)) : 0.0;
    }

    ExperimentRecord r;
    r.protocol = program.protocol();
    r.n_qubits = n;
    r.beta = beta;
    r.shots = shots;
    r.seed = config.seed;
    r.mean_fidelity = std::clamp(mean, 0.0, 1.0);
    r.std_fidelity = std_dev;
    r.delta_t = program.delta_t();
    r.error_scale = config.error_scale;
    return r;
}

ExperimentRecord monte_carlo(Protocol protocol, int n_qubits, double beta, int shots, const NoiseConfig &config,
                             int threads) {
    config.validate();
    const ProtocolProgram program(protocol, n_qubits, config.delta_t);
    return monte_carlo(program, beta, shots, config, threads);
}

std::vector<double> default_beta_grid(int points) {
    if (points < 1) {
        throw InvalidInput("beta grid needs at least one point");
    }
    if (points == 1) {
        return {0.0};
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = std::numbers::pi * i / (points - 1);
    }
    return grid;
}

std::vector<ExperimentRecord> sweep_beta(const std::vector<Protocol> &protocols, const std::vector<int> &qubits,
                                         const std::vector<double> &betas, int shots, const NoiseConfig &config,
                                         int threads) {
    config.validate();
    std::vector<double> grid = betas;
    std::sort(grid.begin(), grid.end());
    for (double b : grid) {
        if (!(b >= 0.0 && b <= std::numbers::pi)) {
            throw InvalidInput("beta grid must lie in [0, pi]");
        }
    }
    reject_singular(protocols, qubits);
    std::vector<ExperimentRecord> out;
    for (Protocol p : sorted_protocols(protocols)) {
        for (int n : sorted_qubits(qubits)) {
            const ProtocolProgram program(p, n, config.delta_t);
            for (double b : grid) {
                out.push_back(monte_carlo(program, b, shots, config, threads));
            }
        }
    }
    return out;
}

std::vector<ExperimentRecord> sweep_error_scale(const std::vector<Protocol> &protocols,
                                                const std::vector<int> &qubits, const std::vector<double> &scales,
                                                int shots, const NoiseConfig &config, int threads) {
    config.validate();
    std::vector<double> grid = scales;
    std::sort(grid.begin(), grid.end());
    for (double s : grid) {
        if (!std::isfinite(s) || s < 0.0) {
            throw InvalidInput("error scales must be finite and >= 0");
        }
    }
    const double beta = std::numbers::pi / 4.0;
    reject_singular(protocols, qubits);
    std::vector<ExperimentRecord> out;
    for (Protocol p : sorted_protocols(protocols)) {
        for (int n : sorted_qubits(qubits)) {
            const ProtocolProgram program(p, n, config.delta_t);
            for (double s : grid) {
                NoiseConfig scaled = config;
                scaled.error_scale = s;
                out.push_back(monte_carlo(program, beta, shots, scaled, threads));
            }
        }
    }
    return out;
}

std::vector<BetaSummary> summarize_beta(const std::vector<ExperimentRecord> &records) {
    std::vector<BetaSummary> out;
    std::map<std::pair<Protocol, int>, std::size_t> slot;
    for (const ExperimentRecord &r : records) {
        const auto key = std::make_pair(r.protocol, r.n_qubits);
        auto it = slot.find(key);
        if (it == slot.end()) {
            it = slot.emplace(key, out.size()).first;
            BetaSummary s;
            s.protocol = r.protocol;
            s.n_qubits = r.n_qubits;
            out.push_back(s);
        }
        BetaSummary &s = out[it->second];
        s.mean_fidelity += r.mean_fidelity;
        s.standard_error += r.std_fidelity / std::sqrt(static_cast<double>(r.shots));
        ++s.beta_points;
    }
    for (BetaSummary &s : out) {
        s.mean_fidelity /= s.beta_points;
        s.standard_error /= s.beta_points;
    }
    return out;
}

}  // namespace daqc::noise
