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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "daqc/errors.hpp"
#include "daqc/qft/qft.hpp"
#include "daqc/sim/ising.hpp"
#include "daqc/sim/program.hpp"

namespace daqc::engine {

/// Rotation-window length used when none is given, in units where the
/// resource coupling g and the target time t_F are 1.
inline constexpr double kDefaultDeltaT = 0.003;

/// The X-conjugation sign matrix has no inverse for N = 4 qubits.
class SingularSignMatrix : public InvalidInput {
public:
    explicit SingularSignMatrix(int n_qubits);
};

int pair_count(int n_qubits);

/// alpha = N(n-1) - n(n+1)/2 + m for 1 <= n < m <= N; a bijection onto
/// 1 .. N(N-1)/2 that enumerates pairs lexicographically.
int vectorize_pair(int n, int m, int n_qubits);
std::pair<int, int> unvectorize_pair(int alpha, int n_qubits);

/// M_{alpha beta} = (-1)^{|{n,m} & {j,k}|}: the sign Z_j Z_k picks up under
/// conjugation by X_n X_m.
class SignMatrix {
public:
    explicit SignMatrix(int n_qubits);

    int n_qubits() const { return n_; }
    int size() const { return size_; }

    /// 1-based vectorized indices.
    int operator()(int alpha, int beta) const;

    Eigen::MatrixXd dense() const;

    /// Exact integer determinant (fraction-free elimination), rounded to double.
    double determinant() const;
    bool singular() const { return determinant() == 0.0; }

private:
    int n_;
    int size_;
    std::vector<std::int8_t> entries_;
};

SignMatrix sign_matrix(int n_qubits);

/// Block durations t = M^{-1} g_vec t_F / g. Entries may be negative.
/// Throws SingularSignMatrix for N = 4 and NumericalFailure when the residual
/// ||M t g / t_F - g_vec||_inf exceeds 1e-10.
std::vector<double> solve_times(const IsingSpec &target);

double solve_residual(const IsingSpec &target, const std::vector<double> &times);

enum class Mode { Stepwise, Banged };

/// How the rotation windows of a banged schedule are charged to the analog
/// segments around them.
///  - Caption: a window between two segments takes dt/2 from each; the first
///    and last windows take a full dt from their only neighbour. Interior
///    segments run t_i - dt, the first and last t_i - 3/2 dt, and the total
///    resource-on time equals sum t_i.
///  - Uniform: every segment runs t_i - dt.
enum class BangedTiming { Caption, Uniform };

struct ScheduleItem {
    int alpha = 1;
    int first = 1;
    int second = 2;
    double duration = 0.0;  // t_alpha
};

class DaqcSchedule {
public:
    DaqcSchedule(Mode mode, std::vector<ScheduleItem> items, double resource_coupling, int n_qubits,
                 double delta_t = 0.0, BangedTiming timing = BangedTiming::Caption);

    Mode mode() const { return mode_; }
    int n_qubits() const { return n_; }
    const std::vector<ScheduleItem> &items() const { return items_; }
    double delta_t() const { return delta_t_; }
    BangedTiming timing() const { return timing_; }
    const IsingSpec &resource() const { return resource_; }

    /// Banged only: qubits flipped by window w (w = 0 .. K). Adjacent X layers
    /// are merged, so a qubit shared by consecutive pairs is not driven.
    std::vector<std::vector<int>> windows() const;

    /// Banged only: analog-only durations between windows, one per item.
    std::vector<double> segment_durations() const;

    bool has_negative_segments() const;

    /// Time the analog resource is on.
    double total_analog_time() const;

    std::vector<Op> lower() const;

    /// One line per item: "alpha n m duration". Banged schedules list the
    /// analog-only segment durations.
    std::string dump() const;

private:
    Mode mode_;
    int n_;
    std::vector<ScheduleItem> items_;
    double delta_t_;
    BangedTiming timing_;
    IsingSpec resource_;
};

DaqcSchedule build_sdaqc_schedule(const std::vector<double> &times, double resource_coupling = 1.0);

/// Throws InvalidInput for delta_t <= 0. Negative segment durations are kept.
DaqcSchedule build_bdaqc_schedule(const std::vector<double> &times, double delta_t,
                                  double resource_coupling = 1.0,
                                  BangedTiming timing = BangedTiming::Caption);

/// Throws InvalidInput on register mismatch.
void execute_schedule(Statevector &state, const DaqcSchedule &schedule, OpPerturbation *noise = nullptr);

/// Per block: its single-qubit layer (resource off), then the DAQC schedule
/// realizing its ZZ target; finally the Hadamard on qubit n. The readout
/// permutation is left to the caller.
Program compile_qft_daqc(const qft::QftPlan &plan, Mode mode, double delta_t = kDefaultDeltaT,
                         BangedTiming timing = BangedTiming::Caption);

/// Schedules compile_qft_daqc builds, one per block.
std::vector<DaqcSchedule> qft_block_schedules(const qft::QftPlan &plan, Mode mode, double delta_t,
                                              BangedTiming timing = BangedTiming::Caption);

}  // namespace daqc::engine
