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
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "daqc/engine/daqc.hpp"

namespace daqc::engine {
namespace {

int qubits_for_pair_count(std::size_t k) {
    int n = 2;
    while (static_cast<std::size_t>(pair_count(n)) < k) {
        ++n;
    }
    if (static_cast<std::size_t>(pair_count(n)) != k) {
        throw InvalidInput("time vector length " + std::to_string(k) + " is not N(N-1)/2 for any N");
    }
    return n;
}

std::vector<ScheduleItem> items_from_times(const std::vector<double> &times, int n) {
    std::vector<ScheduleItem> items;
    items.reserve(times.size());
    for (std::size_t a = 0; a < times.size(); ++a) {
        const int alpha = static_cast<int>(a) + 1;
        const auto [first, second] = unvectorize_pair(alpha, n);
        items.push_back(ScheduleItem{alpha, first, second, times[a]});
    }
    return items;
}

std::string fixed9(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
    std::string s(buf, res.ptr);
    if (s == "-0.000000000") {
        s = "0.000000000";
    }
    return s;
}

}  // namespace

DaqcSchedule::DaqcSchedule(Mode mode, std::vector<ScheduleItem> items, double resource_coupling, int n_qubits,
                           double delta_t, BangedTiming timing)
    : mode_(mode),
      n_(n_qubits),
      items_(std::move(items)),
      delta_t_(delta_t),
      timing_(timing),
      resource_(IsingSpec::homogeneous(n_qubits, resource_coupling)) {
    if (!(resource_coupling > 0.0)) {
        throw InvalidInput("resource coupling must be positive");
    }
    if (mode_ == Mode::Banged && !(delta_t_ > 0.0)) {
        throw InvalidInput("banged schedules need delta_t > 0");
    }
    for (const ScheduleItem &item : items_) {
        if (item.first < 1 || item.second > n_ || item.first >= item.second) {
            throw InvalidInput("schedule item pair out of range");
        }
        if (!std::isfinite(item.duration)) {
            throw InvalidInput("schedule item duration is not finite");
        }
    }
}

std::vector<std::vector<int>> DaqcSchedule::windows() const {
    if (mode_ != Mode::Banged) {
        return {};
    }
    std::vector<std::vector<int>> out;
    if (items_.empty()) {
        return out;
    }
    auto pair_of = [](const ScheduleItem &it) { return std::vector<int>{it.first, it.second}; };
    out.push_back(pair_of(items_.front()));
    for (std::size_t i = 0; i + 1 < items_.size(); ++i) {
        const std::vector<int> a = pair_of(items_[i]);
        const std::vector<int> b = pair_of(items_[i + 1]);
        std::vector<int> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        out.push_back(std::move(diff));
    }
    out.push_back(pair_of(items_.back()));
    return out;
}

std::vector<double> DaqcSchedule::segment_durations() const {
    if (mode_ != Mode::Banged) {
        return {};
    }
    const std::size_t k = items_.size();
    std::vector<double> seg(k);
    for (std::size_t i = 0; i < k; ++i) {
        double charge = 0.0;
        if (timing_ == BangedTiming::Uniform) {
            charge = delta_t_;
        } else {
            // Window i sits before segment i, window i+1 after it.
            charge += (i == 0) ? delta_t_ : 0.5 * delta_t_;
            charge += (i + 1 == k) ? delta_t_ : 0.5 * delta_t_;
        }
        seg[i] = items_[i].duration - charge;
    }
    return seg;
}

bool DaqcSchedule::has_negative_segments() const {
    if (mode_ == Mode::Stepwise) {
        return std::any_of(items_.begin(), items_.end(), [](const ScheduleItem &it) { return it.duration < 0.0; });
    }
    const auto seg = segment_durations();
    return std::any_of(seg.begin(), seg.end(), [](double d) { return d < 0.0; });
}

double DaqcSchedule::total_analog_time() const {
    double total = 0.0;
    if (mode_ == Mode::Stepwise) {
        for (const ScheduleItem &it : items_) {
            total += it.duration;
        }
        return total;
    }
    for (double d : segment_durations()) {
        total += d;
    }
    if (!items_.empty()) {
        total += static_cast<double>(items_.size() + 1) * delta_t_;
    }
    return total;
}

std::vector<Op> DaqcSchedule::lower() const {
    std::vector<Op> ops;
    constexpr double flip = std::numbers::pi / 2.0;
    if (mode_ == Mode::Stepwise) {
        for (const ScheduleItem &it : items_) {
            ops.emplace_back(Rotation{it.first, Generator::X, flip});
            ops.emplace_back(Rotation{it.second, Generator::X, flip});
            ops.emplace_back(AnalogBlock{it.duration, AnalogKind::Stepwise});
            ops.emplace_back(Rotation{it.first, Generator::X, flip});
            ops.emplace_back(Rotation{it.second, Generator::X, flip});
        }
        return ops;
    }
    const auto wins = windows();
    const auto seg = segment_durations();
    for (std::size_t i = 0; i < items_.size(); ++i) {
        ops.emplace_back(DriveWindow{wins[i], delta_t_, {}});
        ops.emplace_back(AnalogBlock{seg[i], AnalogKind::Banged});
    }
    if (!items_.empty()) {
        ops.emplace_back(DriveWindow{wins.back(), delta_t_, {}});
    }
    return ops;
}

std::string DaqcSchedule::dump() const {
    std::string out;
    if (mode_ == Mode::Stepwise) {
        out += "# stepwise N=" + std::to_string(n_) + "\n";
    } else {
        out += "# banged N=" + std::to_string(n_) + " delta_t=" + fixed9(delta_t_) +
               (timing_ == BangedTiming::Caption ? " timing=caption\n" : " timing=uniform\n");
    }
    const auto seg = segment_durations();
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const ScheduleItem &it = items_[i];
        const double d = mode_ == Mode::Stepwise ? it.duration : seg[i];
        out += std::to_string(it.alpha) + " " + std::to_string(it.first) + " " + std::to_string(it.second) + " " +
               fixed9(d) + "\n";
    }
    return out;
}

DaqcSchedule build_sdaqc_schedule(const std::vector<double> &times, double resource_coupling) {
    const int n = qubits_for_pair_count(times.size());
    return DaqcSchedule(Mode::Stepwise, items_from_times(times, n), resource_coupling, n);
}

DaqcSchedule build_bdaqc_schedule(const std::vector<double> &times, double delta_t, double resource_coupling,
                                  BangedTiming timing) {
    if (!(delta_t > 0.0)) {
        throw InvalidInput("delta_t must be positive");
    }
    const int n = qubits_for_pair_count(times.size());
    return DaqcSchedule(Mode::Banged, items_from_times(times, n), resource_coupling, n, delta_t, timing);
}

void execute_schedule(Statevector &state, const DaqcSchedule &schedule, OpPerturbation *noise) {
    if (state.n_qubits() != schedule.n_qubits()) {
        throw InvalidInput("state register does not match the schedule register");
    }
    Program program;
    program.n_qubits = schedule.n_qubits();
    program.resource = schedule.resource();
    program.ops = schedule.lower();
    ProgramRunner(program).run(state, noise);
}

}  // namespace daqc::engine
