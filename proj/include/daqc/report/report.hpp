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
#include <string>
#include <string_view>
#include <vector>

#include "daqc/noise/noise.hpp"

namespace daqc::report {

inline constexpr std::string_view kCsvHeader =
    "protocol,n_qubits,beta,shots,seed,mean_fidelity,std_fidelity,delta_t,error_scale";

/// Fixed 9-decimal rendering, locale independent; -0 prints as 0.
std::string fixed9(double v);

std::string records_to_csv(const std::vector<noise::ExperimentRecord> &records);

struct CsvRow {
    std::string protocol;
    int n_qubits = 0;
    double beta = 0.0;
    int shots = 0;
    std::uint64_t seed = 0;
    double mean_fidelity = 0.0;
    double std_fidelity = 0.0;
    double delta_t = 0.0;
    double error_scale = 0.0;
};

/// Throws InvalidInput on a wrong header, malformed fields or no data rows.
std::vector<CsvRow> parse_csv(const std::string &text);

enum class PlotAxis { Beta, ErrorScale, NQubits };
PlotAxis parse_plot_axis(std::string_view text);

/// Standalone SVG line plot of mean fidelity against the chosen column, one
/// polyline per protocol (per protocol and n when several n share the axis).
std::string render_svg(const std::vector<CsvRow> &rows, PlotAxis axis);

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::string config_json;  // resolved NoiseConfig, all defaults filled in
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;  // UTC, ISO 8601
    std::vector<std::string> outputs;
};

std::string utc_timestamp();
std::string manifest_to_json(const RunManifest &m);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string &path, const std::string &content);
std::string read_text_file(const std::string &path);

}  // namespace daqc::report
