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


#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "daqc/errors.hpp"
#include "daqc/report/report.hpp"

namespace daqc::report {
namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

template <class T>
T parse_field(const std::string &text, const char *name) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw InvalidInput(std::string("malformed CSV field '") + name + "': '" + text + "'");
    }
    return value;
}

}  // namespace

std::string fixed9(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
    std::string s(buf, res.ptr);
    if (s == "-0.000000000") {
        s = "0.000000000";
    }
    return s;
}

std::string records_to_csv(const std::vector<noise::ExperimentRecord> &records) {
    std::string out(kCsvHeader);
    out += "\n";
    for (const noise::ExperimentRecord &r : records) {
        out += std::string(noise::protocol_name(r.protocol)) + "," + std::to_string(r.n_qubits) + "," +
               fixed9(r.beta) + "," + std::to_string(r.shots) + "," + std::to_string(r.seed) + "," +
               fixed9(r.mean_fidelity) + "," + fixed9(r.std_fidelity) + "," + fixed9(r.delta_t) + "," +
               fixed9(r.error_scale) + "\n";
    }
    return out;
}

std::vector<CsvRow> parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw InvalidInput("CSV header does not match the sweep schema");
    }
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 9) {
            throw InvalidInput("CSV row has " + std::to_string(f.size()) + " fields, expected 9");
        }
        CsvRow r;
        r.protocol = f[0];
        r.n_qubits = parse_field<int>(f[1], "n_qubits");
        r.beta = parse_field<double>(f[2], "beta");
        r.shots = parse_field<int>(f[3], "shots");
        r.seed = parse_field<std::uint64_t>(f[4], "seed");
        r.mean_fidelity = parse_field<double>(f[5], "mean_fidelity");
        r.std_fidelity = parse_field<double>(f[6], "std_fidelity");
        r.delta_t = parse_field<double>(f[7], "delta_t");
        r.error_scale = parse_field<double>(f[8], "error_scale");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        throw InvalidInput("CSV has no data rows");
    }
    return rows;
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace daqc::report
