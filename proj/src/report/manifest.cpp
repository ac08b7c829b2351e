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


#include <chrono>
#include <ctime>
#include <json.hpp>

#include "daqc/report/report.hpp"

namespace daqc::report {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string manifest_to_json(const RunManifest &m) {
    nlohmann::ordered_json doc;
    doc["command"] = m.command;
    doc["arguments"] = m.arguments;
    doc["config"] = m.config_json.empty() ? nlohmann::ordered_json::object()
                                          : nlohmann::ordered_json::parse(m.config_json);
    doc["seed"] = m.seed;
    doc["version"] = m.version;
    doc["timestamp"] = m.timestamp;
    doc["outputs"] = m.outputs;
    return doc.dump(2) + "\n";
}

}  // namespace daqc::report
