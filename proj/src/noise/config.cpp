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


#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "daqc/errors.hpp"
#include "daqc/noise/noise.hpp"

namespace daqc::noise {
namespace {

double number_field(const nlohmann::json &value, const std::string &key) {
    if (!value.is_number()) {
        throw InvalidInput("noise config key '" + key + "' must be a number");
    }
    return value.get<double>();
}

}  // namespace

void NoiseConfig::validate() const {
    const double widths[] = {sqgn, tqgn, abn_s, abn_b, error_scale};
    for (double w : widths) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidInput("noise widths and error_scale must be finite and >= 0");
        }
    }
    if (sqg_halfwidth() > 1.0) {
        throw InvalidInput("sqgn * error_scale must not exceed 1");
    }
    if (!std::isfinite(delta_t) || !(delta_t > 0.0)) {
        throw InvalidInput("delta_t must be positive");
    }
}

double NoiseConfig::tqg_sigma() const {
    const double w = tqgn * error_scale;
    return tqgn_is_std ? w : std::sqrt(w);
}

double NoiseConfig::abn_sigma(AnalogKind kind) const {
    return (kind == AnalogKind::Stepwise ? abn_s : abn_b) * error_scale;
}

bool NoiseConfig::noiseless() const {
    return sqg_halfwidth() == 0.0 && tqg_sigma() == 0.0 && abn_sigma(AnalogKind::Stepwise) == 0.0 &&
           abn_sigma(AnalogKind::Banged) == 0.0;
}

NoiseConfig NoiseConfig::from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidInput(std::string("noise config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidInput("noise config must be a JSON object");
    }
    NoiseConfig c;
    for (const auto &[key, value] : doc.items()) {
        if (key == "sqgn") {
            c.sqgn = number_field(value, key);
        } else if (key == "tqgn") {
            c.tqgn = number_field(value, key);
        } else if (key == "tqgn_is_std") {
            if (!value.is_boolean()) {
                throw InvalidInput("noise config key 'tqgn_is_std' must be a boolean");
            }
            c.tqgn_is_std = value.get<bool>();
        } else if (key == "abn_s") {
            c.abn_s = number_field(value, key);
        } else if (key == "abn_b") {
            c.abn_b = number_field(value, key);
        } else if (key == "error_scale") {
            c.error_scale = number_field(value, key);
        } else if (key == "seed") {
            if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() &&
                                               value.get<std::int64_t>() < 0)) {
                throw InvalidInput("noise config key 'seed' must be a non-negative integer");
            }
            c.seed = value.get<std::uint64_t>();
        } else if (key == "delta_t") {
            c.delta_t = number_field(value, key);
        } else {
            throw InvalidInput("unknown noise config key '" + key + "'");
        }
    }
    c.validate();
    return c;
}

NoiseConfig NoiseConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read noise config '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string NoiseConfig::to_json() const {
    nlohmann::ordered_json doc;
    doc["sqgn"] = sqgn;
    doc["tqgn"] = tqgn;
    doc["tqgn_is_std"] = tqgn_is_std;
    doc["abn_s"] = abn_s;
    doc["abn_b"] = abn_b;
    doc["error_scale"] = error_scale;
    doc["seed"] = seed;
    doc["delta_t"] = delta_t;
    return doc.dump(2);
}

}  // namespace daqc::noise
