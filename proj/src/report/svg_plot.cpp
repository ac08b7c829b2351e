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
#include <map>
#include <set>

#include "daqc/errors.hpp"
#include "daqc/report/report.hpp"

namespace daqc::report {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 60.0;

const char *const kColours[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d"};

double x_value(const CsvRow &r, PlotAxis axis) {
    switch (axis) {
        case PlotAxis::Beta:
            return r.beta;
        case PlotAxis::ErrorScale:
            return r.error_scale;
        case PlotAxis::NQubits:
            return r.n_qubits;
    }
    return 0.0;
}

const char *axis_label(PlotAxis axis) {
    switch (axis) {
        case PlotAxis::Beta:
            return "beta";
        case PlotAxis::ErrorScale:
            return "error scale";
        case PlotAxis::NQubits:
            return "qubits";
    }
    return "";
}

}  // namespace

PlotAxis parse_plot_axis(std::string_view text) {
    if (text == "beta") {
        return PlotAxis::Beta;
    }
    if (text == "error_scale") {
        return PlotAxis::ErrorScale;
    }
    if (text == "n_qubits") {
        return PlotAxis::NQubits;
    }
    throw InvalidInput("plot axis must be beta, error_scale or n_qubits");
}

std::string render_svg(const std::vector<CsvRow> &rows, PlotAxis axis) {
    if (rows.empty()) {
        throw InvalidInput("nothing to plot");
    }
    std::set<int> sizes;
    for (const CsvRow &r : rows) {
        sizes.insert(r.n_qubits);
    }
    const bool split_by_n = axis != PlotAxis::NQubits && sizes.size() > 1;

    // series -> x -> (sum, count); equal x values are averaged.
    std::map<std::string, std::map<double, std::pair<double, int>>> series;
    double x_lo = x_value(rows.front(), axis);
    double x_hi = x_lo;
    for (const CsvRow &r : rows) {
        const std::string key = split_by_n ? r.protocol + " n=" + std::to_string(r.n_qubits) : r.protocol;
        const double x = x_value(r, axis);
        auto &cell = series[key][x];
        cell.first += r.mean_fidelity;
        cell.second += 1;
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
    }
    double y_lo = 1.0;
    double y_hi = 0.0;
    for (const auto &[key, pts] : series) {
        for (const auto &[x, cell] : pts) {
            const double y = cell.first / cell.second;
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (x_hi == x_lo) {
        x_hi = x_lo + 1.0;
    }
    if (y_hi <= y_lo) {
        y_hi = y_lo + 1e-3;
    }
    const double plot_w = kWidth - 2.0 * kMargin;
    const double plot_h = kHeight - 2.0 * kMargin;
    auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * plot_h; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(static_cast<int>(kWidth)) +
                      "\" height=\"" + std::to_string(static_cast<int>(kHeight)) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + fixed9(kMargin) + "\" y1=\"" + fixed9(kHeight - kMargin) + "\" x2=\"" +
           fixed9(kWidth - kMargin) + "\" y2=\"" + fixed9(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fixed9(kMargin) + "\" y1=\"" + fixed9(kMargin) + "\" x2=\"" + fixed9(kMargin) +
           "\" y2=\"" + fixed9(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fixed9(kWidth / 2) + "\" y=\"" + fixed9(kHeight - 15) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + axis_label(axis) + "</text>\n";
    svg += "<text x=\"15\" y=\"" + fixed9(kHeight / 2) + "\" font-size=\"14\" transform=\"rotate(-90 15 " +
           fixed9(kHeight / 2) + ")\" text-anchor=\"middle\">mean fidelity</text>\n";
    svg += "<text class=\"x-range\" x=\"" + fixed9(kMargin) + "\" y=\"" + fixed9(kHeight - kMargin + 18) +
           "\" font-size=\"11\">" + fixed9(x_lo) + "</text>\n";
    svg += "<text class=\"x-range\" x=\"" + fixed9(kWidth - kMargin) + "\" y=\"" + fixed9(kHeight - kMargin + 18) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fixed9(x_hi) + "</text>\n";
    svg += "<text class=\"y-range\" x=\"" + fixed9(kMargin - 5) + "\" y=\"" + fixed9(kHeight - kMargin) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fixed9(y_lo) + "</text>\n";
    svg += "<text class=\"y-range\" x=\"" + fixed9(kMargin - 5) + "\" y=\"" + fixed9(kMargin) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fixed9(y_hi) + "</text>\n";

    std::size_t colour = 0;
    double legend_y = kMargin;
    for (const auto &[key, pts] : series) {
        const char *c = kColours[colour++ % (sizeof(kColours) / sizeof(kColours[0]))];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(c) + "\" stroke-width=\"2\" data-series=\"" + key +
               "\" points=\"";
        bool first = true;
        for (const auto &[x, cell] : pts) {
            svg += (first ? "" : " ") + fixed9(px(x)) + "," + fixed9(py(cell.first / cell.second));
            first = false;
        }
        svg += "\"/>\n";
        svg += "<text x=\"" + fixed9(kWidth - kMargin + 5) + "\" y=\"" + fixed9(legend_y) + "\" font-size=\"11\" fill=\"" +
               c + "\">" + key + "</text>\n";
        legend_y += 14.0;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace daqc::report
