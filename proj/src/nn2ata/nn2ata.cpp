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


#include "daqc/nn2ata/nn2ata.hpp"

#include <algorithm>
#include <complex>
#include <map>

#include "daqc/errors.hpp"
#include "daqc/sim/dense.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc::nn2ata {
namespace {

int positive_mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

std::string edge_text(std::pair<int, int> e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

std::string_view reading_name(ModReading r) {
    switch (r) {
        case ModReading::ModL:
            return "mod-L";
        case ModReading::ModLPlusOne:
            return "mod-(L+1)";
        case ModReading::ModLOneBased:
            return "mod-L-one-based";
    }
    return "?";
}

std::vector<ModReading> candidate_readings() {
    return {ModReading::ModL, ModReading::ModLPlusOne, ModReading::ModLOneBased};
}

bool is_permutation(const VertexPermutation &p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

VertexPermutation hp_permutation(int L, int k, ModReading reading) {
    if (L < 2) {
        throw InvalidInput("hp_permutation needs L >= 2");
    }
    if (k < 0 || k > L / 2) {
        throw InvalidInput("hp_permutation needs 0 <= k <= L/2");
    }
    const int modulus = reading == ModReading::ModLPlusOne ? L + 1 : L;
    const int first = reading == ModReading::ModLOneBased ? 1 : 0;
    VertexPermutation out;
    out.reserve(static_cast<std::size_t>(L));
    for (int j = first; j < first + L; ++j) {
        const int raw = (j % 2 == 0) ? k - 1 + j / 2 : k - 1 - (j - 1) / 2;
        out.push_back(positive_mod(raw, modulus) + 1);
    }
    return out;
}

std::vector<std::pair<int, int>> HamiltonianPath::edges() const {
    std::vector<std::pair<int, int>> e;
    for (std::size_t q = 0; q + 1 < vertices.size(); ++q) {
        e.emplace_back(std::min(vertices[q], vertices[q + 1]), std::max(vertices[q], vertices[q + 1]));
    }
    return e;
}

std::set<int> iswap_relabel(const std::set<int> &z_support, int i, int j) {
    if (i == j) {
        throw InvalidInput("iswap_relabel needs i != j");
    }
    std::set<int> out;
    for (int k : z_support) {
        out.insert(k == i ? j : (k == j ? i : k));
    }
    return out;
}

VertexPermutation apply_permutation_to_layout(const VertexPermutation &current, int i, int j) {
    if (i == j) {
        throw InvalidInput("apply_permutation_to_layout needs i != j");
    }
    VertexPermutation out = current;
    for (int &v : out) {
        v = v == i ? j : (v == j ? i : v);
    }
    return out;
}

std::vector<std::pair<int, int>> layout_transpositions(const VertexPermutation &target) {
    if (!is_permutation(target)) {
        throw InvalidInput("layout target is not a permutation");
    }
    VertexPermutation layout(target.size());
    for (std::size_t q = 0; q < layout.size(); ++q) {
        layout[q] = static_cast<int>(q) + 1;
    }
    std::vector<std::pair<int, int>> out;
    for (std::size_t q = 0; q < layout.size(); ++q) {
        if (layout[q] != target[q]) {
            out.emplace_back(layout[q], target[q]);
            layout = apply_permutation_to_layout(layout, layout[q], target[q]);
        }
    }
    return out;
}

CoverReport check_cover(int L, ModReading reading) {
    if (L < 2) {
        throw InvalidInput("complete-graph decomposition needs L >= 2");
    }
    CoverReport report;
    report.L = L;
    report.reading = reading;
    std::map<std::pair<int, int>, int> count;
    for (int k = 1; k <= L / 2; ++k) {
        const VertexPermutation p = hp_permutation(L, k, reading);
        if (!is_permutation(p)) {
            report.message = "k=" + std::to_string(k) + " does not give a permutation under " +
                             std::string(reading_name(reading));
            return report;
        }
        report.paths.push_back(HamiltonianPath{p});
        for (auto e : report.paths.back().edges()) {
            if (++count[e] > 1) {
                report.offending_edge = e;
                report.message = "edge " + edge_text(e) + " is covered more than once";
                return report;
            }
        }
    }
    for (int a = 1; a <= L; ++a) {
        for (int b = a + 1; b <= L; ++b) {
            if (count.find({a, b}) == count.end()) {
                report.offending_edge = std::make_pair(a, b);
                report.message = "edge " + edge_text({a, b}) + " is not covered";
                return report;
            }
        }
    }
    report.exact_cover = true;
    report.message = "exact cover of K_" + std::to_string(L) + " by " + std::to_string(report.paths.size()) +
                     " paths";
    return report;
}

CoverReport decompose_complete_graph(int L) {
    CoverReport last;
    for (ModReading r : candidate_readings()) {
        last = check_cover(L, r);
        if (last.exact_cover) {
            return last;
        }
    }
    return last;
}

std::string dump_paths(const std::vector<HamiltonianPath> &paths) {
    std::string out;
    for (const HamiltonianPath &p : paths) {
        for (std::size_t q = 0; q < p.vertices.size(); ++q) {
            out += (q ? " " : "") + std::to_string(p.vertices[q]);
        }
        out += "\n";
    }
    return out;
}

Eigen::MatrixXcd iswap_matrix(int L, int i, int j) {
    if (L < 2 || L > kMaxDenseQubits || i == j || i < 1 || j < 1 || i > L || j > L) {
        throw InvalidInput("iswap_matrix needs distinct qubits within a dense-sized register");
    }
    const Eigen::Index dim = Eigen::Index{1} << L;
    const std::uint64_t mi = qubit_mask(L, i);
    const std::uint64_t mj = qubit_mask(L, j);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto b = static_cast<std::uint64_t>(col);
        const bool bi = (b & mi) != 0;
        const bool bj = (b & mj) != 0;
        if (bi == bj) {
            u(col, col) = 1.0;
        } else {
            u(static_cast<Eigen::Index>(b ^ mi ^ mj), col) = std::complex<double>(0.0, 1.0);
        }
    }
    return u;
}

Eigen::MatrixXcd iswap_layer_unitary(int L, const std::vector<std::pair<int, int>> &transpositions) {
    const Eigen::Index dim = Eigen::Index{1} << L;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (auto [i, j] : transpositions) {
        u = iswap_matrix(L, i, j) * u;
    }
    return u;
}

VerifyReport verify_nn_simulates_ata(int L, const IsingSpec &resource, double t, double tol) {
    if (L < 2 || L > 6) {
        throw InvalidInput("dense NN-to-ATA verification needs 2 <= L <= 6");
    }
    if (resource.n_qubits() != L) {
        throw InvalidInput("resource register does not match L");
    }
    const double g = resource.coupling(1, 2);
    for (auto [j, k] : resource.pairs()) {
        const double expected = (k == j + 1) ? g : 0.0;
        if (resource.coupling(j, k) != expected) {
            throw NotImplemented("only homogeneous nearest-neighbour line resources are supported");
        }
    }

    VerifyReport report;
    report.time = t;
    report.cover = decompose_complete_graph(L);
    if (!report.cover.exact_cover) {
        report.message = "no exact path cover: " + report.cover.message;
        return report;
    }

    const Eigen::MatrixXcd line = ising_unitary(resource, t);
    const Eigen::Index dim = Eigen::Index{1} << L;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t p = 0; p < report.cover.paths.size(); ++p) {
        const HamiltonianPath &path = report.cover.paths[p];
        const Eigen::MatrixXcd layer = iswap_layer_unitary(L, layout_transpositions(path.vertices));
        const Eigen::MatrixXcd block = layer * line * layer.adjoint();
        IsingSpec expected(L);
        for (auto [a, b] : path.edges()) {
            expected.set_coupling(a, b, g);
        }
        if (!report.offending_path && phase_insensitive_distance(block, ising_unitary(expected, t)) > tol) {
            report.offending_path = static_cast<int>(p);
        }
        total = block * total;
    }
    report.distance = phase_insensitive_distance(total, ising_unitary(IsingSpec::homogeneous(L, g), t));
    report.passed = report.distance < tol && !report.offending_path;
    if (report.passed) {
        report.message = "PASS";
    } else if (report.offending_path) {
        report.message = "FAIL: path " + std::to_string(*report.offending_path) + " does not map onto its edges";
    } else {
        report.message = "FAIL: distance " + std::to_string(report.distance);
    }
    return report;
}

}  // namespace daqc::nn2ata
