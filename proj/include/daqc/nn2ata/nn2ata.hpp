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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "daqc/sim/ising.hpp"

namespace daqc::nn2ata {

/// Readings of the zigzag vertex-permutation formula
///   even j: (k - 1 + j/2) mod M + 1,   odd j: (k - 1 - (j-1)/2) mod M + 1.
///  - ModL:        M = L, positions j = 0 .. L-1
///  - ModLPlusOne: M = L + 1, positions j = 0 .. L-1
///  - ModLOneBased: M = L, positions j = 1 .. L (the Walecki zigzag)
enum class ModReading { ModL, ModLPlusOne, ModLOneBased };

std::string_view reading_name(ModReading r);

/// Readings in the order the cover verifier tries them.
std::vector<ModReading> candidate_readings();

/// layout[q-1] = vertex at position q; labels 1..L.
using VertexPermutation = std::vector<int>;

bool is_permutation(const VertexPermutation &p);

/// Requires L >= 2 and 0 <= k <= L/2. The result is not guaranteed to be a
/// bijection for every reading; check with is_permutation.
VertexPermutation hp_permutation(int L, int k, ModReading reading = ModReading::ModLOneBased);

struct HamiltonianPath {
    std::vector<int> vertices;

    /// Consecutive pairs, each stored as (min, max).
    std::vector<std::pair<int, int>> edges() const;
};

/// tau_ij applied to every index of a Z-string support. Throws for i == j.
std::set<int> iswap_relabel(const std::set<int> &z_support, int i, int j);

/// Entrywise tau_ij.
VertexPermutation apply_permutation_to_layout(const VertexPermutation &current, int i, int j);

/// Transpositions (i, j), in application order, turning the identity layout
/// into `target` under apply_permutation_to_layout.
std::vector<std::pair<int, int>> layout_transpositions(const VertexPermutation &target);

struct CoverReport {
    int L = 0;
    ModReading reading = ModReading::ModLOneBased;
    std::vector<HamiltonianPath> paths;
    bool exact_cover = false;
    std::optional<std::pair<int, int>> offending_edge;  // missing or repeated
    std::string message;
};

/// Paths for k = 1 .. floor(L/2) under the first candidate reading whose
/// paths cover every edge of K_L exactly once. When none does, the report of
/// the last reading tried is returned with exact_cover = false.
CoverReport decompose_complete_graph(int L);

/// Cover check for one reading.
CoverReport check_cover(int L, ModReading reading);

/// Paths dump: one path per line, vertex labels separated by spaces.
std::string dump_paths(const std::vector<HamiltonianPath> &paths);

/// iSWAP on qubits i, j of an L-qubit register: |01> -> i|10>, |10> -> i|01>.
Eigen::MatrixXcd iswap_matrix(int L, int i, int j);

/// Product U_last ... U_first of the iSWAPs for a transposition list.
Eigen::MatrixXcd iswap_layer_unitary(int L, const std::vector<std::pair<int, int>> &transpositions);

struct VerifyReport {
    CoverReport cover;
    double time = 0.0;
    double distance = 0.0;          // full product vs exp(i t H_ATA)
    std::optional<int> offending_path;  // 0-based, first path whose conjugated block is wrong
    bool passed = false;
    std::string message;
};

/// Dense check that the NN line resource, conjugated by iSWAP layers for each
/// path and applied for time t per path, reproduces exp(i t H_ATA) with the
/// same homogeneous coupling. Requires 2 <= L <= 6. Inhomogeneous or non-line
/// resources raise NotImplemented.
VerifyReport verify_nn_simulates_ata(int L, const IsingSpec &resource, double t = 1.0, double tol = 1e-9);

}  // namespace daqc::nn2ata
