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

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "daqc/sim/evolution.hpp"
#include "daqc/sim/gates.hpp"
#include "daqc/sim/ising.hpp"
#include "daqc/sim/statevector.hpp"

namespace daqc {

/// exp(i * angle * G) on one qubit. Control-amplitude noise scales `angle`.
struct Rotation {
    int qubit = 1;
    Generator generator = Generator::Z;
    double angle = 0.0;
};

/// exp(i * angle * Z_first Z_second).
struct ZzRotation {
    int first = 1;
    int second = 2;
    double angle = 0.0;
};

enum class AnalogKind { Stepwise, Banged };

/// exp(i * duration * H_int) with H_int the program's analog resource. The
/// kind tells the noise model which timing-error width applies.
struct AnalogBlock {
    double duration = 0.0;
    AnalogKind kind = AnalogKind::Stepwise;
};

/// Banged rotation window: the resource stays on while X drives of amplitude
/// drive_scale[j] * pi / (2 * duration) act on `qubits` for `duration`. With
/// unit scales and no resource this is i X on every driven qubit.
struct DriveWindow {
    std::vector<int> qubits;
    double duration = 0.0;
    std::vector<double> drive_scale;  // empty means all 1
};

using Op = std::variant<Rotation, ZzRotation, DiagonalTwoQubitGate, AnalogBlock, DriveWindow>;

std::string describe(const Op &op);

/// An op sequence over a fixed register, plus the analog resource that
/// AnalogBlock and DriveWindow evolve under.
struct Program {
    int n_qubits = 1;
    IsingSpec resource = IsingSpec::homogeneous(1);
    std::vector<Op> ops;
};

/// Per-op hook used by the noise model to replace each ideal op by a sampled
/// faulty version right before it is applied.
class OpPerturbation {
public:
    virtual ~OpPerturbation() = default;
    virtual Op perturb(const Op &ideal) = 0;
};

/// Applies ops to statevectors. Immutable after construction, so one runner
/// may be shared by threads working on distinct states.
class ProgramRunner {
public:
    /// Throws InvalidInput unless the resource is homogeneous whenever the
    /// program contains drive windows.
    explicit ProgramRunner(const Program &program);

    const Program &program() const { return program_; }

    void run(Statevector &state, OpPerturbation *noise = nullptr) const;
    void apply(Statevector &state, const Op &op) const;

private:
    void apply_window(Statevector &state, const DriveWindow &w) const;

    Program program_;
    DiagonalEvolution resource_evolution_;
};

/// Dense unitary of a drive window, built from the full register Hamiltonian.
/// Independent of ProgramRunner's block-sector route; used as its oracle.
Eigen::MatrixXcd drive_window_dense(const IsingSpec &resource, const DriveWindow &w);

}  // namespace daqc
