// Copyright 2026 The pingpong-ghz Authors
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

#ifndef PINGPONG_GATES_H
#define PINGPONG_GATES_H

#include <optional>
#include <string_view>
#include <vector>

#include "pingpong/fock.h"

namespace pingpong {

/// The four encoding operations, acting on each photon of a mode:
///   I  = |0><0| + |1><1|     X = |0><1| + |1><0|
///   iY = |0><1| - |1><0|     Z = |0><0| - |1><1|
enum class PauliOp { I, X, iY, Z };

inline constexpr PauliOp kAllPaulis[] = {PauliOp::I, PauliOp::X, PauliOp::iY, PauliOp::Z};

std::string_view pauli_name(PauliOp op);
/// Accepts "I", "X", "iY", "Z".
PauliOp parse_pauli(std::string_view name);

/// Result of a Pauli acting on one occupation: new occupation and sign.
std::pair<ModeOccupation, int> pauli_on_occupation(PauliOp op, ModeOccupation occ);

/// Addresses one of the eight GHZ states; `sign` carries a global phase of +-1.
struct GhzIndex {
    int index = 5;
    int sign = 1;

    friend bool operator==(const GhzIndex &, const GhzIndex &) = default;
};

/// Label used in measurement outcomes: "psi1" .. "psi8".
std::string ghz_label(int index);

/// sign * |psi_index> on (A, B, C). On a registry that also holds x and y the
/// eavesdropper modes are set to their prepared values |vac>_x |0>_y.
QuantumState ghz(GhzIndex index, const ModeRegistry &registry = ModeRegistry::protocol(false));

/// If `state` (on A, B, C) equals +-|psi_i> exactly, returns that index and sign.
std::optional<GhzIndex> identify_ghz(const QuantumState &state);

/// The eight GHZ states as an orthonormal measurement basis on (A, B, C).
std::vector<LabeledState> ghz_basis();

/// Applies the Pauli to every photon in `mode`, term by term. Vacuum is left alone.
QuantumState encode(ModeId mode, PauliOp op, const QuantumState &state);

/// Polarization Hadamard. Domain: at most one photon in `mode`.
LinearMap hadamard(ModeId mode);

/// Flips every photon in `target` when `control` holds one photon polarized 1.
/// Domain: at most one photon in `control`.
LinearMap cnot(ModeId control, ModeId target);

/// Polarizing beam splitter: polarization-0 photons stay, polarization-1
/// photons change mode. No phases. Domain: outputs within the photon cap.
LinearMap pbs(ModeId mode1, ModeId mode2);

/// Controlled PBS. With `control` empty this is the identity; with one photon
/// of polarization c in `control`, photons of polarization c swap between
/// `mode1` and `mode2` and the rest stay. Domain: at most one control photon,
/// outputs within the photon cap.
LinearMap cpbs(ModeId control, ModeId mode1, ModeId mode2);

}  // namespace pingpong

#endif
