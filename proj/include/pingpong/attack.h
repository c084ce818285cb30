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

#ifndef PINGPONG_ATTACK_H
#define PINGPONG_ATTACK_H

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pingpong/fock.h"
#include "pingpong/gates.h"
#include "pingpong/isometry_solver.h"
#include "pingpong/reference_states.h"

namespace pingpong {

/// How Eve's entangling operation is realized.
///
/// `table` is normative: the outbound action is transcribed from the published
/// attacked state and the return action is solved from the published return
/// states. `gate_sequence` composes H, CPBS and CNOT gates instead; it agrees
/// with the table on the outbound leg and on I / Z encodings, but leaves the
/// photon pairs of the X / iY return states split across the travel and x
/// modes where the published states bunch them into one mode.
enum class AttackVariant { table, gate_sequence };

std::string_view variant_name(AttackVariant variant);
AttackVariant parse_variant(std::string_view name);

struct AttackTables {
    ModeId travel = ModeId::B;
    AttackVariant variant = AttackVariant::table;
    LinearMap forward;   // on (travel, x, y)
    LinearMap backward;  // on (travel, x, y)
};

/// Eve's occupation-basis readout of her two modes.
struct EveOutcome {
    ModeOccupation x;
    ModeOccupation y;

    /// e.g. "x=vac,y=1"
    std::string label() const;
    friend auto operator<=>(const EveOutcome &, const EveOutcome &) = default;
};

/// Outbound rows, written for a travel mode and relabelled per scenario:
///   |1, vac, 0> -> (|vac, 1, 0> + |1, 1, vac>) / sqrt 2
///   |0, vac, 0> -> (|0, vac, 1> + |0, 0, vac>) / sqrt 2
LinearMap transcribed_forward(ModeId travel);

/// Table variant. The return map is the unique isometry consistent with every
/// published return state (both senders share it), completed on unreached
/// directions by deterministic Gram-Schmidt.
AttackTables derive_tables(ModeId travel);

/// Same derivation from an explicit scenario list; used to check that
/// transcription errors are caught. Throws InconsistentConstraints.
AttackTables derive_tables_from(ModeId travel, const std::vector<reference::ReturnScenario> &scenarios);

/// The five gates of the attack operator in application order:
/// H_y, C_(travel,x,y), N_(travel,y), C_(y,travel,x), N_(x,y).
std::vector<LinearMap> attack_gates(ModeId travel);

/// Gate-sequence variant: forward composes attack_gates, backward composes
/// their inverses in reverse order. Domains are every configuration on
/// (travel, x, y) on which all gates are defined.
AttackTables gate_sequence_tables(ModeId travel);

AttackTables attack_tables(ModeId travel, AttackVariant variant);

/// Inverse of an isometry whose outputs span the same configurations as its
/// inputs (every shipped gate): the transpose.
LinearMap transpose(const LinearMap &map, std::string name);

/// Composes maps on a common mode list into one table over every
/// configuration on which the whole sequence is defined.
LinearMap compose_sequence(std::string name, std::vector<ModeId> modes, const std::vector<LinearMap> &sequence);

/// Exact joint distribution of Eve's (x, y) readout.
std::map<EveOutcome, ExactReal> eve_measure(const QuantumState &state, ModeId travel);

/// One configuration where two states disagree.
struct TermDiff {
    FockConfig config;
    ExactReal expected;
    ExactReal actual;
};

std::vector<TermDiff> diff_states(const QuantumState &expected, const QuantumState &actual);
std::string format_diffs(const ModeRegistry &registry, const std::vector<TermDiff> &diffs);

/// A photon pair held in one mode by one state and split across the travel
/// and x modes by the other, with the same amplitude.
struct BunchingPair {
    FockConfig bunched;
    FockConfig split;
    ExactReal amplitude;
};

struct DivergenceReport {
    std::string scenario;
    std::vector<TermDiff> diffs;          // expected = table variant, actual = gate variant
    std::vector<BunchingPair> pairs;
    bool only_bunching = true;            // every diff belongs to some pair
};

/// Runs the published return scenario with both variants and explains every
/// differing term as a bunching discrepancy where possible.
DivergenceReport compare_variants(const reference::ReturnScenario &scenario);

/// Full attacked round on |psi5>: outbound attack on `travel`, encodings
/// (Bob's on B, Charlie's on C), return attack.
QuantumState attacked_round(const AttackTables &tables, PauliOp bob, PauliOp charlie,
                            GhzIndex initial = GhzIndex{5, 1});

}  // namespace pingpong

#endif
