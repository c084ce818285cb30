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

#ifndef PINGPONG_REFERENCE_STATES_H
#define PINGPONG_REFERENCE_STATES_H

#include <optional>
#include <string>
#include <vector>

#include "pingpong/fock.h"
#include "pingpong/gates.h"

namespace pingpong::reference {

// Published closed forms of the attacked protocol, transcribed term by term on
// the registry (A, B, C, x, y) with initial state |psi5>|vac>_x|0>_y. They are
// the ground truth the attack tables are derived from and checked against.
//
// Where a published state is printed twice (raw expansion, then regrouped in
// the GHZ basis), the raw expansion is used. The regrouped forms of the
// Charlie sigma_x / i sigma_y states do not expand back to their own raw forms.

/// State after the outbound attack on `travel` (B or C).
QuantumState forward(ModeId travel);

/// State after the return attack when the attacked sender applied `op` and the
/// other sender applied I. Bob's published cases are I and iY; Charlie's are
/// all four. nullopt for unpublished combinations.
std::optional<QuantumState> after_return(ModeId travel, PauliOp op);

struct ReturnScenario {
    std::string name;
    ModeId travel;
    PauliOp op;
    QuantumState expected;
};

/// All six published return states, Bob's first.
std::vector<ReturnScenario> return_scenarios();

struct EncodingEntry {
    PauliOp bob;
    PauliOp charlie;
    GhzIndex result;
    QuantumState state;  // on (A, B, C), as printed
};

/// Published encoding table on |psi5>: resulting GHZ state, sign included,
/// for each of Bob's two and Charlie's four operations.
std::vector<EncodingEntry> encoding_table();

/// Single ket on (A, B, C, x, y) from occupation tokens "vac", "0", "1", "01".
QuantumState ket(const char *a, const char *b, const char *c, const char *x, const char *y);

}  // namespace pingpong::reference

#endif
