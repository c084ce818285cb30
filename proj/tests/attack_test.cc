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

#include "pingpong/attack.h"

#include <gtest/gtest.h>

#include "pingpong/isometry_solver.h"
#include "pingpong/reference_states.h"

namespace pingpong {
namespace {

using reference::ket;

const ExactReal kR = ExactReal::inv_sqrt2();
const ExactReal kQ = ExactReal::sqrt2_times(1, 4);
const ExactReal kHalf = ExactReal::fraction(1, 2);

QuantumState prepared() {
    return ghz({5, 1}, ModeRegistry::protocol(true));
}

QuantumState encoded(ModeId travel, PauliOp op, const QuantumState &s) {
    return encode(travel, op, s);
}

TEST(Attack, TranscribedForwardReproducesPublishedOutboundStates) {
    for (ModeId travel : {ModeId::B, ModeId::C}) {
        EXPECT_EQ(apply(transcribed_forward(travel), prepared()), reference::forward(travel)) << mode_name(travel);
    }
}

TEST(Attack, GateSequenceMatchesTableOnOutboundLeg) {
    for (ModeId travel : {ModeId::B, ModeId::C}) {
        EXPECT_EQ(apply(gate_sequence_tables(travel).forward, prepared()), reference::forward(travel));
    }
}

TEST(Attack, DerivedTablesAreIsometriesThatReproduceEveryScenario) {
    for (const auto &scenario : reference::return_scenarios()) {
        const AttackTables &t = attack_tables(scenario.travel, AttackVariant::table);
        EXPECT_TRUE(t.forward.is_isometry());
        EXPECT_TRUE(t.backward.is_isometry());
        EXPECT_TRUE(t.backward.preserves_photon_number());
        QuantumState round = apply(t.backward, encoded(scenario.travel, scenario.op, apply(t.forward, prepared())));
        EXPECT_EQ(round, scenario.expected) << scenario.name;
    }
}

TEST(Attack, ReturnUndoesOutboundOnItsRange) {
    for (ModeId travel : {ModeId::B, ModeId::C}) {
        for (AttackVariant v : {AttackVariant::table, AttackVariant::gate_sequence}) {
            const AttackTables &t = attack_tables(travel, v);
            ModeRegistry local(t.forward.modes());
            for (const auto &[input, output] : t.forward.rows()) {
                QuantumState back = apply(t.backward, QuantumState(local, output));
                EXPECT_EQ(back, QuantumState(local, Amplitudes{{input, ExactReal(1)}}))
                    << mode_name(travel) << " " << variant_name(v) << " " << local.ket(input);
            }
        }
    }
}

// Rows pinned by the published return states alone, frozen from the
// independent symbolic oracle in tests/oracle.
TEST(Attack, ReturnRowsFixedByPublishedStates) {
    const LinearMap &back = attack_tables(ModeId::B, AttackVariant::table).backward;
    auto row = [&](FockConfig in) { return back.rows().at(in); };
    EXPECT_EQ(row({kVac, kPol1, kPol0}), (Amplitudes{{{kPol1, kVac, kPol0}, kR}, {{kPol1, kVac, kPol1}, kR}}));
    EXPECT_EQ(row({kPol0, kPol1, kVac}), (Amplitudes{{{kVac, kPair01, kVac}, ExactReal(1)}}));
    EXPECT_EQ(row({kPol1, kPol1, kVac}), (Amplitudes{{{kPol1, kVac, kPol0}, kR}, {{kPol1, kVac, kPol1}, -kR}}));
}

TEST(Attack, CompletedReturnRows) {
    const LinearMap &back = attack_tables(ModeId::B, AttackVariant::table).backward;
    EXPECT_EQ(back.rows().size(), 7u);
    const ModeOccupation pair00{2, 0};
    EXPECT_EQ(back.rows().at({kPol0, kVac, kPol1}),
              (Amplitudes{{{kVac, kVac, pair00}, -kR}, {{kPol0, kVac, kPol0}, kR}}));
    EXPECT_EQ(back.rows().at({kPol1, kPol0, kVac}), (Amplitudes{{{kVac, kVac, kPair01}, kR},
                                                                {{kVac, kPol1, kPol0}, kQ},
                                                                {{kVac, kPol1, kPol1}, -kQ},
                                                                {{kPair01, kVac, kVac}, kHalf}}));
}

TEST(Attack, SameRowsForBothTravelModes) {
    EXPECT_EQ(attack_tables(ModeId::B, AttackVariant::table).backward.rows(),
              attack_tables(ModeId::C, AttackVariant::table).backward.rows());
}

TEST(Attack, InconsistentTranscriptionIsNamed) {
    auto scenarios = reference::return_scenarios();
    for (auto &s : scenarios) {
        if (s.name == "charlie/Z") {
            s.expected = superpose({{kR, ket("0", "1", "0", "vac", "0")}, {-kR, ket("1", "0", "1", "vac", "1")}});
        }
    }
    try {
        derive_tables_from(ModeId::C, scenarios);
        FAIL() << "expected InconsistentConstraints";
    } catch (const InconsistentConstraints &e) {
        bool names_z = e.first().find("charlie/Z") != std::string::npos ||
                       e.second().find("charlie/Z") != std::string::npos;
        EXPECT_TRUE(names_z) << e.first() << " / " << e.second();
    }
}

TEST(Attack, ForwardTableIsLinear) {
    const LinearMap &f = attack_tables(ModeId::B, AttackVariant::table).forward;
    QuantumState a = ket("0", "1", "0", "vac", "0");
    QuantumState b = ket("1", "0", "1", "vac", "0");
    ExactReal alpha = ExactReal::fraction(3, 5);
    ExactReal beta = ExactReal::fraction(-4, 5);
    EXPECT_EQ(apply(f, superpose({{alpha, a}, {beta, b}})),
              superpose({{alpha, apply(f, a)}, {beta, apply(f, b)}}));
}

TEST(Attack, GatesAreIsometriesAndComposeToForward) {
    for (ModeId travel : {ModeId::B, ModeId::C}) {
        auto gates = attack_gates(travel);
        ASSERT_EQ(gates.size(), 5u);
        EXPECT_EQ(gates[0].name(), "H_y");
        for (const auto &g : gates) {
            EXPECT_TRUE(g.is_isometry()) << g.name();
        }
        EXPECT_EQ(apply_all(gates, prepared()), reference::forward(travel));
    }
}

TEST(Attack, GateSequenceDivergesOnlyByBunching) {
    for (const auto &scenario : reference::return_scenarios()) {
        DivergenceReport r = compare_variants(scenario);
        bool flips = scenario.op == PauliOp::X || scenario.op == PauliOp::iY;
        if (flips) {
            EXPECT_EQ(r.diffs.size(), 4u) << scenario.name;
            EXPECT_EQ(r.pairs.size(), 2u) << scenario.name;
            EXPECT_TRUE(r.only_bunching) << scenario.name;
        } else {
            EXPECT_TRUE(r.diffs.empty()) << scenario.name;
        }
    }
}

TEST(Attack, EveReadoutAfterBobFlip) {
    const AttackTables &t = attack_tables(ModeId::B, AttackVariant::table);
    QuantumState round = attacked_round(t, PauliOp::iY, PauliOp::I);
    auto m = eve_measure(round, ModeId::B);
    ExactReal eighth = ExactReal::fraction(1, 8);
    ExactReal quarter = ExactReal::fraction(1, 4);
    EXPECT_EQ(m.at(EveOutcome{kVac, kVac}), quarter);
    EXPECT_EQ(m.at(EveOutcome{kVac, kPol1}), eighth);
    EXPECT_EQ(m.at(EveOutcome{kVac, kPol0}), eighth);
    EXPECT_EQ(m.at(EveOutcome{kPol1, kPol1}), eighth);
    EXPECT_EQ(m.at(EveOutcome{kPol1, kPol0}), eighth);
    EXPECT_EQ(m.at(EveOutcome{kPair01, kVac}), quarter);
    EXPECT_EQ((EveOutcome{kVac, kPol1}).label(), "x=vac,y=1");
}

TEST(Attack, EveReadoutWithoutFlipLeavesYAtZero) {
    const AttackTables &t = attack_tables(ModeId::B, AttackVariant::table);
    auto m = eve_measure(attacked_round(t, PauliOp::I, PauliOp::I), ModeId::B);
    for (const auto &[outcome, p] : m) {
        if (outcome.y == kPol1) {
            EXPECT_TRUE(p.is_zero());
        }
    }
}

TEST(Attack, TravelModeAIsRejected) {
    EXPECT_THROW(attack_tables(ModeId::A, AttackVariant::table), std::invalid_argument);
    EXPECT_THROW(parse_variant("gates"), std::invalid_argument);
    EXPECT_EQ(parse_variant("gate_sequence"), AttackVariant::gate_sequence);
}

}  // namespace
}  // namespace pingpong
