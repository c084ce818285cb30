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

#include <algorithm>
#include <set>
#include <sstream>

namespace pingpong {

namespace {

std::vector<ModeId> attack_modes(ModeId travel) {
    if (travel != ModeId::B && travel != ModeId::C) {
        throw std::invalid_argument("attack: travel mode must be B or C");
    }
    return {travel, ModeId::x, ModeId::y};
}

std::string suffix(ModeId travel) {
    return std::string(mode_name(travel)) + "xy";
}

QuantumState encoded(const QuantumState &state, PauliOp bob, PauliOp charlie) {
    return encode(ModeId::C, charlie, encode(ModeId::B, bob, state));
}

bool is_split_pair(const ModeOccupation &a, const ModeOccupation &b) {
    return (a == kPol0 && b == kPol1) || (a == kPol1 && b == kPol0);
}

}  // namespace

std::string_view variant_name(AttackVariant variant) {
    return variant == AttackVariant::table ? "table" : "gate_sequence";
}

AttackVariant parse_variant(std::string_view name) {
    if (name == "table") {
        return AttackVariant::table;
    }
    if (name == "gate_sequence") {
        return AttackVariant::gate_sequence;
    }
    throw std::invalid_argument("unknown attack variant '" + std::string(name) + "'");
}

std::string EveOutcome::label() const {
    return "x=" + x.label() + ",y=" + y.label();
}

LinearMap transcribed_forward(ModeId travel) {
    ExactReal r = ExactReal::inv_sqrt2();
    std::map<FockConfig, Amplitudes> rows{
        {{kPol1, kVac, kPol0}, {{{kVac, kPol1, kPol0}, r}, {{kPol1, kPol1, kVac}, r}}},
        {{kPol0, kVac, kPol0}, {{{kPol0, kVac, kPol1}, r}, {{kPol0, kPol0, kVac}, r}}},
    };
    return LinearMap("T_" + suffix(travel), attack_modes(travel), std::move(rows));
}

AttackTables derive_tables_from(ModeId travel, const std::vector<reference::ReturnScenario> &scenarios) {
    std::vector<MapConstraint> constraints;
    QuantumState initial = ghz({5, 1}, ModeRegistry::protocol(true));
    for (const auto &s : scenarios) {
        QuantumState outbound = apply(transcribed_forward(s.travel), initial);
        PauliOp bob = s.travel == ModeId::B ? s.op : PauliOp::I;
        PauliOp charlie = s.travel == ModeId::C ? s.op : PauliOp::I;
        auto part = constraints_from_states(s.name, encoded(outbound, bob, charlie), s.expected, attack_modes(s.travel));
        constraints.insert(constraints.end(), part.begin(), part.end());
    }
    AttackTables tables;
    tables.travel = travel;
    tables.variant = AttackVariant::table;
    tables.forward = transcribed_forward(travel);
    tables.backward = solve_isometry("Tinv_" + suffix(travel), attack_modes(travel), constraints);
    return tables;
}

AttackTables derive_tables(ModeId travel) {
    return derive_tables_from(travel, reference::return_scenarios());
}

std::vector<LinearMap> attack_gates(ModeId travel) {
    attack_modes(travel);
    return {
        hadamard(ModeId::y),
        cpbs(travel, ModeId::x, ModeId::y),
        cnot(travel, ModeId::y),
        cpbs(ModeId::y, travel, ModeId::x),
        cnot(ModeId::x, ModeId::y),
    };
}

LinearMap transpose(const LinearMap &map, std::string name) {
    std::map<FockConfig, Amplitudes> rows;
    for (const auto &[input, output] : map.rows()) {
        for (const auto &[config, amp] : output) {
            rows[config][input] = amp;
        }
    }
    return LinearMap(std::move(name), map.modes(), std::move(rows), map.cap());
}

LinearMap compose_sequence(std::string name, std::vector<ModeId> modes, const std::vector<LinearMap> &sequence) {
    ModeRegistry local(modes);
    std::map<FockConfig, Amplitudes> rows;
    for (const auto &config : local.all_configs()) {
        try {
            QuantumState out = apply_all(sequence, QuantumState(local, Amplitudes{{config, ExactReal(1)}}));
            rows.emplace(config, out.terms());
        } catch (const DomainError &) {
            // Some gate is undefined here; leave it out of the composite's domain.
        }
    }
    return LinearMap(std::move(name), std::move(modes), std::move(rows), local.cap());
}

AttackTables gate_sequence_tables(ModeId travel) {
    std::vector<LinearMap> gates = attack_gates(travel);
    std::vector<LinearMap> inverses;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        inverses.push_back(transpose(*it, it->name() + "^-1"));
    }
    AttackTables tables;
    tables.travel = travel;
    tables.variant = AttackVariant::gate_sequence;
    tables.forward = compose_sequence("T_gates_" + suffix(travel), attack_modes(travel), gates);
    tables.backward = compose_sequence("Tinv_gates_" + suffix(travel), attack_modes(travel), inverses);
    return tables;
}

AttackTables attack_tables(ModeId travel, AttackVariant variant) {
    // Pure functions of their arguments; computed once.
    static const AttackTables table_b = derive_tables(ModeId::B);
    static const AttackTables table_c = derive_tables(ModeId::C);
    static const AttackTables gates_b = gate_sequence_tables(ModeId::B);
    static const AttackTables gates_c = gate_sequence_tables(ModeId::C);
    attack_modes(travel);
    if (variant == AttackVariant::table) {
        return travel == ModeId::B ? table_b : table_c;
    }
    return travel == ModeId::B ? gates_b : gates_c;
}

std::map<EveOutcome, ExactReal> eve_measure(const QuantumState &state, ModeId travel) {
    attack_modes(travel);
    std::map<EveOutcome, ExactReal> out;
    for (const auto &[key, rest] : split_by_occupation(state, {ModeId::x, ModeId::y})) {
        out[EveOutcome{key[0], key[1]}] += rest.norm2();
    }
    return out;
}

std::vector<TermDiff> diff_states(const QuantumState &expected, const QuantumState &actual) {
    std::set<FockConfig> configs;
    for (const auto &[c, a] : expected.terms()) {
        configs.insert(c);
    }
    for (const auto &[c, a] : actual.terms()) {
        configs.insert(c);
    }
    std::vector<TermDiff> out;
    for (const auto &c : configs) {
        ExactReal e = expected.amplitude(c);
        ExactReal a = actual.amplitude(c);
        if (e != a) {
            out.push_back({c, e, a});
        }
    }
    return out;
}

std::string format_diffs(const ModeRegistry &registry, const std::vector<TermDiff> &diffs) {
    std::ostringstream out;
    for (const auto &d : diffs) {
        out << "    " << registry.ket(d.config) << ": expected " << d.expected << ", got " << d.actual << "\n";
    }
    return out.str();
}

DivergenceReport compare_variants(const reference::ReturnScenario &scenario) {
    PauliOp bob = scenario.travel == ModeId::B ? scenario.op : PauliOp::I;
    PauliOp charlie = scenario.travel == ModeId::C ? scenario.op : PauliOp::I;
    QuantumState table = attacked_round(attack_tables(scenario.travel, AttackVariant::table), bob, charlie);
    QuantumState gates = attacked_round(attack_tables(scenario.travel, AttackVariant::gate_sequence), bob, charlie);

    DivergenceReport report;
    report.scenario = scenario.name;
    report.diffs = diff_states(table, gates);

    const ModeRegistry &registry = table.registry();
    size_t t = registry.index_of(scenario.travel);
    size_t x = registry.index_of(ModeId::x);
    std::vector<bool> used(report.diffs.size(), false);
    for (size_t i = 0; i < report.diffs.size(); ++i) {
        const TermDiff &b = report.diffs[i];
        if (used[i] || b.expected.is_zero() || !b.actual.is_zero()) {
            continue;
        }
        bool bunched = (b.config[t] == kPair01 && b.config[x].is_vacuum()) ||
                       (b.config[x] == kPair01 && b.config[t].is_vacuum());
        if (!bunched) {
            continue;
        }
        for (size_t j = 0; j < report.diffs.size(); ++j) {
            const TermDiff &s = report.diffs[j];
            if (used[j] || !s.expected.is_zero() || s.actual != b.expected) {
                continue;
            }
            bool same_elsewhere = true;
            for (size_t k = 0; k < registry.size(); ++k) {
                if (k != t && k != x && s.config[k] != b.config[k]) {
                    same_elsewhere = false;
                }
            }
            if (same_elsewhere && is_split_pair(s.config[t], s.config[x])) {
                report.pairs.push_back({b.config, s.config, b.expected});
                used[i] = used[j] = true;
                break;
            }
        }
    }
    report.only_bunching = std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    return report;
}

QuantumState attacked_round(const AttackTables &tables, PauliOp bob, PauliOp charlie, GhzIndex initial) {
    QuantumState state = ghz(initial, ModeRegistry::protocol(true));
    state = apply(tables.forward, state);
    state = encoded(state, bob, charlie);
    return apply(tables.backward, state);
}

}  // namespace pingpong
