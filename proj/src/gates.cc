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

#include "pingpong/gates.h"

#include <array>
#include <functional>

namespace pingpong {

namespace {

struct GhzRow {
    std::array<int, 3> first;
    std::array<int, 3> second;
    int relative_sign;
};

// |psi_i> = (|first> + relative_sign |second>) / sqrt(2), bits ordered A, B, C.
constexpr std::array<GhzRow, 8> kGhzRows{{
    {{0, 0, 0}, {1, 1, 1}, +1},
    {{0, 0, 0}, {1, 1, 1}, -1},
    {{1, 0, 0}, {0, 1, 1}, +1},
    {{1, 0, 0}, {0, 1, 1}, -1},
    {{0, 1, 0}, {1, 0, 1}, +1},
    {{0, 1, 0}, {1, 0, 1}, -1},
    {{1, 1, 0}, {0, 0, 1}, +1},
    {{1, 1, 0}, {0, 0, 1}, -1},
}};

ModeOccupation bit(int b) {
    return b ? kPol1 : kPol0;
}

using RowRule = std::function<std::optional<Amplitudes>(const FockConfig &)>;

// Builds a map over every configuration of `modes` within the cap; inputs for
// which `rule` returns nullopt are left out of the domain.
LinearMap build_map(std::string name, std::vector<ModeId> modes, const RowRule &rule) {
    ModeRegistry local(modes);
    std::map<FockConfig, Amplitudes> rows;
    for (const auto &config : local.all_configs()) {
        auto out = rule(config);
        if (!out) {
            continue;
        }
        bool fits = true;
        for (const auto &[image, amp] : *out) {
            fits = fits && local.within_cap(image);
        }
        if (fits) {
            rows.emplace(config, std::move(*out));
        }
    }
    return LinearMap(std::move(name), std::move(modes), std::move(rows));
}

std::string gate_name(std::string_view gate, std::initializer_list<ModeId> modes) {
    std::string out(gate);
    out += "_";
    for (ModeId m : modes) {
        out += mode_name(m);
    }
    return out;
}

}  // namespace

std::string_view pauli_name(PauliOp op) {
    switch (op) {
        case PauliOp::I:
            return "I";
        case PauliOp::X:
            return "X";
        case PauliOp::iY:
            return "iY";
        case PauliOp::Z:
            return "Z";
    }
    return "?";
}

PauliOp parse_pauli(std::string_view name) {
    for (PauliOp op : kAllPaulis) {
        if (pauli_name(op) == name) {
            return op;
        }
    }
    throw std::invalid_argument("unknown Pauli operation '" + std::string(name) + "'");
}

std::pair<ModeOccupation, int> pauli_on_occupation(PauliOp op, ModeOccupation occ) {
    ModeOccupation flipped{occ.n1, occ.n0};
    switch (op) {
        case PauliOp::I:
            return {occ, 1};
        case PauliOp::X:
            return {flipped, 1};
        case PauliOp::iY:
            // |0> -> -|1>, |1> -> |0>: one factor -1 per polarization-0 photon.
            return {flipped, occ.n0 % 2 ? -1 : 1};
        case PauliOp::Z:
            return {occ, occ.n1 % 2 ? -1 : 1};
    }
    return {occ, 1};
}

std::string ghz_label(int index) {
    return "psi" + std::to_string(index);
}

QuantumState ghz(GhzIndex index, const ModeRegistry &registry) {
    if (index.index < 1 || index.index > 8) {
        throw std::out_of_range("ghz: index " + std::to_string(index.index) + " is not in 1..8");
    }
    if (index.sign != 1 && index.sign != -1) {
        throw std::invalid_argument("ghz: sign must be +1 or -1");
    }
    const GhzRow &row = kGhzRows[index.index - 1];
    bool with_eve = registry.contains(ModeId::x) || registry.contains(ModeId::y);
    auto ket = [&](const std::array<int, 3> &bits) {
        std::vector<std::pair<ModeId, ModeOccupation>> a{
            {ModeId::A, bit(bits[0])}, {ModeId::B, bit(bits[1])}, {ModeId::C, bit(bits[2])}};
        if (with_eve) {
            a.emplace_back(ModeId::x, kVac);
            a.emplace_back(ModeId::y, kPol0);
        }
        return basis_state(registry, a);
    };
    ExactReal amp = ExactReal::inv_sqrt2() * ExactReal(index.sign);
    return superpose({{amp, ket(row.first)}, {amp * ExactReal(row.relative_sign), ket(row.second)}});
}

std::optional<GhzIndex> identify_ghz(const QuantumState &state) {
    if (state.registry().modes() != ModeRegistry::protocol(false).modes()) {
        return std::nullopt;
    }
    for (int i = 1; i <= 8; ++i) {
        for (int sign : {1, -1}) {
            if (state == ghz({i, sign}, state.registry())) {
                return GhzIndex{i, sign};
            }
        }
    }
    return std::nullopt;
}

std::vector<LabeledState> ghz_basis() {
    std::vector<LabeledState> out;
    for (int i = 1; i <= 8; ++i) {
        out.emplace_back(ghz_label(i), ghz({i, 1}));
    }
    return out;
}

QuantumState encode(ModeId mode, PauliOp op, const QuantumState &state) {
    size_t k = state.registry().index_of(mode);
    Amplitudes out;
    for (const auto &[config, amp] : state.terms()) {
        auto [occ, sign] = pauli_on_occupation(op, config[k]);
        FockConfig next = config;
        next[k] = occ;
        out[next] += sign < 0 ? -amp : amp;
    }
    return QuantumState(state.registry(), std::move(out));
}

LinearMap hadamard(ModeId mode) {
    return build_map(gate_name("H", {mode}), {mode}, [](const FockConfig &c) -> std::optional<Amplitudes> {
        const ModeOccupation &occ = c[0];
        if (occ.total() > 1) {
            return std::nullopt;
        }
        if (occ.is_vacuum()) {
            return Amplitudes{{c, ExactReal(1)}};
        }
        ExactReal r = ExactReal::inv_sqrt2();
        return Amplitudes{{{kPol0}, r}, {{kPol1}, occ == kPol0 ? r : -r}};
    });
}

LinearMap cnot(ModeId control, ModeId target) {
    return build_map(gate_name("N", {control, target}), {control, target},
                     [](const FockConfig &c) -> std::optional<Amplitudes> {
                         if (c[0].total() > 1) {
                             return std::nullopt;
                         }
                         FockConfig out = c;
                         if (c[0] == kPol1) {
                             out[1] = pauli_on_occupation(PauliOp::X, c[1]).first;
                         }
                         return Amplitudes{{out, ExactReal(1)}};
                     });
}

namespace {

// Exchanges the polarization-`pol` photons of two modes. A pure relabelling of
// single-polarization sub-modes, so it never bunches photons of equal
// polarization that were not already together and carries no amplitude factor.
std::pair<ModeOccupation, ModeOccupation> swap_polarization(int pol, ModeOccupation a, ModeOccupation b) {
    if (pol == 0) {
        return {{b.n0, a.n1}, {a.n0, b.n1}};
    }
    return {{a.n0, b.n1}, {b.n0, a.n1}};
}

}  // namespace

LinearMap pbs(ModeId mode1, ModeId mode2) {
    return build_map(gate_name("PBS", {mode1, mode2}), {mode1, mode2},
                     [](const FockConfig &c) -> std::optional<Amplitudes> {
                         auto [m1, m2] = swap_polarization(1, c[0], c[1]);
                         return Amplitudes{{FockConfig{m1, m2}, ExactReal(1)}};
                     });
}

LinearMap cpbs(ModeId control, ModeId mode1, ModeId mode2) {
    return build_map(gate_name("C", {control, mode1, mode2}), {control, mode1, mode2},
                     [](const FockConfig &c) -> std::optional<Amplitudes> {
                         if (c[0].total() > 1) {
                             return std::nullopt;
                         }
                         if (c[0].is_vacuum()) {
                             return Amplitudes{{c, ExactReal(1)}};
                         }
                         auto [m1, m2] = swap_polarization(c[0] == kPol1 ? 1 : 0, c[1], c[2]);
                         return Amplitudes{{FockConfig{c[0], m1, m2}, ExactReal(1)}};
                     });
}

}  // namespace pingpong
