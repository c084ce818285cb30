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

#include "pingpong/reference_states.h"

#include <string_view>

namespace pingpong::reference {

namespace {

ModeOccupation token(std::string_view t) {
    if (t == "vac") {
        return kVac;
    }
    if (t == "0") {
        return kPol0;
    }
    if (t == "1") {
        return kPol1;
    }
    if (t == "01" || t == "10") {
        return kPair01;
    }
    throw std::invalid_argument("unknown occupation token '" + std::string(t) + "'");
}

const ExactReal kHalf = ExactReal::fraction(1, 2);
// 1/(2 sqrt 2) == sqrt(2)/4
const ExactReal kQuarterRoot2 = ExactReal::sqrt2_times(1, 4);
const ExactReal kInvRoot2 = ExactReal::inv_sqrt2();

}  // namespace

QuantumState ket(const char *a, const char *b, const char *c, const char *x, const char *y) {
    return basis_state(ModeRegistry::protocol(true), {{ModeId::A, token(a)},
                                                      {ModeId::B, token(b)},
                                                      {ModeId::C, token(c)},
                                                      {ModeId::x, token(x)},
                                                      {ModeId::y, token(y)}});
}

QuantumState forward(ModeId travel) {
    const ExactReal &h = kHalf;
    if (travel == ModeId::B) {
        return superpose({
            {h, ket("0", "vac", "0", "1", "0")},
            {h, ket("0", "1", "0", "1", "vac")},
            {h, ket("1", "0", "1", "vac", "1")},
            {h, ket("1", "0", "1", "0", "vac")},
        });
    }
    if (travel == ModeId::C) {
        return superpose({
            {h, ket("0", "1", "0", "vac", "1")},
            {h, ket("0", "1", "0", "0", "vac")},
            {h, ket("1", "0", "vac", "1", "0")},
            {h, ket("1", "0", "1", "1", "vac")},
        });
    }
    throw std::invalid_argument("forward: travel mode must be B or C");
}

std::optional<QuantumState> after_return(ModeId travel, PauliOp op) {
    const ExactReal &h = kHalf;
    const ExactReal &r = kQuarterRoot2;
    QuantumState unchanged =
        superpose({{kInvRoot2, ket("0", "1", "0", "vac", "0")}, {kInvRoot2, ket("1", "0", "1", "vac", "0")}});
    if (travel == ModeId::B) {
        switch (op) {
            case PauliOp::I:
                return unchanged;
            case PauliOp::iY:
                return superpose({
                    {r, ket("0", "1", "0", "vac", "0")},
                    {r, ket("0", "1", "0", "vac", "1")},
                    {h, ket("0", "vac", "0", "01", "vac")},
                    {-r, ket("1", "vac", "1", "1", "0")},
                    {r, ket("1", "vac", "1", "1", "1")},
                    {-h, ket("1", "01", "1", "vac", "vac")},
                });
            default:
                return std::nullopt;
        }
    }
    if (travel == ModeId::C) {
        switch (op) {
            case PauliOp::I:
                return unchanged;
            case PauliOp::X:
                return superpose({
                    {r, ket("0", "1", "vac", "1", "0")},
                    {-r, ket("0", "1", "vac", "1", "1")},
                    {h, ket("0", "1", "01", "vac", "vac")},
                    {r, ket("1", "0", "1", "vac", "0")},
                    {r, ket("1", "0", "1", "vac", "1")},
                    {h, ket("1", "0", "vac", "01", "vac")},
                });
            case PauliOp::iY:
                return superpose({
                    {-r, ket("0", "1", "vac", "1", "0")},
                    {r, ket("0", "1", "vac", "1", "1")},
                    {-h, ket("0", "1", "01", "vac", "vac")},
                    {r, ket("1", "0", "1", "vac", "0")},
                    {r, ket("1", "0", "1", "vac", "1")},
                    {h, ket("1", "0", "vac", "10", "vac")},
                });
            case PauliOp::Z:
                return superpose({
                    {kInvRoot2, ket("0", "1", "0", "vac", "0")},
                    {kInvRoot2, ket("1", "0", "1", "vac", "1")},
                });
        }
    }
    throw std::invalid_argument("after_return: travel mode must be B or C");
}

std::vector<ReturnScenario> return_scenarios() {
    std::vector<ReturnScenario> out;
    for (PauliOp op : {PauliOp::I, PauliOp::iY}) {
        out.push_back({"bob/" + std::string(pauli_name(op)), ModeId::B, op, *after_return(ModeId::B, op)});
    }
    for (PauliOp op : kAllPaulis) {
        out.push_back({"charlie/" + std::string(pauli_name(op)), ModeId::C, op, *after_return(ModeId::C, op)});
    }
    return out;
}

std::vector<EncodingEntry> encoding_table() {
    using P = PauliOp;
    // sign * (|first> + relative * |second>) / sqrt 2 on (A, B, C)
    auto printed = [](int sign, const char *first, int relative, const char *second) {
        ModeRegistry abc = ModeRegistry::protocol(false);
        auto bits = [&](const char *s) {
            std::vector<std::pair<ModeId, ModeOccupation>> out;
            for (int k = 0; k < 3; ++k) {
                out.emplace_back(abc.modes()[k], s[k] == '1' ? kPol1 : kPol0);
            }
            return basis_state(abc, out);
        };
        ExactReal r = ExactReal::inv_sqrt2() * ExactReal(sign);
        return superpose({{r, bits(first)}, {r * ExactReal(relative), bits(second)}});
    };
    return {
        {P::I, P::I, {5, 1}, printed(1, "010", 1, "101")},
        {P::I, P::X, {3, 1}, printed(1, "100", 1, "011")},
        {P::I, P::iY, {4, 1}, printed(1, "100", -1, "011")},
        {P::I, P::Z, {6, 1}, printed(1, "010", -1, "101")},
        {P::iY, P::I, {2, 1}, printed(1, "000", -1, "111")},
        {P::iY, P::X, {8, -1}, printed(-1, "110", -1, "001")},
        {P::iY, P::iY, {7, -1}, printed(-1, "110", 1, "001")},
        {P::iY, P::Z, {1, 1}, printed(1, "000", 1, "111")},
    };
}

}  // namespace pingpong::reference
