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

#include "pingpong/fock.h"

#include <algorithm>
#include <set>

namespace pingpong {

std::string_view mode_name(ModeId mode) {
    switch (mode) {
        case ModeId::A:
            return "A";
        case ModeId::B:
            return "B";
        case ModeId::C:
            return "C";
        case ModeId::x:
            return "x";
        case ModeId::y:
            return "y";
    }
    return "?";
}

ModeId parse_mode(std::string_view name) {
    for (ModeId m : {ModeId::A, ModeId::B, ModeId::C, ModeId::x, ModeId::y}) {
        if (mode_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::string ModeOccupation::label() const {
    if (is_vacuum()) {
        return "vac";
    }
    std::string out;
    for (int i = 0; i < n0; ++i) {
        out += out.empty() ? "0" : ",0";
    }
    for (int i = 0; i < n1; ++i) {
        out += out.empty() ? "1" : ",1";
    }
    return out;
}

int photon_number(const FockConfig &config) {
    int n = 0;
    for (const auto &occ : config) {
        n += occ.total();
    }
    return n;
}

ModeRegistry::ModeRegistry(std::vector<ModeId> modes, int cap) : modes_(std::move(modes)), cap_(cap) {
    std::set<ModeId> seen(modes_.begin(), modes_.end());
    if (seen.size() != modes_.size()) {
        throw std::invalid_argument("ModeRegistry: duplicate mode");
    }
    if (cap_ < 1) {
        throw std::invalid_argument("ModeRegistry: cap must be positive");
    }
}

ModeRegistry ModeRegistry::protocol(bool with_eve) {
    if (with_eve) {
        return ModeRegistry({ModeId::A, ModeId::B, ModeId::C, ModeId::x, ModeId::y});
    }
    return ModeRegistry({ModeId::A, ModeId::B, ModeId::C});
}

bool ModeRegistry::contains(ModeId mode) const {
    return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

size_t ModeRegistry::index_of(ModeId mode) const {
    auto it = std::find(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end()) {
        throw std::invalid_argument("mode " + std::string(mode_name(mode)) + " is not registered");
    }
    return static_cast<size_t>(it - modes_.begin());
}

std::vector<FockConfig> ModeRegistry::all_configs() const {
    std::vector<ModeOccupation> per_mode;
    for (int total = 0; total <= cap_; ++total) {
        for (int n1 = 0; n1 <= total; ++n1) {
            per_mode.push_back({static_cast<uint8_t>(total - n1), static_cast<uint8_t>(n1)});
        }
    }
    std::vector<FockConfig> out{FockConfig{}};
    for (size_t k = 0; k < modes_.size(); ++k) {
        std::vector<FockConfig> next;
        for (const auto &prefix : out) {
            for (const auto &occ : per_mode) {
                auto c = prefix;
                c.push_back(occ);
                next.push_back(std::move(c));
            }
        }
        out = std::move(next);
    }
    return out;
}

bool ModeRegistry::within_cap(const FockConfig &config) const {
    if (config.size() != modes_.size()) {
        return false;
    }
    return std::all_of(config.begin(), config.end(), [&](const ModeOccupation &o) { return o.total() <= cap_; });
}

std::string ModeRegistry::ket(const FockConfig &config) const {
    std::string out;
    for (size_t k = 0; k < config.size() && k < modes_.size(); ++k) {
        out += "|" + config[k].label() + "⟩_" + std::string(mode_name(modes_[k]));
    }
    return out.empty() ? "|⟩" : out;
}

DomainError::DomainError(const std::string &map_name, std::string ket)
    : std::invalid_argument("configuration " + ket + " is outside the domain of " + map_name), ket_(std::move(ket)) {
}

QuantumState::QuantumState(ModeRegistry registry, Amplitudes terms) : registry_(std::move(registry)) {
    for (auto &[config, amp] : terms) {
        if (!registry_.within_cap(config)) {
            throw std::invalid_argument("QuantumState: configuration " + registry_.ket(config) +
                                        " does not fit the registry (cap " + std::to_string(registry_.cap()) + ")");
        }
        if (!amp.is_zero()) {
            terms_.emplace(config, std::move(amp));
        }
    }
}

ExactReal QuantumState::amplitude(const FockConfig &config) const {
    auto it = terms_.find(config);
    return it == terms_.end() ? ExactReal() : it->second;
}

ExactReal QuantumState::norm2() const {
    return pingpong::norm2(terms_);
}

std::optional<int> QuantumState::photon_number() const {
    std::optional<int> n;
    for (const auto &[config, amp] : terms_) {
        int k = pingpong::photon_number(config);
        if (n && *n != k) {
            return std::nullopt;
        }
        n = k;
    }
    return n;
}

QuantumState QuantumState::scaled(const ExactReal &factor) const {
    Amplitudes out;
    for (const auto &[config, amp] : terms_) {
        out.emplace(config, amp * factor);
    }
    return QuantumState(registry_, std::move(out));
}

std::string QuantumState::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[config, amp] : terms_) {
        bool negative = amp.sign() < 0;
        ExactReal mag = negative ? -amp : amp;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != ExactReal(1)) {
            out += "(" + mag.to_string() + ")";
        }
        out += registry_.ket(config);
    }
    return out;
}

QuantumState basis_state(const ModeRegistry &registry, const std::vector<std::pair<ModeId, ModeOccupation>> &assignment) {
    FockConfig config(registry.size());
    std::vector<bool> assigned(registry.size(), false);
    for (const auto &[mode, occ] : assignment) {
        size_t k = registry.index_of(mode);
        if (assigned[k]) {
            throw std::invalid_argument("basis_state: mode " + std::string(mode_name(mode)) + " assigned twice");
        }
        if (occ.total() > registry.cap()) {
            throw std::invalid_argument("basis_state: occupation " + occ.label() + " of mode " +
                                        std::string(mode_name(mode)) + " exceeds cap " + std::to_string(registry.cap()));
        }
        assigned[k] = true;
        config[k] = occ;
    }
    for (size_t k = 0; k < assigned.size(); ++k) {
        if (!assigned[k]) {
            throw std::invalid_argument("basis_state: mode " + std::string(mode_name(registry.modes()[k])) +
                                        " not assigned");
        }
    }
    return QuantumState(registry, Amplitudes{{config, ExactReal(1)}});
}

QuantumState superpose(const std::vector<std::pair<ExactReal, QuantumState>> &parts) {
    if (parts.empty()) {
        throw std::invalid_argument("superpose: no parts");
    }
    const ModeRegistry &registry = parts.front().second.registry();
    Amplitudes acc;
    for (const auto &[weight, part] : parts) {
        if (!(part.registry() == registry)) {
            throw std::invalid_argument("superpose: registry mismatch");
        }
        for (const auto &[config, amp] : part.terms()) {
            acc[config] += weight * amp;
        }
    }
    return QuantumState(registry, std::move(acc));
}

QuantumState tensor(const QuantumState &a, const QuantumState &b) {
    std::vector<ModeId> modes = a.registry().modes();
    modes.insert(modes.end(), b.registry().modes().begin(), b.registry().modes().end());
    ModeRegistry registry(std::move(modes), std::max(a.registry().cap(), b.registry().cap()));
    Amplitudes out;
    for (const auto &[ca, xa] : a.terms()) {
        for (const auto &[cb, xb] : b.terms()) {
            FockConfig c = ca;
            c.insert(c.end(), cb.begin(), cb.end());
            out.emplace(std::move(c), xa * xb);
        }
    }
    return QuantumState(std::move(registry), std::move(out));
}

ExactReal inner(const QuantumState &a, const QuantumState &b) {
    if (!(a.registry() == b.registry())) {
        throw std::invalid_argument("inner: registry mismatch");
    }
    return dot(a.terms(), b.terms());
}

ExactReal norm2(const Amplitudes &v) {
    ExactReal total;
    for (const auto &[config, amp] : v) {
        total += amp * amp;
    }
    return total;
}

ExactReal dot(const Amplitudes &a, const Amplitudes &b) {
    const Amplitudes &small = a.size() <= b.size() ? a : b;
    const Amplitudes &large = a.size() <= b.size() ? b : a;
    ExactReal total;
    for (const auto &[config, amp] : small) {
        auto it = large.find(config);
        if (it != large.end()) {
            total += amp * it->second;
        }
    }
    return total;
}

bool is_orthonormal(const std::vector<Amplitudes> &vectors) {
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (size_t j = i; j < vectors.size(); ++j) {
            if (dot(vectors[i], vectors[j]) != ExactReal(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

FockConfig restrict_config(const FockConfig &config, const std::vector<size_t> &positions) {
    FockConfig out;
    out.reserve(positions.size());
    for (size_t k : positions) {
        out.push_back(config[k]);
    }
    return out;
}

LinearMap::LinearMap(std::string name, std::vector<ModeId> modes, std::map<FockConfig, Amplitudes> rows, int cap)
    : name_(std::move(name)), modes_(std::move(modes)), cap_(cap) {
    ModeRegistry check(modes_, cap_);
    for (auto &[input, output] : rows) {
        if (!check.within_cap(input)) {
            throw std::invalid_argument("LinearMap " + name_ + ": bad input configuration " + check.ket(input));
        }
        Amplitudes cleaned;
        for (auto &[config, amp] : output) {
            if (!check.within_cap(config)) {
                throw std::invalid_argument("LinearMap " + name_ + ": output " + check.ket(config) + " exceeds cap");
            }
            if (!amp.is_zero()) {
                cleaned.emplace(config, std::move(amp));
            }
        }
        rows_.emplace(input, std::move(cleaned));
    }
}

bool LinearMap::is_isometry() const {
    std::vector<Amplitudes> outputs;
    outputs.reserve(rows_.size());
    for (const auto &[input, output] : rows_) {
        outputs.push_back(output);
    }
    return is_orthonormal(outputs);
}

bool LinearMap::preserves_photon_number() const {
    for (const auto &[input, output] : rows_) {
        int n = photon_number(input);
        for (const auto &[config, amp] : output) {
            if (photon_number(config) != n) {
                return false;
            }
        }
    }
    return true;
}

LinearMap LinearMap::relabelled(std::string name, std::vector<ModeId> modes) const {
    if (modes.size() != modes_.size()) {
        throw std::invalid_argument("LinearMap::relabelled: arity mismatch");
    }
    return LinearMap(std::move(name), std::move(modes), rows_, cap_);
}

QuantumState apply(const LinearMap &map, const QuantumState &state) {
    const ModeRegistry &registry = state.registry();
    std::vector<size_t> positions;
    for (ModeId m : map.modes()) {
        positions.push_back(registry.index_of(m));
    }
    ModeRegistry local(map.modes(), map.cap());
    Amplitudes out;
    for (const auto &[config, amp] : state.terms()) {
        FockConfig key = restrict_config(config, positions);
        auto row = map.rows().find(key);
        if (row == map.rows().end()) {
            throw DomainError(map.name(), local.ket(key) + " (in " + registry.ket(config) + ")");
        }
        for (const auto &[image, coeff] : row->second) {
            FockConfig next = config;
            for (size_t k = 0; k < positions.size(); ++k) {
                next[positions[k]] = image[k];
            }
            out[next] += amp * coeff;
        }
    }
    return QuantumState(registry, std::move(out));
}

QuantumState apply_all(const std::vector<LinearMap> &maps, const QuantumState &state) {
    QuantumState current = state;
    for (const auto &m : maps) {
        current = apply(m, current);
    }
    return current;
}

namespace {

struct ModeSplit {
    std::vector<size_t> measured;
    std::vector<size_t> rest;
    ModeRegistry rest_registry;
};

ModeSplit split_modes(const ModeRegistry &registry, const std::vector<ModeId> &modes) {
    ModeSplit split;
    for (ModeId m : modes) {
        split.measured.push_back(registry.index_of(m));
    }
    std::vector<ModeId> rest_modes;
    for (size_t k = 0; k < registry.size(); ++k) {
        if (std::find(split.measured.begin(), split.measured.end(), k) == split.measured.end()) {
            split.rest.push_back(k);
            rest_modes.push_back(registry.modes()[k]);
        }
    }
    split.rest_registry = ModeRegistry(std::move(rest_modes), registry.cap());
    return split;
}

void check_outcome_modes(const QuantumState &outcome, const std::vector<ModeId> &modes) {
    if (outcome.registry().modes() != modes) {
        throw std::invalid_argument("measurement basis state is not defined on the measured modes");
    }
}

}  // namespace

QuantumState project(const QuantumState &state, const std::vector<ModeId> &modes, const QuantumState &outcome) {
    check_outcome_modes(outcome, modes);
    ModeSplit split = split_modes(state.registry(), modes);
    Amplitudes out;
    for (const auto &[config, amp] : state.terms()) {
        ExactReal overlap = outcome.amplitude(restrict_config(config, split.measured));
        if (!overlap.is_zero()) {
            out[restrict_config(config, split.rest)] += overlap * amp;
        }
    }
    return QuantumState(split.rest_registry, std::move(out));
}

Distribution measure_distribution(const QuantumState &state, const std::vector<ModeId> &modes,
                                  const std::vector<LabeledState> &outcome_basis) {
    std::vector<Amplitudes> vectors;
    for (const auto &[label, basis_state] : outcome_basis) {
        check_outcome_modes(basis_state, modes);
        if (label == kOtherLabel) {
            throw std::invalid_argument("measurement label 'other' is reserved");
        }
        vectors.push_back(basis_state.terms());
    }
    if (!is_orthonormal(vectors)) {
        throw std::invalid_argument("measurement basis is not orthonormal");
    }
    Distribution out;
    ExactReal spanned;
    for (const auto &[label, basis_state] : outcome_basis) {
        ExactReal p = project(state, modes, basis_state).norm2();
        spanned += p;
        out.emplace_back(label, std::move(p));
    }
    out.emplace_back(std::string(kOtherLabel), state.norm2() - spanned);
    return out;
}

std::map<FockConfig, QuantumState> split_by_occupation(const QuantumState &state, const std::vector<ModeId> &modes) {
    ModeSplit split = split_modes(state.registry(), modes);
    std::map<FockConfig, Amplitudes> parts;
    for (const auto &[config, amp] : state.terms()) {
        parts[restrict_config(config, split.measured)].emplace(restrict_config(config, split.rest), amp);
    }
    std::map<FockConfig, QuantumState> out;
    for (auto &[key, terms] : parts) {
        out.emplace(key, QuantumState(split.rest_registry, std::move(terms)));
    }
    return out;
}

}  // namespace pingpong
