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

#include "pingpong/protocol.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace pingpong {

namespace {

const std::vector<ModeId> kAliceModes{ModeId::A, ModeId::B, ModeId::C};
const std::vector<ModeId> kEveModes{ModeId::x, ModeId::y};

struct AliceClass {
    OutcomeKind kind;
    std::optional<ModeId> mode;
};

// Two photons in a mode outranks an empty mode.
AliceClass classify(const FockConfig &abc) {
    for (size_t k = 0; k < 3; ++k) {
        if (abc[k].total() >= 2) {
            return {OutcomeKind::double_photon, kAliceModes[k]};
        }
    }
    for (size_t k = 0; k < 3; ++k) {
        if (abc[k].is_vacuum()) {
            return {OutcomeKind::loss, kAliceModes[k]};
        }
    }
    return {OutcomeKind::decoded, std::nullopt};
}

std::string z_pattern(const FockConfig &abc) {
    std::string out;
    for (const auto &occ : abc) {
        out += occ == kPol1 ? '1' : '0';
    }
    return out;
}

class OutcomeAccumulator {
   public:
    void add(RoundOutcome outcome, const ExactReal &p) {
        if (p.is_zero()) {
            return;
        }
        std::string key = outcome.label();
        auto it = outcomes_.find(key);
        if (it == outcomes_.end()) {
            outcome.exact_probability = p;
            outcomes_.emplace(std::move(key), std::move(outcome));
        } else {
            it->second.exact_probability += p;
        }
    }

    OutcomeDistribution finish(const ExactReal &expected_total) && {
        OutcomeDistribution out;
        ExactReal total;
        for (auto &[key, outcome] : outcomes_) {
            total += outcome.exact_probability;
            out.push_back(std::move(outcome));
        }
        if (total != expected_total) {
            throw std::logic_error("round enumeration lost probability: total " + total.to_string());
        }
        return out;
    }

   private:
    std::map<std::string, RoundOutcome> outcomes_;
};

RoundOutcome decoded_outcome(const CodeBook &book, int index) {
    auto [bob, charlie] = book.decode_measured(index);
    RoundOutcome o;
    o.kind = OutcomeKind::decoded;
    o.bob_bit = bob;
    o.charlie_bits = charlie;
    o.alice_ghz = GhzIndex{index, 1};
    return o;
}

RoundOutcome failure_outcome(const AliceClass &c) {
    RoundOutcome o;
    o.kind = c.kind;
    o.mode = c.mode;
    return o;
}

bool has_eve(const QuantumState &state) {
    return state.registry().contains(ModeId::x);
}

void enumerate_eve_first(const QuantumState &state, const CodeBook &book, OutcomeAccumulator &acc) {
    std::vector<std::pair<std::optional<EveOutcome>, QuantumState>> parts;
    if (has_eve(state)) {
        for (auto &[key, sub] : split_by_occupation(state, kEveModes)) {
            parts.emplace_back(EveOutcome{key[0], key[1]}, sub);
        }
    } else {
        parts.emplace_back(std::nullopt, state);
    }
    for (const auto &[eve, sub] : parts) {
        Amplitudes single;
        for (const auto &[config, amp] : sub.terms()) {
            AliceClass c = classify(config);
            if (c.kind == OutcomeKind::decoded) {
                single.emplace(config, amp);
                continue;
            }
            RoundOutcome o = failure_outcome(c);
            o.eve = eve;
            acc.add(std::move(o), amp * amp);
        }
        QuantumState single_state(sub.registry(), std::move(single));
        for (int i = 1; i <= 8; ++i) {
            RoundOutcome o = decoded_outcome(book, i);
            o.eve = eve;
            acc.add(std::move(o), project(single_state, kAliceModes, ghz({i, 1})).norm2());
        }
    }
}

void add_by_eve(const QuantumState &rest, RoundOutcome base, OutcomeAccumulator &acc) {
    if (!has_eve(rest)) {
        acc.add(std::move(base), rest.norm2());
        return;
    }
    for (const auto &[key, sub] : split_by_occupation(rest, kEveModes)) {
        RoundOutcome o = base;
        o.eve = EveOutcome{key[0], key[1]};
        acc.add(std::move(o), sub.norm2());
    }
}

void enumerate_alice_first(const QuantumState &state, const CodeBook &book, OutcomeAccumulator &acc) {
    for (int i = 1; i <= 8; ++i) {
        add_by_eve(project(state, kAliceModes, ghz({i, 1})), decoded_outcome(book, i), acc);
    }
    for (const auto &[abc, rest] : split_by_occupation(state, kAliceModes)) {
        AliceClass c = classify(abc);
        if (c.kind != OutcomeKind::decoded) {
            add_by_eve(rest, failure_outcome(c), acc);
        }
    }
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string_view round_mode_name(RoundMode mode) {
    return mode == RoundMode::message ? "message" : "control";
}

RoundMode parse_round_mode(std::string_view name) {
    if (name == "message") {
        return RoundMode::message;
    }
    if (name == "control") {
        return RoundMode::control;
    }
    throw ProtocolError("unknown round mode '" + std::string(name) + "'");
}

std::string_view eve_name(EveTarget eve) {
    switch (eve) {
        case EveTarget::none:
            return "none";
        case EveTarget::on_bob:
            return "on_bob";
        case EveTarget::on_charlie:
            return "on_charlie";
    }
    return "?";
}

EveTarget parse_eve(std::string_view name) {
    if (name == "none") {
        return EveTarget::none;
    }
    if (name == "on_bob" || name == "bob") {
        return EveTarget::on_bob;
    }
    if (name == "on_charlie" || name == "charlie") {
        return EveTarget::on_charlie;
    }
    throw ProtocolError("unknown eavesdropper target '" + std::string(name) + "'");
}

ModeId eve_travel_mode(EveTarget eve) {
    switch (eve) {
        case EveTarget::on_bob:
            return ModeId::B;
        case EveTarget::on_charlie:
            return ModeId::C;
        case EveTarget::none:
            break;
    }
    throw ProtocolError("no eavesdropper, so no intercepted mode");
}

std::string charlie_bits_text(int bits) {
    if (bits < 0 || bits > 3) {
        throw ProtocolError("Charlie's symbol must be in 0..3");
    }
    return std::string{static_cast<char>('0' + (bits >> 1)), static_cast<char>('0' + (bits & 1))};
}

int parse_charlie_bits(std::string_view text) {
    if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
        throw ProtocolError("Charlie's bits must be one of 00, 01, 10, 11 (got '" + std::string(text) + "')");
    }
    return (text[0] - '0') * 2 + (text[1] - '0');
}

RoundMode agree_round_mode(RoundMode bob, RoundMode charlie) {
    if (bob != charlie) {
        throw ProtocolError("Bob and Charlie must agree on the round mode (mixed control/message rounds are not supported)");
    }
    return bob;
}

void ProtocolConfig::validate() const {
    if (initial.index < 1 || initial.index > 8 || (initial.sign != 1 && initial.sign != -1)) {
        throw ProtocolError("initial GHZ index must be in 1..8");
    }
    if (bob_message != 0 && bob_message != 1) {
        throw ProtocolError("Bob's message is one bit");
    }
    if (charlie_message < 0 || charlie_message > 3) {
        throw ProtocolError("Charlie's message is two bits");
    }
}

PauliOp CodeBook::bob_op(int bit) {
    if (bit == 0) {
        return PauliOp::I;
    }
    if (bit == 1) {
        return PauliOp::iY;
    }
    throw ProtocolError("Bob's message is one bit");
}

PauliOp CodeBook::charlie_op(int bits) {
    static constexpr PauliOp kOps[] = {PauliOp::I, PauliOp::X, PauliOp::iY, PauliOp::Z};
    if (bits < 0 || bits > 3) {
        throw ProtocolError("Charlie's message is two bits");
    }
    return kOps[bits];
}

CodeBook::CodeBook(GhzIndex initial) : initial_(initial) {
    QuantumState start = ghz(initial);
    size_t k = 0;
    for (int bob = 0; bob < 2; ++bob) {
        for (int charlie = 0; charlie < 4; ++charlie) {
            QuantumState s = encode(ModeId::C, charlie_op(charlie), encode(ModeId::B, bob_op(bob), start));
            auto id = identify_ghz(s);
            if (!id) {
                throw std::logic_error("encoding left the GHZ basis");
            }
            rows_[k++] = Row{bob, charlie, bob_op(bob), charlie_op(charlie), *id};
        }
    }
    std::set<int> seen;
    for (const auto &row : rows_) {
        seen.insert(row.result.index);
    }
    if (seen.size() != rows_.size()) {
        throw std::logic_error("encodings do not distinguish all messages");
    }
}

std::pair<int, int> CodeBook::decode(GhzIndex outcome) const {
    for (const auto &row : rows_) {
        if (row.result == outcome) {
            return {row.bob, row.charlie};
        }
    }
    throw ProtocolError("GHZ outcome psi" + std::to_string(outcome.index) + " with sign " +
                        (outcome.sign < 0 ? "-" : "+") + " is not produced by any encoding");
}

std::pair<int, int> CodeBook::decode_measured(int index) const {
    for (const auto &row : rows_) {
        if (row.result.index == index) {
            return {row.bob, row.charlie};
        }
    }
    throw ProtocolError("GHZ outcome psi" + std::to_string(index) + " is not in the code book");
}

std::string RoundOutcome::category() const {
    switch (kind) {
        case OutcomeKind::decoded:
            return "decoded(" + std::to_string(bob_bit.value_or(0)) + "," +
                   charlie_bits_text(charlie_bits.value_or(0)) + ")";
        case OutcomeKind::loss:
            return "loss(" + std::string(mode_name(mode.value_or(ModeId::A))) + ")";
        case OutcomeKind::double_photon:
            return "double_photon(" + std::string(mode_name(mode.value_or(ModeId::A))) + ")";
        case OutcomeKind::control_pass:
            return "control_pass";
        case OutcomeKind::control_fail:
            return "control_fail";
        case OutcomeKind::other:
            return "other";
    }
    return "other";
}

std::string RoundOutcome::label() const {
    std::string out = category();
    if (alice_ghz) {
        out += " " + ghz_label(alice_ghz->index);
    }
    if (z_pattern) {
        out += " z=" + *z_pattern;
    }
    if (eve) {
        out += " eve[" + eve->label() + "]";
    }
    return out;
}

QuantumState message_round_state(const ProtocolConfig &cfg) {
    cfg.validate();
    bool with_eve = cfg.eve != EveTarget::none;
    QuantumState state = ghz(cfg.initial, ModeRegistry::protocol(with_eve));
    std::optional<AttackTables> tables;
    if (with_eve) {
        tables = attack_tables(eve_travel_mode(cfg.eve), cfg.attack_variant);
        state = apply(tables->forward, state);
    }
    state = encode(ModeId::B, CodeBook::bob_op(cfg.bob_message), state);
    state = encode(ModeId::C, CodeBook::charlie_op(cfg.charlie_message), state);
    if (tables) {
        state = apply(tables->backward, state);
    }
    return state;
}

QuantumState control_round_state(const ProtocolConfig &cfg) {
    cfg.validate();
    bool with_eve = cfg.eve != EveTarget::none;
    QuantumState state = ghz(cfg.initial, ModeRegistry::protocol(with_eve));
    if (with_eve) {
        state = apply(attack_tables(eve_travel_mode(cfg.eve), cfg.attack_variant).forward, state);
    }
    return state;
}

OutcomeDistribution run_message_round_exact(const ProtocolConfig &cfg, EnumerationOrder order) {
    if (cfg.round_mode != RoundMode::message) {
        throw ProtocolError("run_message_round_exact needs a message round");
    }
    QuantumState state = message_round_state(cfg);
    CodeBook book(cfg.initial);
    OutcomeAccumulator acc;
    if (order == EnumerationOrder::eve_first) {
        enumerate_eve_first(state, book, acc);
    } else {
        enumerate_alice_first(state, book, acc);
    }
    return std::move(acc).finish(state.norm2());
}

OutcomeDistribution run_control_round_exact(const ProtocolConfig &cfg) {
    if (cfg.round_mode != RoundMode::control) {
        throw ProtocolError("run_control_round_exact needs a control round");
    }
    QuantumState state = control_round_state(cfg);
    std::set<std::string> support;
    QuantumState prepared = ghz(cfg.initial);
    for (const auto &[config, amp] : prepared.terms()) {
        support.insert(z_pattern(config));
    }
    OutcomeAccumulator acc;
    for (const auto &[abc, rest] : split_by_occupation(state, kAliceModes)) {
        AliceClass c = classify(abc);
        RoundOutcome o = failure_outcome(c);
        if (c.kind == OutcomeKind::decoded) {
            o.z_pattern = z_pattern(abc);
            o.kind = support.contains(*o.z_pattern) ? OutcomeKind::control_pass : OutcomeKind::control_fail;
        }
        add_by_eve(rest, std::move(o), acc);
    }
    return std::move(acc).finish(state.norm2());
}

OutcomeDistribution run_round_exact(const ProtocolConfig &cfg) {
    return cfg.round_mode == RoundMode::message ? run_message_round_exact(cfg) : run_control_round_exact(cfg);
}

std::vector<std::pair<std::string, ExactReal>> by_category(const OutcomeDistribution &distribution) {
    std::map<std::string, ExactReal> sums;
    for (const auto &o : distribution) {
        sums[o.category()] += o.exact_probability;
    }
    return {sums.begin(), sums.end()};
}

uint64_t trial_seed(uint64_t seed, uint64_t trial) {
    return splitmix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

RoundSampler::RoundSampler(OutcomeDistribution distribution) : distribution_(std::move(distribution)) {
    if (distribution_.empty()) {
        throw std::invalid_argument("RoundSampler: empty distribution");
    }
    double acc = 0;
    for (const auto &o : distribution_) {
        acc += to_float(o.exact_probability);
        cdf_.push_back(acc);
    }
}

size_t RoundSampler::draw_index(uint64_t seed) const {
    std::mt19937_64 rng(seed);
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    for (size_t i = 0; i < cdf_.size(); ++i) {
        if (u < cdf_[i]) {
            return i;
        }
    }
    // Rounding left the last cumulative weight just under 1.
    size_t last = cdf_.size() - 1;
    while (last > 0 && distribution_[last].exact_probability.is_zero()) {
        --last;
    }
    return last;
}

RoundOutcome sample_round(const ProtocolConfig &cfg, uint64_t rng_seed) {
    return RoundSampler(run_round_exact(cfg)).draw(rng_seed);
}

}  // namespace pingpong
