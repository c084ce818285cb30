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

#ifndef PINGPONG_PROTOCOL_H
#define PINGPONG_PROTOCOL_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pingpong/attack.h"
#include "pingpong/gates.h"

namespace pingpong {

enum class RoundMode { message, control };
enum class EveTarget { none, on_bob, on_charlie };

std::string_view round_mode_name(RoundMode mode);
RoundMode parse_round_mode(std::string_view name);
std::string_view eve_name(EveTarget eve);
/// Accepts "none", "on_bob", "on_charlie" and the short forms "bob", "charlie".
EveTarget parse_eve(std::string_view name);
/// Mode the eavesdropper intercepts; throws for EveTarget::none.
ModeId eve_travel_mode(EveTarget eve);

/// Two-bit string for Charlie's symbol, e.g. 2 -> "10".
std::string charlie_bits_text(int bits);
int parse_charlie_bits(std::string_view text);

class ProtocolError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Bob and Charlie must pick the same round mode; mixed rounds are rejected.
RoundMode agree_round_mode(RoundMode bob, RoundMode charlie);

struct ProtocolConfig {
    GhzIndex initial{5, 1};
    int bob_message = 0;      // one bit
    int charlie_message = 0;  // two bits, 0..3 for "00".."11"
    RoundMode round_mode = RoundMode::message;
    EveTarget eve = EveTarget::none;
    AttackVariant attack_variant = AttackVariant::table;

    /// Throws ProtocolError on out-of-range fields.
    void validate() const;
};

/// Symbol-to-operation assignment and its inverse on a given initial state.
class CodeBook {
   public:
    struct Row {
        int bob;
        int charlie;
        PauliOp bob_op;
        PauliOp charlie_op;
        GhzIndex result;  // including the global sign of the encoded state
    };

    static PauliOp bob_op(int bit);        // 0 -> I, 1 -> iY
    static PauliOp charlie_op(int bits);   // 00 -> I, 01 -> X, 10 -> iY, 11 -> Z

    /// Encodes every message pair on ghz(initial) and records the result.
    explicit CodeBook(GhzIndex initial = GhzIndex{5, 1});

    const std::array<Row, 8> &rows() const {
        return rows_;
    }
    GhzIndex initial() const {
        return initial_;
    }

    /// Strict inverse of the encoding: the (index, sign) pair must be one of
    /// the eight rows. Throws ProtocolError otherwise.
    std::pair<int, int> decode(GhzIndex outcome) const;

    /// Decoding of a measured GHZ label. A global sign is unobservable, so
    /// only the index matters here.
    std::pair<int, int> decode_measured(int index) const;

   private:
    GhzIndex initial_;
    std::array<Row, 8> rows_{};
};

enum class OutcomeKind { decoded, loss, double_photon, control_pass, control_fail, other };

/// One branch of a round. `exact_probability` is the branch weight when the
/// outcome comes from an exact enumeration.
struct RoundOutcome {
    OutcomeKind kind = OutcomeKind::other;
    std::optional<int> bob_bit;
    std::optional<int> charlie_bits;
    std::optional<ModeId> mode;
    std::optional<GhzIndex> alice_ghz;
    std::optional<std::string> z_pattern;
    std::optional<EveOutcome> eve;
    ExactReal exact_probability;

    /// Alice-side category: "decoded(1,11)", "loss(B)", "double_photon(C)",
    /// "control_pass", "control_fail" or "other".
    std::string category() const;
    /// Category plus GHZ label, Z pattern and Eve readout where present.
    std::string label() const;
};

using OutcomeDistribution = std::vector<RoundOutcome>;

/// Alice-then-Eve and Eve-then-Alice enumerations give identical results;
/// both are kept so tests can check it.
enum class EnumerationOrder { eve_first, alice_first };

/// State handed to Alice's measurement at the end of a message round.
QuantumState message_round_state(const ProtocolConfig &cfg);
/// State measured in a control round (after the outbound attack, if any).
QuantumState control_round_state(const ProtocolConfig &cfg);

/// Exact joint distribution of Alice's GHZ-or-failure outcome and Eve's
/// readout. Probabilities are rational and sum to exactly 1.
OutcomeDistribution run_message_round_exact(const ProtocolConfig &cfg,
                                            EnumerationOrder order = EnumerationOrder::eve_first);

/// Exact distribution of a control round: Z readout of A, B, C.
OutcomeDistribution run_control_round_exact(const ProtocolConfig &cfg);

/// Dispatches on cfg.round_mode.
OutcomeDistribution run_round_exact(const ProtocolConfig &cfg);

/// Sums outcome probabilities by category().
std::vector<std::pair<std::string, ExactReal>> by_category(const OutcomeDistribution &distribution);

/// Seed of trial `trial` in a run seeded with `seed` (splitmix64 counter scheme).
uint64_t trial_seed(uint64_t seed, uint64_t trial);

/// Inverse-CDF sampler over an exact distribution (using double weights).
class RoundSampler {
   public:
    explicit RoundSampler(OutcomeDistribution distribution);

    const OutcomeDistribution &distribution() const {
        return distribution_;
    }
    /// Index into distribution() of the outcome drawn with this seed.
    size_t draw_index(uint64_t seed) const;
    const RoundOutcome &draw(uint64_t seed) const {
        return distribution_[draw_index(seed)];
    }

   private:
    OutcomeDistribution distribution_;
    std::vector<double> cdf_;
};

/// One draw from the exact distribution of `cfg`. Deterministic in the seed.
RoundOutcome sample_round(const ProtocolConfig &cfg, uint64_t rng_seed);

}  // namespace pingpong

#endif
