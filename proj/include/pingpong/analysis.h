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

#ifndef PINGPONG_ANALYSIS_H
#define PINGPONG_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pingpong/protocol.h"

namespace pingpong {

using CategoryDistribution = std::vector<std::pair<std::string, ExactReal>>;

/// Exact figures for one message assignment, or an average over several.
struct ChannelRow {
    std::string label;  // "bob=1,charlie=01", "bob=1", "charlie=10" or "uniform"
    ExactReal loss;
    ExactReal double_photon;
    ExactReal decodable;
    CategoryDistribution decode_distribution;  // by RoundOutcome::category()
    CategoryDistribution eve_distribution;     // by EveOutcome::label(); {"none", 1} without Eve
};

/// Message-round figures for all eight assignments, the per-sender marginals
/// (uniform over the other sender) and the uniform average, plus the
/// outbound loss seen in control rounds.
struct ChannelReport {
    EveTarget eve = EveTarget::none;
    AttackVariant variant = AttackVariant::table;
    ExactReal forward_loss;
    ExactReal control_pass;
    std::vector<ChannelRow> joint;    // bob-major, 8 rows
    std::vector<ChannelRow> bob;      // 2 rows
    std::vector<ChannelRow> charlie;  // 4 rows
    ChannelRow uniform;

    const ChannelRow &row(int bob_bit, int charlie_bits) const {
        return joint.at(static_cast<size_t>(bob_bit * 4 + charlie_bits));
    }
};

ChannelReport channel_report(EveTarget eve, AttackVariant variant = AttackVariant::table);

enum class Sender { bob, charlie };

std::string_view sender_name(Sender sender);
Sender parse_sender(std::string_view name);

struct BitErrors {
    std::string position;  // "bob", "charlie.high", "charlie.low"
    ExactReal p01;
    ExactReal p10;
    ExactReal qber;
};

struct SentSymbol {
    std::string symbol;
    ExactReal decodable;                // P(decodable | sent)
    std::optional<ExactReal> error;     // P(received != sent | sent, decodable)
};

/// Error rates over decodable rounds, messages uniform for both senders.
/// p01 is P(sent 0, received 1 | decodable). For Charlie's two-bit symbol,
/// p01 and p10 are averaged over the two bit positions, which are also
/// listed separately, and `symbol_error` counts whole-symbol mistakes.
struct QberReport {
    EveTarget eve = EveTarget::none;
    AttackVariant variant = AttackVariant::table;
    Sender sender = Sender::bob;
    ExactReal decodable;
    ExactReal p01;
    ExactReal p10;
    ExactReal qber;
    std::vector<BitErrors> bits;
    ExactReal symbol_error;
    std::vector<SentSymbol> per_symbol;
};

QberReport qber_report(EveTarget eve, Sender sender, AttackVariant variant = AttackVariant::table);

struct EncodingConditional {
    std::string encoding;  // Pauli name of the intercepted sender's operation
    CategoryDistribution outcomes;
    ExactReal y_pol1;      // P(y holds one photon polarized 1)
};

/// What Eve's final readout tells her about the intercepted sender's
/// operation. The other sender's message is averaged out.
struct EveInformation {
    EveTarget eve = EveTarget::none;
    AttackVariant variant = AttackVariant::table;
    Sender sender = Sender::bob;
    std::vector<EncodingConditional> conditionals;
    CategoryDistribution marginal;
    double mutual_information_nats = 0;
};

EveInformation eve_information(EveTarget eve, AttackVariant variant = AttackVariant::table);

struct CategoryStat {
    std::string category;
    uint64_t count = 0;
    double frequency = 0;
    ExactReal exact;
    std::optional<double> z;  // absent when the exact probability is 0 or 1
    bool exact_match = false;  // with p in {0, 1}: count == p * trials
};

struct MonteCarloReport {
    ProtocolConfig config;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::vector<CategoryStat> categories;
    double max_abs_z = 0;
    bool all_exact_match = true;
};

/// Draws `trials` rounds with seeds trial_seed(seed, t). Counts do not depend
/// on `threads` (0 = hardware concurrency).
MonteCarloReport monte_carlo(const ProtocolConfig &cfg, uint64_t trials, uint64_t seed, unsigned threads = 0);

/// Comparison of drawn outcome indices (into sampler.distribution()) with
/// the exact distribution.
MonteCarloReport summarize_trials(const ProtocolConfig &cfg, const RoundSampler &sampler,
                                  const std::vector<size_t> &indices, uint64_t seed);

/// Outcome indices into `sampler.distribution()` for trials [0, trials),
/// computed in parallel but returned in trial order.
std::vector<size_t> draw_trials(const RoundSampler &sampler, uint64_t trials, uint64_t seed, unsigned threads = 0);

}  // namespace pingpong

#endif
