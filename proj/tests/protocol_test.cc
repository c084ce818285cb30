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

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace pingpong {
namespace {

using Cat = std::map<std::string, ExactReal>;

Cat categories(const OutcomeDistribution &d) {
    Cat out;
    for (const auto &[name, p] : by_category(d)) {
        if (!p.is_zero()) {
            out[name] = p;
        }
    }
    return out;
}

ProtocolConfig message(int bob, int charlie, EveTarget eve = EveTarget::none,
                       AttackVariant v = AttackVariant::table) {
    ProtocolConfig cfg;
    cfg.bob_message = bob;
    cfg.charlie_message = charlie;
    cfg.eve = eve;
    cfg.attack_variant = v;
    return cfg;
}

ExactReal frac(int n, int d) {
    return ExactReal::fraction(n, d);
}

TEST(CodeBook, EncodesPsiFiveAsPrinted) {
    CodeBook book;
    std::vector<GhzIndex> expected{{5, 1}, {3, 1}, {4, 1}, {6, 1}, {2, 1}, {8, -1}, {7, -1}, {1, 1}};
    for (size_t i = 0; i < 8; ++i) {
        const auto &row = book.rows()[i];
        EXPECT_EQ(row.result, expected[i]) << i;
        EXPECT_EQ(row.bob_op, CodeBook::bob_op(row.bob));
        EXPECT_EQ(row.charlie_op, CodeBook::charlie_op(row.charlie));
    }
}

TEST(CodeBook, StrictDecodeChecksSign) {
    CodeBook book;
    EXPECT_EQ(book.decode({8, -1}), std::make_pair(1, 1));
    EXPECT_EQ(book.decode({1, 1}), std::make_pair(1, 3));
    EXPECT_THROW(book.decode({8, 1}), ProtocolError);
    EXPECT_THROW(book.decode({3, -1}), ProtocolError);
    EXPECT_EQ(book.decode_measured(8), std::make_pair(1, 1));
    EXPECT_EQ(book.decode_measured(6), std::make_pair(0, 3));
}

TEST(CodeBook, EveryInitialStateGivesADistinctCode) {
    for (int i = 1; i <= 8; ++i) {
        CodeBook book({i, 1});
        std::set<int> seen;
        for (const auto &row : book.rows()) {
            seen.insert(row.result.index);
            EXPECT_EQ(book.decode_measured(row.result.index), std::make_pair(row.bob, row.charlie));
        }
        EXPECT_EQ(seen.size(), 8u) << i;
    }
}

TEST(Protocol, HonestRoundsDecodeWithCertainty) {
    for (int initial = 1; initial <= 8; ++initial) {
        for (int bob = 0; bob < 2; ++bob) {
            for (int charlie = 0; charlie < 4; ++charlie) {
                ProtocolConfig cfg = message(bob, charlie);
                cfg.initial = {initial, 1};
                OutcomeDistribution d = run_round_exact(cfg);
                std::string want = "decoded(" + std::to_string(bob) + "," + charlie_bits_text(charlie) + ")";
                EXPECT_EQ(categories(d), (Cat{{want, ExactReal(1)}})) << initial;
            }
        }
    }
}

TEST(Protocol, HonestControlRoundsAlwaysPass) {
    for (int initial = 1; initial <= 8; ++initial) {
        ProtocolConfig cfg;
        cfg.initial = {initial, 1};
        cfg.round_mode = RoundMode::control;
        EXPECT_EQ(categories(run_round_exact(cfg)), (Cat{{"control_pass", ExactReal(1)}}));
    }
}

TEST(Protocol, AttackOnBobWhenBobFlips) {
    Cat got = categories(run_round_exact(message(1, 0, EveTarget::on_bob)));
    EXPECT_EQ(got, (Cat{{"loss(B)", frac(1, 2)},
                        {"double_photon(B)", frac(1, 4)},
                        {"decoded(0,00)", frac(1, 8)},
                        {"decoded(0,11)", frac(1, 8)}}));
}

TEST(Protocol, AttackOnBobWhenBobIdles) {
    Cat got = categories(run_round_exact(message(0, 2, EveTarget::on_bob)));
    ExactReal total;
    for (const auto &[name, p] : got) {
        total += p;
        EXPECT_EQ(name.rfind("double_photon", 0), std::string::npos) << name;
    }
    EXPECT_EQ(total, ExactReal(1));
}

TEST(Protocol, AttackOnCharlieByOperation) {
    for (int c : {1, 2}) {
        Cat got = categories(run_round_exact(message(0, c, EveTarget::on_charlie)));
        EXPECT_EQ(got.at("double_photon(C)"), frac(1, 4)) << c;
        EXPECT_EQ(got.at("loss(C)"), frac(1, 2)) << c;
    }
    EXPECT_EQ(categories(run_round_exact(message(0, 3, EveTarget::on_charlie))),
              (Cat{{"decoded(0,00)", frac(1, 2)}, {"decoded(0,11)", frac(1, 2)}}));
}

TEST(Protocol, ControlRoundUnderAttackLosesAQuarter) {
    for (EveTarget eve : {EveTarget::on_bob, EveTarget::on_charlie}) {
        ProtocolConfig cfg;
        cfg.round_mode = RoundMode::control;
        cfg.eve = eve;
        Cat got = categories(run_round_exact(cfg));
        std::string loss = eve == EveTarget::on_bob ? "loss(B)" : "loss(C)";
        EXPECT_EQ(got, (Cat{{loss, frac(1, 4)}, {"control_pass", frac(3, 4)}}));
    }
}

// Property: the distribution does not depend on whether Eve's modes or
// Alice's GHZ measurement is resolved first, and it is an exact probability
// distribution over rationals.
TEST(Protocol, EnumerationOrderIsIrrelevant) {
    for (AttackVariant v : {AttackVariant::table, AttackVariant::gate_sequence}) {
        for (EveTarget eve : {EveTarget::none, EveTarget::on_bob, EveTarget::on_charlie}) {
            for (int bob = 0; bob < 2; ++bob) {
                for (int charlie = 0; charlie < 4; ++charlie) {
                    ProtocolConfig cfg = message(bob, charlie, eve, v);
                    auto a = run_message_round_exact(cfg, EnumerationOrder::eve_first);
                    auto b = run_message_round_exact(cfg, EnumerationOrder::alice_first);
                    std::map<std::string, ExactReal> la, lb;
                    ExactReal total;
                    for (const auto &o : a) {
                        la[o.label()] += o.exact_probability;
                        total += o.exact_probability;
                        EXPECT_TRUE(is_rational(o.exact_probability));
                        EXPECT_GE(o.exact_probability.sign(), 0);
                    }
                    for (const auto &o : b) {
                        lb[o.label()] += o.exact_probability;
                    }
                    EXPECT_EQ(la, lb) << variant_name(v) << " " << eve_name(eve) << " " << bob << charlie;
                    EXPECT_EQ(total, ExactReal(1));
                }
            }
        }
    }
}

TEST(Protocol, GateSequenceLosesTheDoublePhotonSignature) {
    Cat got = categories(run_round_exact(message(1, 0, EveTarget::on_bob, AttackVariant::gate_sequence)));
    EXPECT_FALSE(got.contains("double_photon(B)"));
}

TEST(Protocol, ParsersAndValidation) {
    EXPECT_EQ(parse_eve("bob"), EveTarget::on_bob);
    EXPECT_EQ(parse_eve("on_charlie"), EveTarget::on_charlie);
    EXPECT_THROW(parse_eve("alice"), ProtocolError);
    EXPECT_EQ(parse_charlie_bits("10"), 2);
    EXPECT_THROW(parse_charlie_bits("2"), ProtocolError);
    EXPECT_EQ(charlie_bits_text(1), "01");
    EXPECT_EQ(eve_travel_mode(EveTarget::on_charlie), ModeId::C);
    EXPECT_THROW(eve_travel_mode(EveTarget::none), ProtocolError);
    EXPECT_EQ(agree_round_mode(RoundMode::control, RoundMode::control), RoundMode::control);
    EXPECT_THROW(agree_round_mode(RoundMode::control, RoundMode::message), ProtocolError);

    ProtocolConfig bad = message(2, 0);
    EXPECT_THROW(bad.validate(), ProtocolError);
    bad = message(0, 4);
    EXPECT_THROW(bad.validate(), ProtocolError);
    bad = message(0, 0);
    bad.initial = {0, 1};
    EXPECT_THROW(bad.validate(), ProtocolError);
    EXPECT_THROW(run_control_round_exact(message(0, 0)), ProtocolError);
}

TEST(Sampler, DeterministicPerSeed) {
    RoundSampler s(run_round_exact(message(1, 0, EveTarget::on_bob)));
    for (uint64_t seed : {0ull, 1ull, 20240601ull}) {
        EXPECT_EQ(s.draw_index(seed), s.draw_index(seed));
    }
    EXPECT_EQ(sample_round(message(1, 2), 99).category(), "decoded(1,10)");
    EXPECT_THROW(RoundSampler(OutcomeDistribution{}), std::invalid_argument);
}

TEST(Sampler, TrialSeedsAreDistinct) {
    std::set<uint64_t> seen;
    for (uint64_t t = 0; t < 10000; ++t) {
        seen.insert(trial_seed(42, t));
    }
    EXPECT_EQ(seen.size(), 10000u);
    EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Outcome, Labels) {
    auto d = run_round_exact(message(1, 0, EveTarget::on_bob));
    std::set<std::string> labels;
    for (const auto &o : d) {
        labels.insert(o.label());
    }
    bool has_eve = false;
    for (const auto &l : labels) {
        has_eve = has_eve || l.find(" eve[x=") != std::string::npos;
    }
    EXPECT_TRUE(has_eve);
    EXPECT_EQ(labels.size(), d.size());
}

}  // namespace
}  // namespace pingpong
