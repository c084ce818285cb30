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

#include "pingpong/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace pingpong {

namespace {

ProtocolConfig message_config(EveTarget eve, AttackVariant variant, int bob, int charlie) {
    ProtocolConfig cfg;
    cfg.eve = eve;
    cfg.attack_variant = variant;
    cfg.bob_message = bob;
    cfg.charlie_message = charlie;
    return cfg;
}

std::string assignment_label(int bob, int charlie) {
    return "bob=" + std::to_string(bob) + ",charlie=" + charlie_bits_text(charlie);
}

CategoryDistribution to_vector(const std::map<std::string, ExactReal> &m) {
    return {m.begin(), m.end()};
}

ExactReal total(const CategoryDistribution &d) {
    ExactReal sum;
    for (const auto &[k, p] : d) {
        sum += p;
    }
    return sum;
}

void require_distribution(const CategoryDistribution &d, const std::string &what) {
    for (const auto &[k, p] : d) {
        if (!p.is_rational() || p.sign() < 0 || p > ExactReal(1)) {
            throw std::logic_error(what + ": probability of " + k + " is " + p.to_string());
        }
    }
    if (total(d) != ExactReal(1)) {
        throw std::logic_error(what + ": distribution sums to " + total(d).to_string());
    }
}

CategoryDistribution eve_distribution(const OutcomeDistribution &dist) {
    std::map<std::string, ExactReal> out;
    for (const auto &o : dist) {
        out[o.eve ? o.eve->label() : "none"] += o.exact_probability;
    }
    return to_vector(out);
}

ChannelRow make_row(std::string label, const OutcomeDistribution &dist) {
    ChannelRow row;
    row.label = std::move(label);
    for (const auto &o : dist) {
        switch (o.kind) {
            case OutcomeKind::loss:
                row.loss += o.exact_probability;
                break;
            case OutcomeKind::double_photon:
                row.double_photon += o.exact_probability;
                break;
            case OutcomeKind::decoded:
                row.decodable += o.exact_probability;
                break;
            default:
                break;
        }
    }
    row.decode_distribution = by_category(dist);
    row.eve_distribution = eve_distribution(dist);
    require_distribution(row.decode_distribution, row.label);
    require_distribution(row.eve_distribution, row.label);
    return row;
}

CategoryDistribution average(const std::vector<const CategoryDistribution *> &parts) {
    std::map<std::string, ExactReal> out;
    ExactReal w = ExactReal::fraction(1, static_cast<long long>(parts.size()));
    for (const auto *d : parts) {
        for (const auto &[k, p] : *d) {
            out[k] += w * p;
        }
    }
    return to_vector(out);
}

ChannelRow average_rows(std::string label, const std::vector<const ChannelRow *> &rows) {
    ChannelRow out;
    out.label = std::move(label);
    ExactReal w = ExactReal::fraction(1, static_cast<long long>(rows.size()));
    std::vector<const CategoryDistribution *> decode;
    std::vector<const CategoryDistribution *> eve;
    for (const auto *r : rows) {
        out.loss += w * r->loss;
        out.double_photon += w * r->double_photon;
        out.decodable += w * r->decodable;
        decode.push_back(&r->decode_distribution);
        eve.push_back(&r->eve_distribution);
    }
    out.decode_distribution = average(decode);
    out.eve_distribution = average(eve);
    return out;
}

std::string bit_text(int symbol, Sender sender) {
    return sender == Sender::bob ? std::to_string(symbol) : charlie_bits_text(symbol);
}

}  // namespace

ChannelReport channel_report(EveTarget eve, AttackVariant variant) {
    ChannelReport report;
    report.eve = eve;
    report.variant = variant;

    ProtocolConfig control = message_config(eve, variant, 0, 0);
    control.round_mode = RoundMode::control;
    OutcomeDistribution control_dist = run_control_round_exact(control);
    require_distribution(by_category(control_dist), "control round");
    for (const auto &o : control_dist) {
        if (o.kind == OutcomeKind::loss) {
            report.forward_loss += o.exact_probability;
        } else if (o.kind == OutcomeKind::control_pass) {
            report.control_pass += o.exact_probability;
        }
    }

    for (int bob = 0; bob < 2; ++bob) {
        for (int charlie = 0; charlie < 4; ++charlie) {
            report.joint.push_back(make_row(assignment_label(bob, charlie),
                                            run_message_round_exact(message_config(eve, variant, bob, charlie))));
        }
    }
    for (int bob = 0; bob < 2; ++bob) {
        std::vector<const ChannelRow *> rows;
        for (int charlie = 0; charlie < 4; ++charlie) {
            rows.push_back(&report.row(bob, charlie));
        }
        report.bob.push_back(average_rows("bob=" + std::to_string(bob), rows));
    }
    for (int charlie = 0; charlie < 4; ++charlie) {
        report.charlie.push_back(
            average_rows("charlie=" + charlie_bits_text(charlie), {&report.row(0, charlie), &report.row(1, charlie)}));
    }
    std::vector<const ChannelRow *> all;
    for (const auto &r : report.joint) {
        all.push_back(&r);
    }
    report.uniform = average_rows("uniform", all);
    return report;
}

std::string_view sender_name(Sender sender) {
    return sender == Sender::bob ? "bob" : "charlie";
}

Sender parse_sender(std::string_view name) {
    if (name == "bob") {
        return Sender::bob;
    }
    if (name == "charlie") {
        return Sender::charlie;
    }
    throw std::invalid_argument("unknown sender '" + std::string(name) + "'");
}

QberReport qber_report(EveTarget eve, Sender sender, AttackVariant variant) {
    QberReport report;
    report.eve = eve;
    report.variant = variant;
    report.sender = sender;

    const int symbols = sender == Sender::bob ? 2 : 4;
    const ExactReal weight = ExactReal::fraction(1, 8);
    // joint[s][r] = P(sent s, received r, decodable)
    std::vector<std::vector<ExactReal>> joint(symbols, std::vector<ExactReal>(symbols));
    std::vector<ExactReal> decodable_given(symbols);
    for (int bob = 0; bob < 2; ++bob) {
        for (int charlie = 0; charlie < 4; ++charlie) {
            int sent = sender == Sender::bob ? bob : charlie;
            for (const auto &o : run_message_round_exact(message_config(eve, variant, bob, charlie))) {
                if (o.kind != OutcomeKind::decoded) {
                    continue;
                }
                int received = sender == Sender::bob ? *o.bob_bit : *o.charlie_bits;
                joint[sent][received] += weight * o.exact_probability;
                decodable_given[sent] += ExactReal::fraction(symbols, 8) * o.exact_probability;
                report.decodable += weight * o.exact_probability;
            }
        }
    }
    if (report.decodable.is_zero()) {
        throw std::logic_error("qber_report: no decodable rounds");
    }
    const ExactReal norm = report.decodable.inv();

    const int width = sender == Sender::bob ? 1 : 2;
    for (int bit = width - 1; bit >= 0; --bit) {
        BitErrors e;
        e.position = sender == Sender::bob ? "bob" : (bit == 1 ? "charlie.high" : "charlie.low");
        for (int s = 0; s < symbols; ++s) {
            for (int r = 0; r < symbols; ++r) {
                int sb = (s >> bit) & 1;
                int rb = (r >> bit) & 1;
                if (sb == 0 && rb == 1) {
                    e.p01 += joint[s][r] * norm;
                } else if (sb == 1 && rb == 0) {
                    e.p10 += joint[s][r] * norm;
                }
            }
        }
        e.qber = e.p01 + e.p10;
        report.bits.push_back(e);
    }
    for (const auto &e : report.bits) {
        report.p01 += e.p01 * ExactReal::fraction(1, width);
        report.p10 += e.p10 * ExactReal::fraction(1, width);
    }
    report.qber = report.p01 + report.p10;

    for (int s = 0; s < symbols; ++s) {
        SentSymbol row;
        row.symbol = bit_text(s, sender);
        row.decodable = decodable_given[s];
        ExactReal wrong;
        ExactReal sent_mass;
        for (int r = 0; r < symbols; ++r) {
            sent_mass += joint[s][r];
            if (r != s) {
                wrong += joint[s][r];
                report.symbol_error += joint[s][r] * norm;
            }
        }
        if (!sent_mass.is_zero()) {
            row.error = wrong / sent_mass;
        }
        report.per_symbol.push_back(row);
    }
    return report;
}

EveInformation eve_information(EveTarget eve, AttackVariant variant) {
    EveInformation info;
    info.eve = eve;
    info.variant = variant;
    info.sender = eve == EveTarget::on_charlie ? Sender::charlie : Sender::bob;

    const int symbols = info.sender == Sender::bob ? 2 : 4;
    const int others = info.sender == Sender::bob ? 4 : 2;
    const ExactReal weight = ExactReal::fraction(1, others);
    for (int m = 0; m < symbols; ++m) {
        EncodingConditional cond;
        PauliOp op = info.sender == Sender::bob ? CodeBook::bob_op(m) : CodeBook::charlie_op(m);
        cond.encoding = std::string(pauli_name(op));
        std::map<std::string, ExactReal> outcomes;
        for (int other = 0; other < others; ++other) {
            int bob = info.sender == Sender::bob ? m : other;
            int charlie = info.sender == Sender::bob ? other : m;
            for (const auto &o : run_message_round_exact(message_config(eve, variant, bob, charlie))) {
                outcomes[o.eve ? o.eve->label() : "none"] += weight * o.exact_probability;
                if (o.eve && o.eve->y == kPol1) {
                    cond.y_pol1 += weight * o.exact_probability;
                }
            }
        }
        cond.outcomes = to_vector(outcomes);
        require_distribution(cond.outcomes, "eve outcomes given " + cond.encoding);
        info.conditionals.push_back(std::move(cond));
    }

    std::vector<const CategoryDistribution *> parts;
    for (const auto &c : info.conditionals) {
        parts.push_back(&c.outcomes);
    }
    info.marginal = average(parts);
    std::map<std::string, double> marginal;
    for (const auto &[k, p] : info.marginal) {
        marginal[k] = to_float(p);
    }
    double mi = 0;
    for (const auto &c : info.conditionals) {
        for (const auto &[k, p] : c.outcomes) {
            double pf = to_float(p);
            if (pf > 0) {
                mi += pf * std::log(pf / marginal[k]) / symbols;
            }
        }
    }
    info.mutual_information_nats = std::max(0.0, mi);
    return info;
}

std::vector<size_t> draw_trials(const RoundSampler &sampler, uint64_t trials, uint64_t seed, unsigned threads) {
    std::vector<size_t> out(trials);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    uint64_t workers = std::min<uint64_t>(threads, std::max<uint64_t>(1, trials / 1024));
    std::vector<std::thread> pool;
    for (uint64_t w = 0; w < workers; ++w) {
        uint64_t begin = trials * w / workers;
        uint64_t end = trials * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            for (uint64_t t = begin; t < end; ++t) {
                out[t] = sampler.draw_index(trial_seed(seed, t));
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    return out;
}

MonteCarloReport summarize_trials(const ProtocolConfig &cfg, const RoundSampler &sampler,
                                  const std::vector<size_t> &indices, uint64_t seed) {
    if (indices.empty()) {
        throw std::invalid_argument("monte_carlo: trials must be at least 1");
    }
    MonteCarloReport report;
    report.config = cfg;
    report.trials = indices.size();
    report.seed = seed;

    std::map<std::string, uint64_t> counts;
    for (size_t index : indices) {
        ++counts[sampler.distribution().at(index).category()];
    }

    const double n = static_cast<double>(report.trials);
    for (const auto &[category, p] : by_category(sampler.distribution())) {
        CategoryStat stat;
        stat.category = category;
        stat.count = counts[category];
        stat.frequency = static_cast<double>(stat.count) / n;
        stat.exact = p;
        double pf = to_float(p);
        if (p.is_zero() || p == ExactReal(1)) {
            stat.exact_match = p.is_zero() ? stat.count == 0 : stat.count == report.trials;
            report.all_exact_match = report.all_exact_match && stat.exact_match;
        } else {
            stat.z = (stat.frequency - pf) / std::sqrt(pf * (1 - pf) / n);
            report.max_abs_z = std::max(report.max_abs_z, std::abs(*stat.z));
        }
        report.categories.push_back(stat);
    }
    return report;
}

MonteCarloReport monte_carlo(const ProtocolConfig &cfg, uint64_t trials, uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw std::invalid_argument("monte_carlo: trials must be at least 1");
    }
    RoundSampler sampler(run_round_exact(cfg));
    return summarize_trials(cfg, sampler, draw_trials(sampler, trials, seed, threads), seed);
}

}  // namespace pingpong
