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

#include "pingpong/json_io.h"

#include <cstdio>
#include <sstream>

namespace pingpong {

namespace {

Json rational_json(const Rational &r) {
    return Json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from_json(const Json &json) {
    if (!json.is_array() || json.size() != 2 || !json[0].is_string() || !json[1].is_string()) {
        throw std::invalid_argument("rational must be [\"num\", \"den\"]");
    }
    BigInt den(json[1].get<std::string>());
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    return Rational(BigInt(json[0].get<std::string>()), den);
}

std::string_view kind_name(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::decoded:
            return "decoded";
        case OutcomeKind::loss:
            return "loss";
        case OutcomeKind::double_photon:
            return "double_photon";
        case OutcomeKind::control_pass:
            return "control_pass";
        case OutcomeKind::control_fail:
            return "control_fail";
        case OutcomeKind::other:
            break;
    }
    return "other";
}

Json modes_json(const std::vector<ModeId> &modes) {
    Json out = Json::array();
    for (ModeId m : modes) {
        out.push_back(std::string(mode_name(m)));
    }
    return out;
}

Json amplitudes_json(const Amplitudes &terms) {
    Json out = Json::array();
    for (const auto &[config, amp] : terms) {
        out.push_back(Json{{"occ", occupation_json(config)}, {"amp", to_json(amp)}});
    }
    return out;
}

Json distribution_json(const CategoryDistribution &d) {
    Json out = Json::object();
    for (const auto &[k, p] : d) {
        out[k] = probability_json(p);
    }
    return out;
}

Json row_json(const ChannelRow &row) {
    return Json{{"label", row.label},
                {"loss", probability_json(row.loss)},
                {"double_photon", probability_json(row.double_photon)},
                {"decodable", probability_json(row.decodable)},
                {"categories", distribution_json(row.decode_distribution)},
                {"eve_outcomes", distribution_json(row.eve_distribution)}};
}

Json config_json(const ProtocolConfig &cfg) {
    Json out{{"initial", ghz_label(cfg.initial.index)},
             {"mode", std::string(round_mode_name(cfg.round_mode))},
             {"eve", std::string(eve_name(cfg.eve))},
             {"variant", std::string(variant_name(cfg.attack_variant))}};
    if (cfg.round_mode == RoundMode::message) {
        out["bob"] = cfg.bob_message;
        out["charlie"] = charlie_bits_text(cfg.charlie_message);
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

class CsvWriter {
   public:
    CsvWriter() {
        out_ << "section,row,quantity,value\n";
    }
    void add(const std::string &section, const std::string &row, const std::string &quantity, const std::string &value) {
        out_ << csv_field(section) << ',' << csv_field(row) << ',' << csv_field(quantity) << ',' << csv_field(value)
             << '\n';
    }
    void add(const std::string &section, const std::string &row, const std::string &quantity, const ExactReal &value) {
        add(section, row, quantity, decimal_text(value));
    }
    std::string str() const {
        return out_.str();
    }

   private:
    std::ostringstream out_;
};

std::string fixed_text(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", value);
    return buf;
}

}  // namespace

Json to_json(const ExactReal &value) {
    return Json{{"p", rational_json(value.p())}, {"q", rational_json(value.q())}};
}

ExactReal exact_from_json(const Json &json) {
    if (!json.is_object() || !json.contains("p") || !json.contains("q")) {
        throw std::invalid_argument("exact value must be {\"p\": ..., \"q\": ...}");
    }
    return ExactReal(rational_from_json(json.at("p")), rational_from_json(json.at("q")));
}

std::string decimal_text(const ExactReal &p) {
    if (!p.is_rational()) {
        throw std::invalid_argument("decimal_text: irrational value " + p.to_string());
    }
    return rational_to_decimal(p.p());
}

Json probability_json(const ExactReal &p) {
    Json out = to_json(p);
    out["decimal"] = decimal_text(p);
    return out;
}

Json occupation_json(const FockConfig &config) {
    Json out = Json::array();
    for (const auto &occ : config) {
        out.push_back(Json::array({occ.n0, occ.n1}));
    }
    return out;
}

FockConfig occupation_from_json(const Json &json) {
    FockConfig out;
    for (const auto &pair : json) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("occupation must be [n0, n1]");
        }
        int n0 = pair[0].get<int>();
        int n1 = pair[1].get<int>();
        if (n0 < 0 || n1 < 0 || n0 > 255 || n1 > 255) {
            throw std::invalid_argument("occupation out of range");
        }
        out.push_back(ModeOccupation{static_cast<uint8_t>(n0), static_cast<uint8_t>(n1)});
    }
    return out;
}

Json to_json(const QuantumState &state) {
    return Json{{"modes", modes_json(state.registry().modes())}, {"terms", amplitudes_json(state.terms())}};
}

QuantumState state_from_json(const Json &json) {
    std::vector<ModeId> modes;
    for (const auto &m : json.at("modes")) {
        modes.push_back(parse_mode(m.get<std::string>()));
    }
    ModeRegistry registry(modes);
    Amplitudes terms;
    for (const auto &term : json.at("terms")) {
        FockConfig config = occupation_from_json(term.at("occ"));
        if (config.size() != modes.size()) {
            throw std::invalid_argument("term has " + std::to_string(config.size()) + " occupations for " +
                                        std::to_string(modes.size()) + " modes");
        }
        terms[config] += exact_from_json(term.at("amp"));
    }
    return QuantumState(registry, std::move(terms));
}

Json to_json(const LinearMap &map) {
    Json rows = Json::array();
    for (const auto &[input, output] : map.rows()) {
        rows.push_back(Json{{"in", occupation_json(input)}, {"out", amplitudes_json(output)}});
    }
    return Json{{"name", map.name()}, {"modes", modes_json(map.modes())}, {"rows", rows}};
}

Json attack_table_json(const AttackTables &tables) {
    return Json{{"travel", std::string(mode_name(tables.travel))},
                {"variant", std::string(variant_name(tables.variant))},
                {"modes", modes_json(tables.forward.modes())},
                {"forward", to_json(tables.forward).at("rows")},
                {"backward", to_json(tables.backward).at("rows")}};
}

Json to_json(const RoundOutcome &outcome) {
    Json out{{"category", outcome.category()}, {"kind", std::string(kind_name(outcome.kind))}};
    if (outcome.bob_bit) {
        out["bob"] = *outcome.bob_bit;
    }
    if (outcome.charlie_bits) {
        out["charlie"] = charlie_bits_text(*outcome.charlie_bits);
    }
    if (outcome.mode) {
        out["mode"] = std::string(mode_name(*outcome.mode));
    }
    if (outcome.alice_ghz) {
        out["ghz"] = ghz_label(outcome.alice_ghz->index);
    }
    if (outcome.z_pattern) {
        out["z"] = *outcome.z_pattern;
    }
    if (outcome.eve) {
        out["eve"] = Json{{"x", outcome.eve->x.label()}, {"y", outcome.eve->y.label()}};
    }
    out["probability"] = probability_json(outcome.exact_probability);
    return out;
}

Json transcript_json(uint64_t round, const ProtocolConfig &cfg, const RoundOutcome &outcome) {
    Json o = to_json(outcome);
    o.erase("probability");
    Json line{{"round", round},
              {"mode", std::string(round_mode_name(cfg.round_mode))},
              {"eve", std::string(eve_name(cfg.eve))}};
    if (cfg.round_mode == RoundMode::message) {
        line["bob"] = cfg.bob_message;
        line["charlie"] = charlie_bits_text(cfg.charlie_message);
    } else {
        line["bob"] = nullptr;
        line["charlie"] = nullptr;
    }
    line["outcome"] = o;
    return line;
}

Json to_json(const ChannelReport &report) {
    Json rows = Json::array();
    for (const auto *group : {&report.joint, &report.bob, &report.charlie}) {
        for (const auto &row : *group) {
            rows.push_back(row_json(row));
        }
    }
    rows.push_back(row_json(report.uniform));
    return Json{{"eve", std::string(eve_name(report.eve))},
                {"variant", std::string(variant_name(report.variant))},
                {"forward_loss", probability_json(report.forward_loss)},
                {"control_pass", probability_json(report.control_pass)},
                {"rows", rows}};
}

Json to_json(const QberReport &report) {
    Json bits = Json::array();
    for (const auto &b : report.bits) {
        bits.push_back(Json{{"position", b.position},
                            {"p01", probability_json(b.p01)},
                            {"p10", probability_json(b.p10)},
                            {"qber", probability_json(b.qber)}});
    }
    Json sent = Json::array();
    for (const auto &s : report.per_symbol) {
        sent.push_back(Json{{"symbol", s.symbol},
                            {"decodable", probability_json(s.decodable)},
                            {"error", s.error ? probability_json(*s.error) : Json(nullptr)}});
    }
    return Json{{"eve", std::string(eve_name(report.eve))},
                {"variant", std::string(variant_name(report.variant))},
                {"sender", std::string(sender_name(report.sender))},
                {"decodable", probability_json(report.decodable)},
                {"p01", probability_json(report.p01)},
                {"p10", probability_json(report.p10)},
                {"qber", probability_json(report.qber)},
                {"bits", bits},
                {"symbol_error", probability_json(report.symbol_error)},
                {"per_symbol", sent}};
}

Json to_json(const EveInformation &info) {
    Json conditionals = Json::array();
    for (const auto &c : info.conditionals) {
        conditionals.push_back(Json{{"encoding", c.encoding},
                                    {"y_pol1", probability_json(c.y_pol1)},
                                    {"outcomes", distribution_json(c.outcomes)}});
    }
    return Json{{"eve", std::string(eve_name(info.eve))},
                {"variant", std::string(variant_name(info.variant))},
                {"sender", std::string(sender_name(info.sender))},
                {"conditionals", conditionals},
                {"marginal", distribution_json(info.marginal)},
                {"mutual_information_nats", info.mutual_information_nats}};
}

Json to_json(const MonteCarloReport &report) {
    Json categories = Json::array();
    for (const auto &c : report.categories) {
        categories.push_back(Json{{"category", c.category},
                                  {"count", c.count},
                                  {"frequency", c.frequency},
                                  {"exact", probability_json(c.exact)},
                                  {"z", c.z ? Json(*c.z) : Json(nullptr)},
                                  {"exact_match", c.exact_match}});
    }
    return Json{{"config", config_json(report.config)},
                {"trials", report.trials},
                {"seed", report.seed},
                {"categories", categories},
                {"max_abs_z", report.max_abs_z},
                {"all_exact_match", report.all_exact_match}};
}

std::string report_csv(const ChannelReport &channel, const std::vector<QberReport> &qber, const EveInformation &info) {
    CsvWriter csv;
    csv.add("channel", "control", "forward_loss", channel.forward_loss);
    csv.add("channel", "control", "control_pass", channel.control_pass);
    auto add_row = [&](const ChannelRow &row) {
        csv.add("channel", row.label, "loss", row.loss);
        csv.add("channel", row.label, "double_photon", row.double_photon);
        csv.add("channel", row.label, "decodable", row.decodable);
        for (const auto &[k, p] : row.decode_distribution) {
            csv.add("channel", row.label, "category:" + k, p);
        }
        for (const auto &[k, p] : row.eve_distribution) {
            csv.add("channel", row.label, "eve:" + k, p);
        }
    };
    for (const auto *group : {&channel.joint, &channel.bob, &channel.charlie}) {
        for (const auto &row : *group) {
            add_row(row);
        }
    }
    add_row(channel.uniform);

    for (const auto &q : qber) {
        std::string sender(sender_name(q.sender));
        csv.add("qber", sender, "decodable", q.decodable);
        csv.add("qber", sender, "p01", q.p01);
        csv.add("qber", sender, "p10", q.p10);
        csv.add("qber", sender, "qber", q.qber);
        csv.add("qber", sender, "symbol_error", q.symbol_error);
        for (const auto &b : q.bits) {
            csv.add("qber", b.position, "p01", b.p01);
            csv.add("qber", b.position, "p10", b.p10);
            csv.add("qber", b.position, "qber", b.qber);
        }
        for (const auto &s : q.per_symbol) {
            csv.add("qber", sender + "=" + s.symbol, "decodable", s.decodable);
            csv.add("qber", sender + "=" + s.symbol, "error", s.error ? decimal_text(*s.error) : std::string());
        }
    }

    for (const auto &c : info.conditionals) {
        csv.add("eve", c.encoding, "y_pol1", c.y_pol1);
        for (const auto &[k, p] : c.outcomes) {
            csv.add("eve", c.encoding, "outcome:" + k, p);
        }
    }
    csv.add("eve", "all", "mutual_information_nats", fixed_text(info.mutual_information_nats));
    return csv.str();
}

}  // namespace pingpong
