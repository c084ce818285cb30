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

#include "pingpong/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "pingpong/analysis.h"
#include "pingpong/json_io.h"
#include "pingpong/verify.h"

namespace pingpong {

namespace {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

int print_table1(int initial, std::ostream &out) {
    CodeBook book(GhzIndex{initial, 1});
    out << "initial " << ghz_label(initial) << " = " << ghz({initial, 1}).to_string() << "\n";
    out << "bob  charlie  message  result  state\n";
    for (const auto &row : book.rows()) {
        std::string result = (row.result.sign < 0 ? "-" : "") + ghz_label(row.result.index);
        std::string message = std::to_string(row.bob) + "," + charlie_bits_text(row.charlie);
        out << std::left << std::setw(5) << pauli_name(row.bob_op) << std::setw(9) << pauli_name(row.charlie_op)
            << std::setw(9) << message << std::setw(8) << result << ghz(row.result).to_string() << "\n";
    }
    return kExitOk;
}

struct SimulateArgs {
    int initial = 5;
    std::string eve = "none";
    std::string mode = "message";
    std::optional<int> bob_bit;
    std::optional<std::string> charlie_bits;
    uint64_t trials = 1;
    uint64_t seed = 0;
    std::string variant = "table";
    std::string out_path;
    unsigned threads = 0;
};

int simulate(const SimulateArgs &a, std::ostream &out, std::ostream &err) {
    ProtocolConfig cfg;
    cfg.initial = GhzIndex{a.initial, 1};
    cfg.eve = parse_eve(a.eve);
    cfg.round_mode = parse_round_mode(a.mode);
    cfg.attack_variant = parse_variant(a.variant);
    if (cfg.round_mode == RoundMode::message) {
        if (!a.bob_bit || !a.charlie_bits) {
            throw UsageError("message rounds need --bob-bit and --charlie-bits");
        }
        cfg.bob_message = *a.bob_bit;
        cfg.charlie_message = parse_charlie_bits(*a.charlie_bits);
    } else if (a.bob_bit || a.charlie_bits) {
        throw UsageError("control rounds carry no message; drop --bob-bit and --charlie-bits");
    }
    cfg.validate();

    RoundSampler sampler(run_round_exact(cfg));
    std::vector<size_t> indices = draw_trials(sampler, a.trials, a.seed, a.threads);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) {
            throw UsageError("cannot write " + a.out_path);
        }
    }
    std::ostream &transcript = a.out_path.empty() ? out : file;
    std::ostream &summary = a.out_path.empty() ? err : out;
    for (size_t t = 0; t < indices.size(); ++t) {
        transcript << transcript_json(t, cfg, sampler.distribution()[indices[t]]).dump() << "\n";
    }
    summary << to_json(summarize_trials(cfg, sampler, indices, a.seed)).dump(2) << "\n";
    return kExitOk;
}

int report(const std::string &eve_text, const std::string &format, const std::string &variant_text, std::ostream &out) {
    EveTarget eve = parse_eve(eve_text);
    AttackVariant variant = parse_variant(variant_text);
    ChannelReport channel = channel_report(eve, variant);
    std::vector<QberReport> qber{qber_report(eve, Sender::bob, variant), qber_report(eve, Sender::charlie, variant)};
    EveInformation info = eve_information(eve, variant);
    if (format == "csv") {
        out << report_csv(channel, qber, info);
        return kExitOk;
    }
    Json q = Json::array();
    for (const auto &r : qber) {
        q.push_back(to_json(r));
    }
    out << Json{{"channel", to_json(channel)}, {"qber", q}, {"eve_information", to_json(info)}}.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulator of the three-party GHZ ping-pong protocol under attack", "pingpong"};
    app.require_subcommand(1);
    const std::vector<std::string> variants{"table", "gate_sequence"};

    auto *verify_cmd = app.add_subcommand("verify", "Check every published state and probability exactly");
    std::string only;
    std::string verify_variant = "table";
    verify_cmd->add_option("--only", only, "Restrict to one group")
        ->check(CLI::IsMember({"table1", "equations", "properties"}));
    verify_cmd->add_option("--variant", verify_variant, "Attack realization")->check(CLI::IsMember(variants));

    auto *table_cmd = app.add_subcommand("table1", "Print the encoding table");
    int table_initial = 5;
    table_cmd->add_option("--initial", table_initial, "Initial GHZ index")->check(CLI::Range(1, 8));

    auto *attack_cmd = app.add_subcommand("attack-table", "Dump Eve's outbound and return tables as JSON");
    std::string travel = "B";
    std::string attack_variant = "table";
    attack_cmd->add_option("--travel", travel, "Intercepted mode")->check(CLI::IsMember({"B", "C"}));
    attack_cmd->add_option("--variant", attack_variant, "Attack realization")->check(CLI::IsMember(variants));

    auto *sim_cmd = app.add_subcommand("simulate", "Sample rounds and compare with the exact distribution");
    SimulateArgs sim;
    sim_cmd->add_option("--initial", sim.initial, "Initial GHZ index")->check(CLI::Range(1, 8));
    sim_cmd->add_option("--eve", sim.eve, "Eavesdropper target")->check(CLI::IsMember({"none", "bob", "charlie"}));
    sim_cmd->add_option("--mode", sim.mode, "Round mode")->check(CLI::IsMember({"message", "control"}));
    sim_cmd->add_option("--bob-bit", sim.bob_bit, "Bob's bit")->check(CLI::Range(0, 1));
    sim_cmd->add_option("--charlie-bits", sim.charlie_bits, "Charlie's two bits")
        ->check(CLI::IsMember({"00", "01", "10", "11"}));
    sim_cmd->add_option("--trials", sim.trials, "Number of rounds")->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));
    sim_cmd->add_option("--seed", sim.seed, "Run seed")->required();
    sim_cmd->add_option("--variant", sim.variant, "Attack realization")->check(CLI::IsMember(variants));
    sim_cmd->add_option("--out", sim.out_path, "Transcript file (JSON lines); summary then goes to stdout");
    sim_cmd->add_option("--threads", sim.threads, "Worker threads, 0 for all cores");

    auto *report_cmd = app.add_subcommand("report", "Exact loss, QBER and eavesdropper statistics");
    std::string report_eve = "bob";
    std::string format = "json";
    std::string report_variant = "table";
    report_cmd->add_option("--eve", report_eve, "Eavesdropper target")->check(CLI::IsMember({"none", "bob", "charlie"}));
    report_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    report_cmd->add_option("--variant", report_variant, "Attack realization")->check(CLI::IsMember(variants));

    std::vector<const char *> argv{"pingpong"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            VerifyOptions options;
            if (!only.empty()) {
                options.only = parse_check_group(only);
            }
            options.variant = parse_variant(verify_variant);
            auto results = run_checks(options);
            out << format_checks(results);
            return all_passed(results) ? kExitOk : kExitVerifyFailed;
        }
        if (table_cmd->parsed()) {
            return print_table1(table_initial, out);
        }
        if (attack_cmd->parsed()) {
            out << attack_table_json(attack_tables(parse_mode(travel), parse_variant(attack_variant))).dump(2) << "\n";
            return kExitOk;
        }
        if (sim_cmd->parsed()) {
            return simulate(sim, out, err);
        }
        if (report_cmd->parsed()) {
            return report(report_eve, format, report_variant, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pingpong
