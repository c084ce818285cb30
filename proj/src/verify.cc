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

#include "pingpong/verify.h"

#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "pingpong/analysis.h"

namespace pingpong {

namespace {

struct Check {
    CheckGroup group;
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

std::string state_diff(const QuantumState &expected, const QuantumState &actual) {
    if (expected == actual) {
        return {};
    }
    if (expected.registry() != actual.registry()) {
        return "  registries differ\n  expected " + expected.to_string() + "\n  actual   " + actual.to_string() + "\n";
    }
    return format_diffs(expected.registry(), diff_states(expected, actual));
}

std::string probability_diff(const std::string &what, const ExactReal &expected, const ExactReal &actual) {
    if (expected == actual) {
        return {};
    }
    return "    " + what + ": expected " + expected.to_string() + ", got " + actual.to_string() + "\n";
}

std::string bunching_notes(const reference::ReturnScenario &scenario) {
    DivergenceReport report = compare_variants(scenario);
    ModeRegistry registry = ModeRegistry::protocol(true);
    std::string out;
    for (const auto &pair : report.pairs) {
        out += "    bunching discrepancy: " + registry.ket(pair.bunched) + " (amplitude " + pair.amplitude.to_string() +
               ") arrives split as " + registry.ket(pair.split) + "\n";
    }
    if (!report.only_bunching) {
        out += "    some differing terms are not bunching pairs\n";
    }
    return out;
}

std::string map_name_list(const std::vector<const LinearMap *> &maps, const std::function<bool(const LinearMap &)> &ok) {
    std::string out;
    for (const auto *m : maps) {
        if (!ok(*m)) {
            out += "    " + m->name() + "\n";
        }
    }
    return out;
}

std::vector<Check> checklist(AttackVariant variant) {
    std::vector<Check> checks;
    const ExactReal quarter = ExactReal::fraction(1, 4);

    for (const auto &entry : reference::encoding_table()) {
        std::string name = "encode bob=" + std::string(pauli_name(entry.bob)) + " charlie=" +
                           std::string(pauli_name(entry.charlie)) + " -> " + (entry.result.sign < 0 ? "-" : "") +
                           ghz_label(entry.result.index);
        checks.push_back({CheckGroup::table1, name, [entry] {
                              QuantumState actual = encode(ModeId::C, entry.charlie, encode(ModeId::B, entry.bob, ghz({5, 1})));
                              std::string diff = state_diff(entry.state, actual);
                              if (diff.empty() && ghz(entry.result) != entry.state) {
                                  diff = "    printed state is not " + ghz_label(entry.result.index) + " with that sign\n";
                              }
                              return diff;
                          }});
    }

    for (ModeId travel : {ModeId::B, ModeId::C}) {
        checks.push_back({CheckGroup::equations, "outbound attack on " + std::string(mode_name(travel)), [=] {
                              QuantumState actual =
                                  apply(attack_tables(travel, variant).forward, ghz({5, 1}, ModeRegistry::protocol(true)));
                              return state_diff(reference::forward(travel), actual);
                          }});
    }
    for (const auto &scenario : reference::return_scenarios()) {
        checks.push_back({CheckGroup::equations, "return state " + scenario.name, [=] {
                              PauliOp bob = scenario.travel == ModeId::B ? scenario.op : PauliOp::I;
                              PauliOp charlie = scenario.travel == ModeId::C ? scenario.op : PauliOp::I;
                              QuantumState actual = attacked_round(attack_tables(scenario.travel, variant), bob, charlie);
                              std::string diff = state_diff(scenario.expected, actual);
                              if (!diff.empty() && variant == AttackVariant::gate_sequence) {
                                  diff += bunching_notes(scenario);
                              }
                              return diff;
                          }});
    }

    checks.push_back({CheckGroup::properties, "ghz basis orthonormal (64 inner products)", [] {
                          std::string out;
                          int products = 0;
                          for (int i = 1; i <= 8; ++i) {
                              for (int j = 1; j <= 8; ++j) {
                                  ++products;
                                  ExactReal ip = inner(ghz({i, 1}), ghz({j, 1}));
                                  if (ip != ExactReal(i == j ? 1 : 0)) {
                                      out += "    <" + ghz_label(i) + "|" + ghz_label(j) + "> = " + ip.to_string() + "\n";
                                  }
                              }
                          }
                          return products == 64 ? out : out + "    wrong number of products\n";
                      }});

    auto gates = std::make_shared<std::vector<LinearMap>>();
    for (ModeId travel : {ModeId::B, ModeId::C}) {
        for (auto &g : attack_gates(travel)) {
            gates->push_back(std::move(g));
        }
    }
    gates->push_back(pbs(ModeId::B, ModeId::x));
    checks.push_back({CheckGroup::properties, "gates are photon-conserving isometries", [gates] {
                          std::vector<const LinearMap *> maps;
                          for (const auto &g : *gates) {
                              maps.push_back(&g);
                          }
                          return map_name_list(maps, [](const LinearMap &m) {
                              return m.is_isometry() && m.preserves_photon_number();
                          });
                      }});

    auto all_tables = std::make_shared<std::vector<AttackTables>>(
        std::vector<AttackTables>{attack_tables(ModeId::B, variant), attack_tables(ModeId::C, variant)});
    auto select = [all_tables](bool forward) {
        std::vector<const LinearMap *> maps;
        for (const auto &t : *all_tables) {
            maps.push_back(forward ? &t.forward : &t.backward);
        }
        return maps;
    };
    checks.push_back({CheckGroup::properties, "outbound attack tables are isometries", [=] {
                          return map_name_list(select(true), [](const LinearMap &m) { return m.is_isometry(); });
                      }});
    checks.push_back({CheckGroup::properties, "return attack tables are isometries", [=] {
                          return map_name_list(select(false), [](const LinearMap &m) { return m.is_isometry(); });
                      }});
    checks.push_back({CheckGroup::properties, "return attack undoes the outbound attack", [all_tables] {
                          std::string out;
                          for (const auto &t : *all_tables) {
                              ModeRegistry local(t.forward.modes());
                              for (const auto &[input, output] : t.forward.rows()) {
                                  QuantumState back = apply(t.backward, QuantumState(local, output));
                                  QuantumState start(local, Amplitudes{{input, ExactReal(1)}});
                                  if (back != start) {
                                      out += "    " + t.backward.name() + " after " + t.forward.name() + " on " +
                                             local.ket(input) + " gives " + back.to_string() + "\n";
                                  }
                              }
                          }
                          return out;
                      }});
    checks.push_back({CheckGroup::properties, "attack tables conserve photon number", [=] {
                          std::vector<const LinearMap *> maps = select(true);
                          for (const auto *m : select(false)) {
                              maps.push_back(m);
                          }
                          return map_name_list(maps, [](const LinearMap &m) { return m.preserves_photon_number(); });
                      }});

    auto reports = std::make_shared<std::optional<std::pair<ChannelReport, ChannelReport>>>();
    auto channel = [reports, variant]() -> const std::pair<ChannelReport, ChannelReport> & {
        if (!*reports) {
            *reports = std::make_pair(channel_report(EveTarget::on_bob, variant),
                                      channel_report(EveTarget::on_charlie, variant));
        }
        return **reports;
    };
    checks.push_back({CheckGroup::properties, "outbound loss is 1/4 on B and on C", [=] {
                          return probability_diff("loss(B)", quarter, channel().first.forward_loss) +
                                 probability_diff("loss(C)", quarter, channel().second.forward_loss);
                      }});
    checks.push_back({CheckGroup::properties, "P(y=1 | bob I) = 0", [=] {
                          return probability_diff("P(y=1 | I)", ExactReal(0),
                                                  eve_information(EveTarget::on_bob, variant).conditionals.at(0).y_pol1);
                      }});
    checks.push_back({CheckGroup::properties, "P(y=1 | bob iY) = 1/4", [=] {
                          return probability_diff("P(y=1 | iY)", quarter,
                                                  eve_information(EveTarget::on_bob, variant).conditionals.at(1).y_pol1);
                      }});
    checks.push_back({CheckGroup::properties, "double photon given bob iY = 1/4", [=] {
                          return probability_diff("double photon | bob=1", quarter, channel().first.bob.at(1).double_photon);
                      }});
    checks.push_back({CheckGroup::properties, "double photon over uniform bob bits = 1/8", [=] {
                          const auto &bob = channel().first.bob;
                          ExactReal avg = (bob.at(0).double_photon + bob.at(1).double_photon) * ExactReal::fraction(1, 2);
                          return probability_diff("double photon, uniform bob", ExactReal::fraction(1, 8), avg);
                      }});
    checks.push_back({CheckGroup::properties, "double photon given charlie X or iY = 1/4", [=] {
                          const auto &charlie = channel().second.charlie;
                          return probability_diff("double photon | charlie=01", quarter, charlie.at(1).double_photon) +
                                 probability_diff("double photon | charlie=10", quarter, charlie.at(2).double_photon);
                      }});
    return checks;
}

}  // namespace

std::string_view check_group_name(CheckGroup group) {
    switch (group) {
        case CheckGroup::table1:
            return "table1";
        case CheckGroup::equations:
            return "equations";
        case CheckGroup::properties:
            break;
    }
    return "properties";
}

CheckGroup parse_check_group(std::string_view name) {
    for (CheckGroup g : {CheckGroup::table1, CheckGroup::equations, CheckGroup::properties}) {
        if (name == check_group_name(g)) {
            return g;
        }
    }
    throw std::invalid_argument("unknown check group '" + std::string(name) + "'");
}

std::vector<CheckResult> run_checks(const VerifyOptions &options) {
    std::vector<CheckResult> results;
    for (const auto &check : checklist(options.variant)) {
        if (options.only && *options.only != check.group) {
            continue;
        }
        CheckResult r{check.group, check.name, false, {}};
        try {
            r.detail = check.run();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("    error: ") + e.what() + "\n";
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult> &results) {
    for (const auto &r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

std::string format_checks(const std::vector<CheckResult> &results) {
    std::ostringstream out;
    size_t failed = 0;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << check_group_name(r.group) << ": " << r.name << "\n";
        if (!r.passed) {
            ++failed;
            out << r.detail;
        }
    }
    if (failed == 0) {
        out << results.size() << " checks passed\n";
    } else {
        out << failed << " of " << results.size() << " checks failed\n";
    }
    return out.str();
}

}  // namespace pingpong
