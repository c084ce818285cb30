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

#ifndef PINGPONG_JSON_IO_H
#define PINGPONG_JSON_IO_H

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pingpong/analysis.h"

namespace pingpong {

/// Key order is part of the output format, so everything uses ordered_json.
using Json = nlohmann::ordered_json;

/// {"p": ["1", "2"], "q": ["0", "1"]}; integers as decimal strings.
Json to_json(const ExactReal &value);
ExactReal exact_from_json(const Json &json);

/// A probability: the exact form plus "decimal" (rational values only).
Json probability_json(const ExactReal &p);
/// "0.125"; throws for irrational values.
std::string decimal_text(const ExactReal &p);

Json occupation_json(const FockConfig &config);
FockConfig occupation_from_json(const Json &json);

/// {"modes": ["A", ...], "terms": [{"occ": [[n0, n1], ...], "amp": {...}}]}
Json to_json(const QuantumState &state);
QuantumState state_from_json(const Json &json);

/// {"name", "modes", "rows": [{"in": occ, "out": [{"occ", "amp"}, ...]}]}
Json to_json(const LinearMap &map);

/// {"travel": "B", "variant": "table", "modes": [...], "forward": rows, "backward": rows}
Json attack_table_json(const AttackTables &tables);

Json to_json(const RoundOutcome &outcome);
/// One transcript line: {"round", "mode", "eve", "bob", "charlie", "outcome"}.
Json transcript_json(uint64_t round, const ProtocolConfig &cfg, const RoundOutcome &outcome);

Json to_json(const ChannelReport &report);
Json to_json(const QberReport &report);
Json to_json(const EveInformation &info);
Json to_json(const MonteCarloReport &report);

/// "section,row,quantity,value" lines with decimal values, header included.
std::string report_csv(const ChannelReport &channel, const std::vector<QberReport> &qber, const EveInformation &info);

}  // namespace pingpong

#endif
