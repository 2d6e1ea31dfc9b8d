// Copyright 2026 The qveto Authors
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

#ifndef QVETO_ELECTION_SERIALIZE_HPP
#define QVETO_ELECTION_SERIALIZE_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qveto/election/election.hpp"

namespace qveto::election {

/// Flat per-(iteration x repeat) record shared by the CSV and JSON outputs.
struct ResultRow {
  std::string protocol;
  std::string votes;
  int iteration = 1;
  std::string modal_outcome;
  double success_probability = 0.0;
  double fidelity = 0.0;
  std::string noise_kind;
  double noise_strength = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline constexpr std::array<std::string_view, 9> kResultColumns{
    "protocol", "votes", "iteration", "modal_outcome", "success_probability",
    "fidelity", "noise_kind", "noise_strength", "seed"};

std::vector<ResultRow> result_rows(const ElectionReport& report, std::string_view noise_kind, double noise_strength);

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

/// Header row plus one comma-separated line per row, '\n' terminated.
std::string to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(std::string_view text);

nlohmann::json to_json(const ResultRow& row);
nlohmann::json to_json(const std::vector<ResultRow>& rows);
ResultRow row_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const qcore::ShotCounts& counts);
nlohmann::json to_json(const Transcript& transcript);
nlohmann::json to_json(const ElectionReport& report);

}  // namespace qveto::election

#endif  // QVETO_ELECTION_SERIALIZE_HPP
