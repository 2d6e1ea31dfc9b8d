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

#include "qveto/election/serialize.hpp"

#include <charconv>
#include <sstream>

namespace qveto::election {

using nlohmann::json;

std::vector<ResultRow> result_rows(const ElectionReport& report, std::string_view noise_kind, double noise_strength) {
  std::vector<ResultRow> rows;
  for (const auto& run : report.repeats) {
    for (const auto& it : run.iterations) {
      rows.push_back({std::string(to_string(report.protocol)), report.votes, it.iteration, it.modal_outcome,
                      it.success_probability, it.fidelity, std::string(noise_kind), noise_strength, run.seed});
    }
  }
  return rows;
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_real failed");
  return std::string(buf.data(), end);
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < kResultColumns.size(); ++i) {
    if (i) out += ',';
    out += kResultColumns[i];
  }
  out += '\n';
  for (const auto& r : rows) {
    out += r.protocol + ',' + r.votes + ',' + std::to_string(r.iteration) + ',' + r.modal_outcome + ',' +
           format_real(r.success_probability) + ',' + format_real(r.fidelity) + ',' + r.noise_kind + ',' +
           format_real(r.noise_strength) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

namespace {

double parse_real(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("not a number: " + s);
  return v;
}

}  // namespace

std::vector<ResultRow> rows_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<ResultRow> rows;
  if (!std::getline(in, line)) return rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != kResultColumns.size()) throw InputError("CSV row has wrong column count: " + line);
    rows.push_back({f[0], f[1], std::stoi(f[2]), f[3], parse_real(f[4]), parse_real(f[5]), f[6], parse_real(f[7]),
                    std::stoull(f[8])});
  }
  return rows;
}

json to_json(const ResultRow& r) {
  return {{"protocol", r.protocol},
          {"votes", r.votes},
          {"iteration", r.iteration},
          {"modal_outcome", r.modal_outcome},
          {"success_probability", r.success_probability},
          {"fidelity", r.fidelity},
          {"noise_kind", r.noise_kind},
          {"noise_strength", r.noise_strength},
          {"seed", r.seed}};
}

json to_json(const std::vector<ResultRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

ResultRow row_from_json(const json& doc) {
  return {doc.at("protocol").get<std::string>(),
          doc.at("votes").get<std::string>(),
          doc.at("iteration").get<int>(),
          doc.at("modal_outcome").get<std::string>(),
          doc.at("success_probability").get<double>(),
          doc.at("fidelity").get<double>(),
          doc.at("noise_kind").get<std::string>(),
          doc.at("noise_strength").get<double>(),
          doc.at("seed").get<std::uint64_t>()};
}

json to_json(const qcore::ShotCounts& counts) {
  json c = json::object();
  for (const auto& [label, n] : counts.counts) c[label] = n;
  return {{"shots", counts.shots}, {"seed", counts.seed}, {"counts", c}};
}

json to_json(const Transcript& transcript) {
  json events = json::array();
  for (const auto& e : transcript.events) {
    events.push_back({{"from", e.from},
                      {"to", e.to},
                      {"payload", std::string(to_string(e.payload))},
                      {"iteration", e.iteration},
                      {"detail", e.detail}});
  }
  json counts = json::array();
  for (const auto& c : transcript.readout_counts) counts.push_back(to_json(c));
  return {{"events", events}, {"readout_counts", counts}};
}

json to_json(const ElectionReport& report) {
  json repeats = json::array();
  for (const auto& run : report.repeats) {
    json iterations = json::array();
    for (const auto& it : run.iterations) {
      json dist = json::object();
      for (const auto& [label, p] : it.distribution) dist[label] = p;
      iterations.push_back({{"iteration", it.iteration},
                            {"counts", to_json(it.counts)},
                            {"modal_outcome", it.modal_outcome},
                            {"ideal_outcome", it.ideal_outcome},
                            {"conclusive", it.conclusive},
                            {"success_probability", it.success_probability},
                            {"fidelity_vs_ideal", it.fidelity},
                            {"distribution", dist}});
    }
    repeats.push_back({{"seed", run.seed},
                       {"decision", std::string(protocols::to_string(run.decision))},
                       {"iterations", iterations},
                       {"transcript", to_json(run.transcript)}});
  }
  return {{"protocol", std::string(to_string(report.protocol))},
          {"votes", report.votes},
          {"shots", report.shots},
          {"decision", std::string(protocols::to_string(report.decision))},
          {"repeats_summary",
           {{"mean_fidelity", report.repeats_summary.mean},
            {"stddev_fidelity", report.repeats_summary.stddev},
            {"count", report.repeats_summary.count}}},
          {"repeats", repeats}};
}

}  // namespace qveto::election
