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

#include "qveto/noise/calibration.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace qveto::noise {

using nlohmann::json;

namespace {

double require_number(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigurationError(path + "." + key + ": missing field");
  if (!it->is_number()) throw ConfigurationError(path + "." + key + ": expected a number");
  return it->get<double>();
}

double require_rate(const json& obj, const std::string& key, const std::string& path) {
  const double v = require_number(obj, key, path);
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigurationError(path + "." + key + ": error rate must lie in [0, 1]");
  return v;
}

double require_positive(const json& obj, const std::string& key, const std::string& path) {
  const double v = require_number(obj, key, path);
  if (!(v > 0.0)) throw ConfigurationError(path + "." + key + ": must be > 0");
  return v;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigurationError("not an integer: " + std::string(text));
  }
  return value;
}

}  // namespace

std::pair<int, int> parse_cnot_key(std::string_view key) {
  if (key.size() < 5 || key.substr(0, 2) != "cx") throw ConfigurationError("malformed CNOT key: " + std::string(key));
  const auto sep = key.find('_', 2);
  if (sep == std::string_view::npos) throw ConfigurationError("malformed CNOT key: " + std::string(key));
  return {parse_int(key.substr(2, sep - 2)), parse_int(key.substr(sep + 1))};
}

std::string cnot_key(int control, int target) {
  return "cx" + std::to_string(control) + "_" + std::to_string(target);
}

const CalibrationRecord* Calibration::find(int qubit_id) const {
  for (const auto& r : records) {
    if (r.qubit_id == qubit_id) return &r;
  }
  return nullptr;
}

std::optional<double> Calibration::cnot_error(int a, int b) const {
  for (const auto& [c, t] : {std::pair{a, b}, std::pair{b, a}}) {
    for (const int owner : {c, t}) {
      if (const auto* rec = find(owner)) {
        if (auto it = rec->cnot_errors.find({c, t}); it != rec->cnot_errors.end()) return it->second;
      }
    }
  }
  return std::nullopt;
}

Calibration parse_calibration(const json& doc) {
  if (!doc.is_object()) throw ConfigurationError("calibration: expected an object at top level");
  Calibration cal;
  if (auto it = doc.find("device"); it != doc.end() && it->is_string()) cal.device = it->get<std::string>();
  if (auto it = doc.find("date"); it != doc.end() && it->is_string()) cal.date = it->get<std::string>();
  const auto qubits = doc.find("qubits");
  if (qubits == doc.end() || !qubits->is_array()) throw ConfigurationError("qubits: missing array");

  std::set<int> seen;
  for (std::size_t i = 0; i < qubits->size(); ++i) {
    const json& q = (*qubits)[i];
    const std::string path = "qubits[" + std::to_string(i) + "]";
    if (!q.is_object()) throw ConfigurationError(path + ": expected an object");
    CalibrationRecord rec;
    const auto id = q.find("qubit_id");
    if (id == q.end() || !id->is_number_integer()) throw ConfigurationError(path + ".qubit_id: missing integer");
    rec.qubit_id = id->get<int>();
    if (!seen.insert(rec.qubit_id).second) throw ConfigurationError(path + ".qubit_id: duplicate qubit");
    rec.t1_us = require_positive(q, "t1_us", path);
    rec.t2_us = require_positive(q, "t2_us", path);
    rec.frequency_ghz = require_number(q, "frequency_ghz", path);
    rec.readout_error = require_rate(q, "readout_error", path);
    rec.pauli_x_error = require_rate(q, "pauli_x_error", path);
    const auto cx = q.find("cnot_errors");
    if (cx == q.end() || !cx->is_object()) throw ConfigurationError(path + ".cnot_errors: missing object");
    for (const auto& [key, value] : cx->items()) {
      const std::string field = path + ".cnot_errors." + key;
      std::pair<int, int> pair;
      try {
        pair = parse_cnot_key(key);
      } catch (const ConfigurationError&) {
        throw ConfigurationError(field + ": key must look like cx<control>_<target>");
      }
      if (pair.first != rec.qubit_id && pair.second != rec.qubit_id) {
        throw ConfigurationError(field + ": pair does not involve qubit " + std::to_string(rec.qubit_id));
      }
      if (!value.is_number()) throw ConfigurationError(field + ": expected a number");
      const double e = value.get<double>();
      if (!(e >= 0.0 && e <= 1.0)) throw ConfigurationError(field + ": error rate must lie in [0, 1]");
      rec.cnot_errors[pair] = e;
    }
    cal.records.push_back(std::move(rec));
  }
  return cal;
}

Calibration parse_calibration_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("calibration: not valid JSON: ") + e.what());
  }
  return parse_calibration(doc);
}

Calibration load_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError(path.string() + ": cannot open calibration file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_calibration_text(buffer.str());
}

json to_json(const Calibration& calibration) {
  json qubits = json::array();
  for (const auto& r : calibration.records) {
    json cx = json::object();
    for (const auto& [pair, e] : r.cnot_errors) cx[cnot_key(pair.first, pair.second)] = e;
    qubits.push_back({{"qubit_id", r.qubit_id},
                      {"t1_us", r.t1_us},
                      {"t2_us", r.t2_us},
                      {"frequency_ghz", r.frequency_ghz},
                      {"readout_error", r.readout_error},
                      {"pauli_x_error", r.pauli_x_error},
                      {"cnot_errors", cx}});
  }
  return {{"device", calibration.device}, {"date", calibration.date}, {"qubits", qubits}};
}

namespace {

double composed_path_error(const Calibration& cal, int from, int to) {
  std::map<int, std::vector<std::pair<int, double>>> graph;
  for (const auto& r : cal.records) {
    for (const auto& [pair, e] : r.cnot_errors) {
      graph[pair.first].push_back({pair.second, e});
      graph[pair.second].push_back({pair.first, e});
    }
  }
  // Breadth-first over hops; among shortest paths keep the highest survival.
  std::map<int, std::pair<int, double>> best;  // qubit -> (hops, survival)
  std::deque<int> frontier{from};
  best[from] = {0, 1.0};
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop_front();
    const auto [hops, survival] = best[at];
    for (const auto& [next, e] : graph[at]) {
      const double s = survival * (1.0 - e);
      auto it = best.find(next);
      if (it == best.end()) {
        best[next] = {hops + 1, s};
        frontier.push_back(next);
      } else if (it->second.first == hops + 1 && s > it->second.second) {
        it->second.second = s;
      }
    }
  }
  const auto it = best.find(to);
  if (it == best.end()) {
    throw ConfigurationError("no coupling path between physical qubits " + std::to_string(from) + " and " +
                             std::to_string(to));
  }
  return 1.0 - it->second.second;
}

int physical(const DeviceMapping& mapping, int role) {
  if (role < 0 || role >= static_cast<int>(mapping.role_to_qubit.size())) {
    throw ConfigurationError("logical qubit " + std::to_string(role) + " has no physical mapping");
  }
  return mapping.role_to_qubit[static_cast<std::size_t>(role)];
}

}  // namespace

DerivedStrengths derived_strengths(const Calibration& calibration, const DeviceMapping& mapping) {
  DerivedStrengths out;
  for (std::size_t role = 0; role < mapping.role_to_qubit.size(); ++role) {
    const int q = mapping.role_to_qubit[role];
    const auto* rec = calibration.find(q);
    if (!rec) throw ConfigurationError("no calibration record for physical qubit " + std::to_string(q));
    out.single_qubit.push_back(rec->pauli_x_error);
    out.readout.push_back(rec->readout_error);
  }

  std::vector<std::pair<int, int>> pairs = mapping.two_qubit_pairs;
  if (pairs.empty()) {
    const int n = static_cast<int>(mapping.role_to_qubit.size());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (calibration.cnot_error(physical(mapping, a), physical(mapping, b))) pairs.emplace_back(a, b);
      }
    }
  }
  for (const auto& [a, b] : pairs) {
    const int pa = physical(mapping, a);
    const int pb = physical(mapping, b);
    double rate = 0.0;
    if (const auto direct = calibration.cnot_error(pa, pb)) {
      rate = *direct;
    } else if (mapping.pair_policy == PairPolicy::coupling_path) {
      rate = composed_path_error(calibration, pa, pb);
    } else {
      throw ConfigurationError("missing cnot_error for physical pair " + cnot_key(pa, pb) + " (logical " +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
    out.two_qubit.push_back({{a, b}, rate});
  }
  return out;
}

NoiseModel device_model_from_calibration(const Calibration& calibration, const DeviceMapping& mapping) {
  const DerivedStrengths strengths = derived_strengths(calibration, mapping);
  NoiseModel model;
  for (std::size_t role = 0; role < strengths.single_qubit.size(); ++role) {
    if (strengths.single_qubit[role] > 0.0) {
      model.gate_channels.push_back(
          {GateClass::single_qubit, depolarizing(strengths.single_qubit[role]), {static_cast<int>(role)}});
    }
  }
  for (const auto& [pair, rate] : strengths.two_qubit) {
    if (rate > 0.0) model.gate_channels.push_back({GateClass::two_qubit, depolarizing(rate), {pair.first, pair.second}});
  }
  const bool any_readout = std::any_of(strengths.readout.begin(), strengths.readout.end(), [](double r) { return r > 0.0; });
  if (any_readout) model.readout_flip = strengths.readout;
  return model;
}

}  // namespace qveto::noise
