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

#ifndef QVETO_NOISE_CALIBRATION_HPP
#define QVETO_NOISE_CALIBRATION_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qveto/noise/model.hpp"

namespace qveto::noise {

/// One physical qubit's published calibration numbers.
struct CalibrationRecord {
  int qubit_id = 0;
  double t1_us = 0.0;
  double t2_us = 0.0;
  double frequency_ghz = 0.0;
  double readout_error = 0.0;
  double pauli_x_error = 0.0;
  /// (control, target) -> CNOT error rate.
  std::map<std::pair<int, int>, double> cnot_errors;

  friend bool operator==(const CalibrationRecord&, const CalibrationRecord&) = default;
};

struct Calibration {
  std::string device;
  std::string date;
  std::vector<CalibrationRecord> records;

  const CalibrationRecord* find(int qubit_id) const;

  /// CNOT error for the physical pair in either direction, looked up on both
  /// qubits' records.
  std::optional<double> cnot_error(int a, int b) const;
};

/// Parses the calibration document. Schema violations raise
/// ConfigurationError naming the offending field path, e.g.
/// "qubits[1].pauli_x_error".
Calibration parse_calibration(const nlohmann::json& doc);
Calibration parse_calibration_text(std::string_view text);
Calibration load_calibration(const std::filesystem::path& path);

nlohmann::json to_json(const Calibration& calibration);

/// "cx1_3" -> (1, 3).
std::pair<int, int> parse_cnot_key(std::string_view key);
std::string cnot_key(int control, int target);

/// What to do when a logical two-qubit pair has no direct calibration entry.
enum class PairPolicy {
  /// Raise ConfigurationError.
  strict,
  /// Compose the CNOT errors along the shortest path in the coupling graph
  /// implied by the calibration, 1 - prod(1 - e_edge).
  coupling_path,
};

/// Logical qubit r runs on physical qubit role_to_qubit[r].
struct DeviceMapping {
  std::vector<int> role_to_qubit;
  /// Logical (control, target) pairs that carry two-qubit gates.
  std::vector<std::pair<int, int>> two_qubit_pairs;
  PairPolicy pair_policy = PairPolicy::strict;
};

/// depolarizing(pauli_x_error) after every single-qubit gate on a qubit,
/// depolarizing(cnot_error) on both qubits after every two-qubit gate on a
/// pair, readout flip = readout_error. Zero rates produce no channel.
NoiseModel device_model_from_calibration(const Calibration& calibration, const DeviceMapping& mapping);

/// Derived strengths for reporting.
struct DerivedStrengths {
  std::vector<double> single_qubit;                              // per logical qubit
  std::vector<std::pair<std::pair<int, int>, double>> two_qubit;  // logical pair -> rate
  std::vector<double> readout;                                   // per logical qubit
};

DerivedStrengths derived_strengths(const Calibration& calibration, const DeviceMapping& mapping);

}  // namespace qveto::noise

#endif  // QVETO_NOISE_CALIBRATION_HPP
