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

#ifndef QVETO_ELECTION_ELECTION_HPP
#define QVETO_ELECTION_ELECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qveto/noise/calibration.hpp"
#include "qveto/noise/model.hpp"
#include "qveto/protocols/protocol_a.hpp"
#include "qveto/protocols/protocol_b.hpp"

namespace qveto::election {

enum class Protocol { a, b_ghz, b_cluster };

std::string_view to_string(Protocol protocol);
/// "a", "b-ghz", "b-cluster".
std::optional<Protocol> parse_protocol(std::string_view name);

int register_width(Protocol protocol);

/// Logical qubits that travel between parties.
qcore::QubitList travel_qubits(Protocol protocol);

/// Physical placement on the bundled four-qubit calibration, whose CNOT
/// couplings form a star around Q1. The entangling hub of each preparation
/// sits on Q1; the cluster's (2,3) pair has no direct coupling and is
/// costed along the coupling path.
noise::DeviceMapping default_device_mapping(Protocol protocol);

struct ElectionConfig {
  Protocol protocol = Protocol::a;
  int n_voters = 4;
  std::int64_t shots = 8192;
  std::uint64_t seed = 0;
  noise::NoiseModel noise;
  int repeats = 1;

  void validate() const;
};

enum class Payload { qubit_transfer, classical_announcement };

std::string_view to_string(Payload payload);

struct TranscriptEvent {
  std::string from;
  std::string to;
  Payload payload = Payload::qubit_transfer;
  /// 1-based iteration number.
  int iteration = 1;
  /// Qubits carried, or the announced readout.
  std::string detail;

  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

struct Transcript {
  std::vector<TranscriptEvent> events;
  std::vector<qcore::ShotCounts> readout_counts;  // one per iteration

  /// Qubit-transfer hops of one iteration as a party sequence, e.g.
  /// {"VA", "V1", ..., "Vn", "VA"}.
  std::vector<std::string> hop_path(int iteration) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct IterationReport {
  int iteration = 1;
  qcore::ShotCounts counts;
  std::string modal_outcome;
  std::string ideal_outcome;
  /// Exact probability mass on the ideal outcome after noise and readout error.
  double success_probability = 0.0;
  /// Fidelity of the noisy pre-measurement state with the ideal one.
  double fidelity = 0.0;
  bool conclusive = false;
  std::map<std::string, double> distribution;

  friend bool operator==(const IterationReport&, const IterationReport&) = default;
};

struct RunReport {
  std::uint64_t seed = 0;
  protocols::Decision decision = protocols::Decision::pass;
  std::vector<IterationReport> iterations;
  Transcript transcript;

  /// Fidelity of the last executed iteration.
  double final_fidelity() const { return iterations.back().fidelity; }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct FidelitySummary {
  double mean = 0.0;
  /// Sample standard deviation (n - 1); 0 for a single repeat.
  double stddev = 0.0;
  int count = 0;

  friend bool operator==(const FidelitySummary&, const FidelitySummary&) = default;
};

struct ElectionReport {
  Protocol protocol = Protocol::a;
  std::string votes;
  std::int64_t shots = 0;
  /// Decision of the first repeat.
  protocols::Decision decision = protocols::Decision::pass;
  std::vector<RunReport> repeats;
  FidelitySummary repeats_summary;

  const std::vector<IterationReport>& iterations() const { return repeats.front().iterations; }
  const Transcript& transcript() const { return repeats.front().transcript; }

  friend bool operator==(const ElectionReport&, const ElectionReport&) = default;
};

/// Density-matrix simulation of a full election. Repeat r uses seed + r.
ElectionReport run_election(const ElectionConfig& config, const protocols::VoteVector& votes);

/// fidelity(|ideal><ideal|, noisy).
double fidelity_vs_ideal(const qcore::DensityMatrix& noisy_pre_measure, const qcore::StateVector& ideal);

enum class Placement { hop, gate };

std::string_view to_string(Placement placement);
std::optional<Placement> parse_placement(std::string_view name);

/// Noise model with a single uniform channel at the given placement.
noise::NoiseModel uniform_noise(noise::ChannelKind kind, double strength, Placement placement);

struct SweepRow {
  double strength = 0.0;
  double fidelity = 0.0;
  double success_probability = 0.0;
  int iteration = 1;
  std::string modal_outcome;
};

std::vector<SweepRow> noise_sweep(Protocol protocol, const protocols::VoteVector& votes, noise::ChannelKind kind,
                                  const std::vector<double>& strengths, Placement placement, std::uint64_t seed,
                                  std::int64_t shots = 8192);

}  // namespace qveto::election

#endif  // QVETO_ELECTION_ELECTION_HPP
