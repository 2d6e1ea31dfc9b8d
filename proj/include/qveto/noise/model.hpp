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

#ifndef QVETO_NOISE_MODEL_HPP
#define QVETO_NOISE_MODEL_HPP

#include <vector>

#include "qveto/noise/kraus.hpp"
#include "qveto/qcore/distribution.hpp"

namespace qveto::noise {

/// Applied to a travel qubit each time it moves between two parties.
struct HopNoise {
  KrausChannel channel;
  /// Logical qubits affected; empty means every travel qubit.
  qcore::QubitList qubits;
};

enum class GateClass { single_qubit, two_qubit };

/// Applied to every target qubit right after a matching gate.
struct GateNoise {
  GateClass gate_class;
  KrausChannel channel;
  /// The gate's target set must equal this set; empty matches any gate of the class.
  qcore::QubitList qubits;
};

/// Where noise enters a protocol run. A default-constructed model is noiseless.
struct NoiseModel {
  std::vector<HopNoise> hop_channels;
  std::vector<GateNoise> gate_channels;
  /// Probability that the classical readout bit of each logical qubit flips.
  /// Empty means no readout error.
  std::vector<double> readout_flip;

  bool is_identity() const;

  /// Channels to apply to `qubit` after it completes one hop.
  std::vector<const KrausChannel*> hop_channels_for(int qubit) const;

  /// Channels to apply to each target after a gate on `targets`.
  std::vector<const KrausChannel*> gate_channels_for(const qcore::QubitList& targets) const;

  void validate() const;
};

/// Uniform channel on every travel qubit at every hop.
NoiseModel hop_noise(const KrausChannel& channel);

/// Uniform channel after every gate on every target qubit.
NoiseModel gate_noise(const KrausChannel& channel);

/// Symmetric independent flip of each readout bit with probability flip[q].
qcore::OutcomeDistribution apply_readout_flip(const qcore::OutcomeDistribution& dist,
                                              const std::vector<double>& flip);

}  // namespace qveto::noise

#endif  // QVETO_NOISE_MODEL_HPP
