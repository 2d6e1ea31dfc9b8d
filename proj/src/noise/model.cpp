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

#include "qveto/noise/model.hpp"

#include <algorithm>

namespace qveto::noise {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::amplitude_damping:
      return "amplitude_damping";
    case ChannelKind::phase_damping:
      return "phase_damping";
    case ChannelKind::depolarizing:
      return "depolarizing";
    case ChannelKind::bit_flip:
      return "bit_flip";
    case ChannelKind::custom:
      return "custom";
  }
  return "custom";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  if (name == "amplitude_damping" || name == "amplitude") return ChannelKind::amplitude_damping;
  if (name == "phase_damping" || name == "phase") return ChannelKind::phase_damping;
  if (name == "depolarizing" || name == "depol") return ChannelKind::depolarizing;
  if (name == "bit_flip" || name == "bitflip") return ChannelKind::bit_flip;
  return std::nullopt;
}

namespace {

bool same_set(qcore::QubitList a, qcore::QubitList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool NoiseModel::is_identity() const {
  for (const auto& h : hop_channels) {
    if (!h.channel.is_identity()) return false;
  }
  for (const auto& g : gate_channels) {
    if (!g.channel.is_identity()) return false;
  }
  return std::all_of(readout_flip.begin(), readout_flip.end(), [](double f) { return f == 0.0; });
}

std::vector<const KrausChannel*> NoiseModel::hop_channels_for(int qubit) const {
  std::vector<const KrausChannel*> out;
  for (const auto& h : hop_channels) {
    if (h.channel.is_identity()) continue;
    if (h.qubits.empty() || std::find(h.qubits.begin(), h.qubits.end(), qubit) != h.qubits.end()) {
      out.push_back(&h.channel);
    }
  }
  return out;
}

std::vector<const KrausChannel*> NoiseModel::gate_channels_for(const qcore::QubitList& targets) const {
  const GateClass cls = targets.size() == 1 ? GateClass::single_qubit : GateClass::two_qubit;
  std::vector<const KrausChannel*> out;
  for (const auto& g : gate_channels) {
    if (g.gate_class != cls || g.channel.is_identity()) continue;
    if (g.qubits.empty() || same_set(g.qubits, targets)) out.push_back(&g.channel);
  }
  return out;
}

void NoiseModel::validate() const {
  for (double f : readout_flip) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigurationError("readout flip probability outside [0, 1]");
  }
}

NoiseModel hop_noise(const KrausChannel& channel) {
  NoiseModel model;
  model.hop_channels.push_back({channel, {}});
  return model;
}

NoiseModel gate_noise(const KrausChannel& channel) {
  NoiseModel model;
  model.gate_channels.push_back({GateClass::single_qubit, channel, {}});
  model.gate_channels.push_back({GateClass::two_qubit, channel, {}});
  return model;
}

qcore::OutcomeDistribution apply_readout_flip(const qcore::OutcomeDistribution& dist, const std::vector<double>& flip) {
  if (flip.empty()) return dist;
  if (static_cast<int>(flip.size()) != dist.n_qubits()) {
    throw InputError("readout flip vector has " + std::to_string(flip.size()) + " entries for " +
                     std::to_string(dist.n_qubits()) + " qubits");
  }
  std::vector<double> p = dist.probabilities();
  const int n = dist.n_qubits();
  for (int q = 0; q < n; ++q) {
    const double f = flip[static_cast<std::size_t>(q)];
    if (!(f >= 0.0 && f <= 1.0)) throw InputError("readout flip probability outside [0, 1]");
    if (f == 0.0) continue;
    const std::size_t mask = std::size_t{1} << qcore::bit_position(q, n);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i & mask) continue;
      const double zero = p[i];
      const double one = p[i | mask];
      p[i] = (1.0 - f) * zero + f * one;
      p[i | mask] = f * zero + (1.0 - f) * one;
    }
  }
  return qcore::OutcomeDistribution::from_probabilities(n, std::move(p));
}

}  // namespace qveto::noise
