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

#include "qveto/qcore/distribution.hpp"

#include <cmath>
#include <random>

namespace qveto::qcore {

namespace {
constexpr double kTolerance = 1e-9;
}

OutcomeDistribution OutcomeDistribution::from_probabilities(int n_qubits, std::vector<double> probabilities) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits must be in 1..8");
  if (probabilities.size() != (std::size_t{1} << n_qubits)) {
    throw InputError("probability vector length does not match 2^n_qubits");
  }
  double total = 0.0;
  for (double& p : probabilities) {
    if (!std::isfinite(p) || p < -kTolerance || p > 1.0 + kTolerance) {
      throw InvalidStateError("probability outside [0, 1]: " + std::to_string(p));
    }
    p = std::clamp(p, 0.0, 1.0);
    total += p;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw InvalidStateError("probabilities sum to " + std::to_string(total));
  }
  return OutcomeDistribution(n_qubits, std::move(probabilities));
}

OutcomeDistribution OutcomeDistribution::from_map(int n_qubits, const std::map<std::string, double>& probabilities) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits must be in 1..8");
  std::vector<double> dense(std::size_t{1} << n_qubits, 0.0);
  for (const auto& [label, p] : probabilities) {
    if (static_cast<int>(label.size()) != n_qubits) throw InputError("label width mismatch: " + label);
    dense[index_of(label)] += p;
  }
  return from_probabilities(n_qubits, std::move(dense));
}

double OutcomeDistribution::probability(std::string_view label) const {
  if (static_cast<int>(label.size()) != n_qubits_) throw InputError("label width mismatch");
  return probabilities_[index_of(label)];
}

std::map<std::string, double> OutcomeDistribution::as_map() const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i] > 0.0) out.emplace(label_of(i, n_qubits_), probabilities_[i]);
  }
  return out;
}

std::string OutcomeDistribution::modal() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probabilities_.size(); ++i) {
    if (probabilities_[i] > probabilities_[best]) best = i;
  }
  return label_of(best, n_qubits_);
}

std::string ShotCounts::modal() const {
  std::string best;
  std::int64_t best_count = -1;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

double ShotCounts::frequency(const std::string& label) const {
  const auto it = counts.find(label);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

ShotCounts sample_shots(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InputError("shots must be >= 1");
  const auto& p = dist.probabilities();
  std::vector<double> cumulative(p.size());
  double running = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    running += p[i];
    cumulative[i] = running;
  }
  // The last outcome with non-zero mass absorbs rounding in the running sum.
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) last_nonzero = i;
  }

  std::mt19937_64 engine(seed);
  std::vector<std::int64_t> tally(p.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
    std::size_t k = 0;
    while (k < last_nonzero && (u >= cumulative[k] || p[k] == 0.0)) ++k;
    ++tally[k];
  }

  ShotCounts out;
  out.shots = shots;
  out.seed = seed;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally[i] > 0) out.counts.emplace(label_of(i, dist.n_qubits()), tally[i]);
  }
  return out;
}

}  // namespace qveto::qcore
