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

#ifndef QVETO_QCORE_DISTRIBUTION_HPP
#define QVETO_QCORE_DISTRIBUTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qveto/qcore/state.hpp"

namespace qveto::qcore {

/// Probability of every computational-basis readout, stored densely by
/// basis index.
class OutcomeDistribution {
 public:
  /// Validates range and normalization; tiny negative rounding is clamped.
  static OutcomeDistribution from_probabilities(int n_qubits, std::vector<double> probabilities);
  static OutcomeDistribution from_map(int n_qubits, const std::map<std::string, double>& probabilities);

  int n_qubits() const { return n_qubits_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  double probability(std::string_view label) const;

  /// Non-zero entries keyed by bitstring.
  std::map<std::string, double> as_map() const;

  /// Most probable readout; ties resolve to the smallest basis index.
  std::string modal() const;

 private:
  OutcomeDistribution(int n_qubits, std::vector<double> probabilities)
      : n_qubits_(n_qubits), probabilities_(std::move(probabilities)) {}

  int n_qubits_;
  std::vector<double> probabilities_;
};

struct ShotCounts {
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> counts;

  /// Most frequent readout; ties resolve to the lexicographically smallest.
  std::string modal() const;
  double frequency(const std::string& label) const;

  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;
};

/// Multinomial draw of `shots` readouts. Uses std::mt19937_64 seeded with
/// `seed`; each shot takes the top 53 bits of one engine output as a uniform
/// in [0, 1) and inverts the cumulative distribution in basis-index order.
ShotCounts sample_shots(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed);

template <typename Real>
OutcomeDistribution measure_probs(const BasicStateVector<Real>& state) {
  std::vector<double> p(static_cast<std::size_t>(state.dim()));
  for (Eigen::Index i = 0; i < state.dim(); ++i) p[static_cast<std::size_t>(i)] = std::norm(state[i]);
  return OutcomeDistribution::from_probabilities(state.n_qubits(), std::move(p));
}

template <typename Real>
OutcomeDistribution measure_probs(const BasicDensityMatrix<Real>& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) p[static_cast<std::size_t>(i)] = static_cast<double>(rho(i, i).real());
  return OutcomeDistribution::from_probabilities(rho.n_qubits(), std::move(p));
}

}  // namespace qveto::qcore

#endif  // QVETO_QCORE_DISTRIBUTION_HPP
