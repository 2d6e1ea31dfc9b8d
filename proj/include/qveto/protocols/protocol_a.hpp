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

#ifndef QVETO_PROTOCOLS_PROTOCOL_A_HPP
#define QVETO_PROTOCOLS_PROTOCOL_A_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qveto/qcore/distribution.hpp"
#include "qveto/protocols/votes.hpp"

// Iterative Bell-state veto. The voting authority keeps the home qubit and
// circulates the travel qubit; in round t each vetoing voter applies
// diag(1, e^{i pi / 2^t}). A phi_minus outcome proves at least one veto.

namespace qveto::protocols {

inline constexpr int kHomeQubit = 0;
inline constexpr int kTravelQubit = 1;

enum class BellOutcome { phi_plus, phi_minus, psi_plus, psi_minus };

std::string_view to_string(BellOutcome outcome);

/// Computational readout after the decoding circuit:
/// phi+ -> "00", phi- -> "10", psi+ -> "01", psi- -> "11".
std::string readout_of(BellOutcome outcome);
BellOutcome bell_outcome_of(std::string_view readout);

/// diag(1, e^{i pi / 2^t}); t = 0 is Pauli Z.
qcore::GateMatrix sigma_z_t(int t);

/// 1 + ceil(log2 n).
int max_iterations(int n);

/// H(home), CNOT(home -> travel).
GateSequence bell_preparation();

/// CNOT(home -> travel), H(home).
GateSequence bell_decoding();

/// Gates voter applies in round t; empty when not vetoing.
GateSequence voter_operations_a(bool veto, int t);

struct ProtocolARound {
  qcore::StateVector pre_measure_state;
  qcore::OutcomeDistribution distribution;
};

ProtocolARound protocol_a_round(const VoteVector& votes, int t);

struct ProtocolAIteration {
  int t = 0;
  BellOutcome bell_outcome = BellOutcome::phi_plus;
  std::string readout;
  bool conclusive = false;
};

struct ProtocolAResult {
  Decision decision = Decision::pass;
  std::vector<ProtocolAIteration> iterations;
};

/// Rounds t = 0, 1, ... until a phi_minus outcome (reject) or
/// max_iterations(n) inconclusive rounds (pass).
ProtocolAResult protocol_a_run(const VoteVector& votes);

}  // namespace qveto::protocols

#endif  // QVETO_PROTOCOLS_PROTOCOL_A_HPP
