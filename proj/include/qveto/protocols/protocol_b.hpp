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

#ifndef QVETO_PROTOCOLS_PROTOCOL_B_HPP
#define QVETO_PROTOCOLS_PROTOCOL_B_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qveto/qcore/distribution.hpp"
#include "qveto/protocols/votes.hpp"

// Single-round veto over a multi-qubit entangled resource. Two travel qubits
// visit each voter; voter i applies A_i (x) B_i to veto. The authority undoes
// the preparation circuit and reads the register: all zeros means nobody or
// everybody vetoed.

namespace qveto::protocols {

enum class Variant { ghz3, cluster4 };

std::string_view to_string(Variant variant);

inline constexpr int kProtocolBVoters = 4;

/// Voter i's veto unitary as the pair (factor on first travel qubit,
/// factor on second travel qubit).
struct EncodingTable {
  std::array<std::pair<qcore::GateMatrix, qcore::GateMatrix>, kProtocolBVoters> factors;

  qcore::GateMatrix unitary(int voter_index) const;
};

/// {X(x)iY, X(x)Z, iY(x)Z, iY(x)iY}.
EncodingTable cluster4_encoding();
/// {X(x)I, X(x)X, iY(x)X, iY(x)I}.
EncodingTable ghz3_encoding();

struct ProtocolBVariant {
  Variant variant;
  int n_qubits;
  qcore::StateVector initial_state;
  std::pair<int, int> travel_qubits;
  EncodingTable encoding;
  GateSequence preparation;
};

/// ghz3: H(0), CNOT(0,1), CNOT(0,2).
/// cluster4: H(0), H(2), CNOT(0,1), CNOT(2,3), CZ(0,2).
ProtocolBVariant make_variant(Variant variant);

qcore::StateVector prepare_initial(const ProtocolBVariant& variant);

/// Gates for one voter; identity factors and non-vetoing voters emit nothing.
GateSequence voter_operations_b(const ProtocolBVariant& variant, int voter_index, bool veto);

/// Logical (control, target) pairs touched by two-qubit gates in a round.
std::vector<std::pair<int, int>> two_qubit_pairs(const ProtocolBVariant& variant);

struct ProtocolBResult {
  qcore::StateVector final_state;
  qcore::OutcomeDistribution distribution;
  std::string readout;
  Decision decision;
};

ProtocolBResult protocol_b_run(const VoteVector& votes, const ProtocolBVariant& variant);

/// Applies the voters' operations in `voter_order` (a permutation of 0..3)
/// instead of 1, 2, 3, 4.
ProtocolBResult protocol_b_run(const VoteVector& votes, const ProtocolBVariant& variant,
                               const std::vector<int>& voter_order);

Decision verdict_b(std::string_view readout);

}  // namespace qveto::protocols

#endif  // QVETO_PROTOCOLS_PROTOCOL_B_HPP
