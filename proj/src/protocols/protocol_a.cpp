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

#include "qveto/protocols/protocol_a.hpp"

#include <cmath>
#include <numbers>

namespace qveto::protocols {

std::string_view to_string(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::phi_plus:
      return "phi_plus";
    case BellOutcome::phi_minus:
      return "phi_minus";
    case BellOutcome::psi_plus:
      return "psi_plus";
    case BellOutcome::psi_minus:
      return "psi_minus";
  }
  return "?";
}

std::string readout_of(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::phi_plus:
      return "00";
    case BellOutcome::phi_minus:
      return "10";
    case BellOutcome::psi_plus:
      return "01";
    case BellOutcome::psi_minus:
      return "11";
  }
  return "00";
}

BellOutcome bell_outcome_of(std::string_view readout) {
  if (readout == "00") return BellOutcome::phi_plus;
  if (readout == "10") return BellOutcome::phi_minus;
  if (readout == "01") return BellOutcome::psi_plus;
  if (readout == "11") return BellOutcome::psi_minus;
  throw InputError("not a 2-bit readout: " + std::string(readout));
}

qcore::GateMatrix sigma_z_t(int t) {
  if (t < 0) throw InputError("iteration index t must be >= 0");
  if (t == 0) return qcore::gates::z();
  return qcore::gates::phase(std::numbers::pi / std::ldexp(1.0, t), "sigma_z(" + std::to_string(t) + ")");
}

int max_iterations(int n) {
  if (n < 2) throw InputError("max_iterations needs n >= 2");
  int ceil_log2 = 0;
  while ((1 << ceil_log2) < n) ++ceil_log2;
  return 1 + ceil_log2;
}

GateSequence bell_preparation() {
  return {{qcore::gates::h(), {kHomeQubit}}, {qcore::gates::cnot(), {kHomeQubit, kTravelQubit}}};
}

GateSequence bell_decoding() { return adjoint(bell_preparation()); }

GateSequence voter_operations_a(bool veto, int t) {
  if (!veto) return {};
  return {{sigma_z_t(t), {kTravelQubit}}};
}

ProtocolARound protocol_a_round(const VoteVector& votes, int t) {
  qcore::StateVector state = run_sequence(qcore::basis_state(2, "00"), bell_preparation());
  for (int i = 0; i < votes.size(); ++i) state = run_sequence(state, voter_operations_a(votes.vetoes(i), t));
  const qcore::StateVector decoded = run_sequence(state, bell_decoding());
  return {state, qcore::measure_probs(decoded)};
}

ProtocolAResult protocol_a_run(const VoteVector& votes) {
  ProtocolAResult result;
  const int rounds = max_iterations(votes.size());
  for (int t = 0; t < rounds; ++t) {
    const ProtocolARound round = protocol_a_round(votes, t);
    ProtocolAIteration it;
    it.t = t;
    it.readout = round.distribution.modal();
    it.bell_outcome = bell_outcome_of(it.readout);
    it.conclusive = it.bell_outcome == BellOutcome::phi_minus;
    result.iterations.push_back(it);
    if (it.conclusive) {
      result.decision = Decision::reject;
      return result;
    }
  }
  result.decision = Decision::pass;
  return result;
}

}  // namespace qveto::protocols
