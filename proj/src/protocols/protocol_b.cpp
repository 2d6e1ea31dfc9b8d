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

#include "qveto/protocols/protocol_b.hpp"

#include <algorithm>
#include <set>

namespace qveto::protocols {

namespace g = qcore::gates;

std::string_view to_string(Variant variant) { return variant == Variant::ghz3 ? "ghz3" : "cluster4"; }

qcore::GateMatrix EncodingTable::unitary(int voter_index) const {
  const auto& [a, b] = factors.at(static_cast<std::size_t>(voter_index));
  return qcore::kron(a, b);
}

EncodingTable cluster4_encoding() {
  return {{{{g::x(), g::iy()}, {g::x(), g::z()}, {g::iy(), g::z()}, {g::iy(), g::iy()}}}};
}

EncodingTable ghz3_encoding() {
  return {{{{g::x(), g::identity()}, {g::x(), g::x()}, {g::iy(), g::x()}, {g::iy(), g::identity()}}}};
}

ProtocolBVariant make_variant(Variant variant) {
  const bool ghz = variant == Variant::ghz3;
  const int n = ghz ? 3 : 4;
  GateSequence prep =
      ghz ? GateSequence{{g::h(), {0}}, {g::cnot(), {0, 1}}, {g::cnot(), {0, 2}}}
          : GateSequence{{g::h(), {0}}, {g::h(), {2}}, {g::cnot(), {0, 1}}, {g::cnot(), {2, 3}}, {g::cz(), {0, 2}}};
  EncodingTable encoding = ghz ? ghz3_encoding() : cluster4_encoding();
  qcore::StateVector initial = run_sequence(qcore::basis_state(n, std::string(static_cast<std::size_t>(n), '0')), prep);
  return {variant, n, std::move(initial), {1, 2}, std::move(encoding), std::move(prep)};
}

qcore::StateVector prepare_initial(const ProtocolBVariant& variant) {
  return run_sequence(qcore::basis_state(variant.n_qubits, std::string(static_cast<std::size_t>(variant.n_qubits), '0')),
                      variant.preparation);
}

namespace {

bool is_identity(const qcore::GateMatrix& gate) {
  return gate.matrix() == qcore::CMatrix<double>::Identity(2, 2);
}

}  // namespace

GateSequence voter_operations_b(const ProtocolBVariant& variant, int voter_index, bool veto) {
  if (voter_index < 0 || voter_index >= kProtocolBVoters) throw InputError("voter index out of range");
  if (!veto) return {};
  const auto& [a, b] = variant.encoding.factors[static_cast<std::size_t>(voter_index)];
  GateSequence ops;
  if (!is_identity(a)) ops.push_back({a, {variant.travel_qubits.first}});
  if (!is_identity(b)) ops.push_back({b, {variant.travel_qubits.second}});
  return ops;
}

std::vector<std::pair<int, int>> two_qubit_pairs(const ProtocolBVariant& variant) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& ins : variant.preparation) {
    if (ins.targets.size() != 2) continue;
    const std::pair<int, int> p{ins.targets[0], ins.targets[1]};
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
  }
  return pairs;
}

Decision verdict_b(std::string_view readout) {
  return std::all_of(readout.begin(), readout.end(), [](char c) { return c == '0'; }) ? Decision::unanimous
                                                                                       : Decision::not_unanimous;
}

ProtocolBResult protocol_b_run(const VoteVector& votes, const ProtocolBVariant& variant) {
  return protocol_b_run(votes, variant, {0, 1, 2, 3});
}

ProtocolBResult protocol_b_run(const VoteVector& votes, const ProtocolBVariant& variant,
                               const std::vector<int>& voter_order) {
  if (votes.size() != kProtocolBVoters) {
    throw InputError("protocol B is defined for exactly 4 voters, got " + std::to_string(votes.size()));
  }
  std::vector<int> sorted = voter_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int>{0, 1, 2, 3}) throw InputError("voter order must be a permutation of 0..3");

  qcore::StateVector state = prepare_initial(variant);
  for (int voter : voter_order) state = run_sequence(state, voter_operations_b(variant, voter, votes.vetoes(voter)));
  const qcore::OutcomeDistribution dist = qcore::measure_probs(run_sequence(state, adjoint(variant.preparation)));
  std::string readout = dist.modal();
  const Decision decision = verdict_b(readout);
  return {std::move(state), dist, std::move(readout), decision};
}

}  // namespace qveto::protocols
