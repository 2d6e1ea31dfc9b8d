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

#include "qveto/protocols/votes.hpp"

#include <algorithm>

namespace qveto::protocols {

VoteVector::VoteVector(std::vector<bool> votes) : votes_(std::move(votes)) {
  if (votes_.size() < 2) throw InputError("an election needs at least 2 voters");
}

VoteVector VoteVector::from_bits(std::string_view bits) {
  std::vector<bool> votes;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InputError("votes must be a bitstring of 0/1, got '" + std::string(bits) + "'");
    votes.push_back(c == '1');
  }
  return VoteVector(std::move(votes));
}

std::vector<VoteVector> VoteVector::enumerate(int n) {
  if (n < 2 || n > 20) throw InputError("enumerate supports 2..20 voters");
  std::vector<VoteVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(VoteVector::from_bits(qcore::label_of(mask, n)));
  }
  return out;
}

int VoteVector::veto_count() const { return static_cast<int>(std::count(votes_.begin(), votes_.end(), true)); }

std::string VoteVector::bits() const {
  std::string s;
  for (bool v : votes_) s.push_back(v ? '1' : '0');
  return s;
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::pass:
      return "Pass";
    case Decision::reject:
      return "Reject";
    case Decision::unanimous:
      return "Unanimous";
    case Decision::not_unanimous:
      return "NotUnanimous";
  }
  return "?";
}

GateSequence adjoint(const GateSequence& sequence) {
  GateSequence out;
  out.reserve(sequence.size());
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) out.push_back({it->gate.adjoint(), it->targets});
  return out;
}

qcore::StateVector run_sequence(qcore::StateVector state, const GateSequence& sequence) {
  for (const auto& ins : sequence) state = qcore::apply_gate(state, ins.gate, ins.targets);
  return state;
}

}  // namespace qveto::protocols
