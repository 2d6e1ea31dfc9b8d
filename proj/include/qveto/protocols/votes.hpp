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

#ifndef QVETO_PROTOCOLS_VOTES_HPP
#define QVETO_PROTOCOLS_VOTES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qveto/qcore/gate.hpp"

namespace qveto::protocols {

/// Secret veto bits of n >= 2 voters; voter 1 is index 0.
class VoteVector {
 public:
  explicit VoteVector(std::vector<bool> votes);

  /// "1010" -> voters 1 and 3 veto.
  static VoteVector from_bits(std::string_view bits);

  /// All 2^n vote vectors, in increasing order of their bitstrings.
  static std::vector<VoteVector> enumerate(int n);

  int size() const { return static_cast<int>(votes_.size()); }
  bool vetoes(int voter_index) const { return votes_.at(static_cast<std::size_t>(voter_index)); }
  int veto_count() const;
  std::string bits() const;

  friend bool operator==(const VoteVector&, const VoteVector&) = default;

 private:
  std::vector<bool> votes_;
};

enum class Decision { pass, reject, unanimous, not_unanimous };

std::string_view to_string(Decision decision);

/// One gate application inside a protocol round.
struct Instruction {
  qcore::GateMatrix gate;
  qcore::QubitList targets;
};

using GateSequence = std::vector<Instruction>;

/// Reverse order, each gate replaced by its adjoint.
GateSequence adjoint(const GateSequence& sequence);

qcore::StateVector run_sequence(qcore::StateVector state, const GateSequence& sequence);

}  // namespace qveto::protocols

#endif  // QVETO_PROTOCOLS_VOTES_HPP
