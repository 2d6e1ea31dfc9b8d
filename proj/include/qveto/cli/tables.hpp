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

#ifndef QVETO_CLI_TABLES_HPP
#define QVETO_CLI_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "qveto/qcore/state.hpp"

namespace qveto::cli {

/// Signed ket terms sharing one normalization, e.g. {{"00", +1}, {"11", -1}}.
using KetTerms = std::vector<std::pair<std::string, int>>;

/// Expected noiseless outcome for one row of a reference outcome table.
struct OracleRow {
  int table = 3;  // 3: Bell, 4: cluster, 5: GHZ
  int case_no = 1;
  std::string votes;
  int iteration = 1;
  KetTerms final_state;
  bool conclusive = false;
  std::string readout;
  /// Measured hardware columns, reported for comparison only.
  double device_probability = 0.0;
  double device_fidelity_pct = 0.0;
};

const std::vector<OracleRow>& oracle_rows(int table);

/// Equal-magnitude superposition of the listed basis states.
qcore::StateVector ket_state(const KetTerms& terms);

/// "(+|00> -|11>)/sqrt2" style rendering; falls back to numeric
/// coefficients when magnitudes differ or amplitudes are complex.
std::string format_ket(const qcore::StateVector& state);

struct TableRowResult {
  OracleRow expected;
  qcore::StateVector final_state;
  std::string readout;
  double readout_probability = 0.0;
  bool conclusive = false;
  std::string decision;
  bool matches = false;
  std::string mismatch;
};

/// Recomputes every row of outcome table 3, 4 or 5 noiselessly and
/// compares it to the oracle: final state up to global phase (1e-9 per
/// amplitude), readout string with probability 1 (1e-9), conclusive flag.
std::vector<TableRowResult> reproduce_table(int table);

}  // namespace qveto::cli

#endif  // QVETO_CLI_TABLES_HPP
