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

#include "qveto/cli/tables.hpp"

#include <cmath>
#include <cstdio>

#include "qveto/protocols/protocol_a.hpp"
#include "qveto/protocols/protocol_b.hpp"

namespace qveto::cli {

namespace {

const KetTerms kPhiPlus{{"00", 1}, {"11", 1}};
const KetTerms kPhiMinus{{"00", 1}, {"11", -1}};

std::vector<OracleRow> bell_rows() {
  return {
      {3, 1, "0000", 1, kPhiPlus, false, "00", 0.985, 99.41},
      {3, 2, "1000", 1, kPhiMinus, true, "10", 0.878, 96.50},
      {3, 3, "0011", 1, kPhiPlus, false, "00", 0.981, 98.65},
      {3, 3, "0011", 2, kPhiMinus, true, "10", 0.911, 96.23},
      {3, 4, "1101", 1, kPhiMinus, true, "10", 0.915, 98.44},
      {3, 5, "1111", 1, kPhiPlus, false, "00", 0.980, 98.98},
      {3, 5, "1111", 2, kPhiPlus, false, "00", 0.981, 99.44},
      {3, 5, "1111", 3, kPhiMinus, true, "10", 0.964, 95.19},
  };
}

std::vector<OracleRow> cluster_rows() {
  return {
      {4, 1, "0000", 1, {{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}}, false, "0000", 0.970, 97.63},
      {4, 2, "1000", 1, {{"0101", 1}, {"0110", -1}, {"1001", -1}, {"1010", -1}}, true, "1111", 0.873, 89.06},
      {4, 2, "0100", 1, {{"0100", 1}, {"0111", -1}, {"1000", 1}, {"1011", 1}}, true, "0110", 0.887, 93.23},
      {4, 2, "0010", 1, {{"0100", -1}, {"0111", 1}, {"1000", 1}, {"1011", 1}}, true, "1110", 0.779, 91.17},
      {4, 2, "0001", 1, {{"0101", -1}, {"0110", 1}, {"1001", -1}, {"1010", -1}}, true, "0111", 0.819, 88.79},
      {4, 3, "1100", 1, {{"0001", -1}, {"0010", -1}, {"1101", 1}, {"1110", -1}}, true, "1001", 0.905, 92.69},
      {4, 3, "1010", 1, {{"0001", 1}, {"0010", 1}, {"1101", 1}, {"1110", -1}}, true, "0001", 0.941, 95.32},
      {4, 3, "1001", 1, {{"0000", 1}, {"0011", 1}, {"1100", -1}, {"1111", 1}}, true, "1000", 0.926, 94.95},
      {4, 3, "0110", 1, {{"0000", -1}, {"0011", -1}, {"1100", 1}, {"1111", -1}}, true, "1000", 0.930, 94.58},
      {4, 3, "0101", 1, {{"0001", -1}, {"0010", -1}, {"1101", -1}, {"1110", 1}}, true, "0001", 0.919, 94.04},
      {4, 3, "0011", 1, {{"0001", -1}, {"0010", -1}, {"1101", 1}, {"1110", -1}}, true, "1001", 0.917, 93.12},
      {4, 4, "1110", 1, {{"0101", -1}, {"0110", 1}, {"1001", -1}, {"1010", -1}}, true, "0111", 0.886, 92.22},
      {4, 4, "1101", 1, {{"0100", -1}, {"0111", 1}, {"1000", 1}, {"1011", 1}}, true, "1110", 0.882, 91.15},
      {4, 4, "1011", 1, {{"0100", -1}, {"0111", 1}, {"1000", -1}, {"1011", -1}}, true, "0110", 0.905, 91.28},
      {4, 4, "0111", 1, {{"0101", -1}, {"0110", 1}, {"1001", 1}, {"1010", 1}}, true, "1111", 0.829, 88.89},
      {4, 5, "1111", 1, {{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}}, false, "0000", 0.964, 96.85},
  };
}

std::vector<OracleRow> ghz_rows() {
  return {
      {5, 1, "0000", 1, {{"000", 1}, {"111", 1}}, false, "000", 0.972, 97.67},
      {5, 2, "1000", 1, {{"010", 1}, {"101", 1}}, true, "010", 0.916, 94.79},
      {5, 2, "0100", 1, {{"011", 1}, {"100", 1}}, true, "011", 0.934, 91.96},
      {5, 2, "0010", 1, {{"011", -1}, {"100", 1}}, true, "111", 0.850, 90.72},
      {5, 2, "0001", 1, {{"010", -1}, {"101", 1}}, true, "110", 0.900, 93.44},
      {5, 3, "1100", 1, {{"001", 1}, {"110", 1}}, true, "001", 0.912, 94.52},
      {5, 3, "1010", 1, {{"001", -1}, {"110", 1}}, true, "101", 0.897, 92.53},
      {5, 3, "1001", 1, {{"000", -1}, {"111", 1}}, true, "100", 0.955, 95.37},
      {5, 3, "0110", 1, {{"000", -1}, {"111", 1}}, true, "100", 0.954, 94.82},
      {5, 3, "0101", 1, {{"001", -1}, {"110", 1}}, true, "101", 0.889, 92.45},
      {5, 3, "0011", 1, {{"001", -1}, {"110", -1}}, true, "001", 0.921, 93.54},
      {5, 4, "1110", 1, {{"010", -1}, {"101", 1}}, true, "110", 0.855, 93.85},
      {5, 4, "1101", 1, {{"011", -1}, {"100", 1}}, true, "111", 0.863, 89.99},
      {5, 4, "1011", 1, {{"011", -1}, {"100", -1}}, true, "011", 0.889, 93.41},
      {5, 4, "0111", 1, {{"010", -1}, {"101", -1}}, true, "010", 0.932, 94.25},
      {5, 5, "1111", 1, {{"000", -1}, {"111", -1}}, false, "000", 0.965, 97.45},
  };
}

constexpr double kTolerance = 1e-9;

}  // namespace

const std::vector<OracleRow>& oracle_rows(int table) {
  static const std::vector<OracleRow> bell = bell_rows();
  static const std::vector<OracleRow> cluster = cluster_rows();
  static const std::vector<OracleRow> ghz = ghz_rows();
  switch (table) {
    case 3:
      return bell;
    case 4:
      return cluster;
    case 5:
      return ghz;
    default:
      throw InputError("table must be 3, 4 or 5");
  }
}

qcore::StateVector ket_state(const KetTerms& terms) {
  if (terms.empty()) throw InputError("empty ket");
  const int n = static_cast<int>(terms.front().first.size());
  qcore::CVector<double> amps = qcore::CVector<double>::Zero(Eigen::Index{1} << n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(terms.size()));
  for (const auto& [label, sign] : terms) amps(static_cast<Eigen::Index>(qcore::index_of(label))) = sign * scale;
  return qcore::StateVector::from_amplitudes(std::move(amps));
}

std::string format_ket(const qcore::StateVector& state) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    if (std::abs(state[i]) > kTolerance) support.push_back(i);
  }
  const double magnitude = std::abs(state[support.front()]);
  bool uniform_real = true;
  for (Eigen::Index i : support) {
    if (std::abs(std::abs(state[i]) - magnitude) > kTolerance || std::abs(state[i].imag()) > kTolerance) {
      uniform_real = false;
    }
  }
  std::string out;
  char buf[64];
  if (uniform_real) {
    out = "(";
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (k) out += " ";
      out += state[support[k]].real() > 0 ? "+" : "-";
      out += "|" + qcore::label_of(static_cast<std::uint64_t>(support[k]), state.n_qubits()) + ">";
    }
    const double norm = 1.0 / magnitude;
    const double squared = norm * norm;
    if (std::abs(squared - std::round(squared)) < 1e-6 && std::round(squared) != 1.0) {
      const long s = std::lround(squared);
      const long root = std::lround(std::sqrt(static_cast<double>(s)));
      if (root * root == s) {
        std::snprintf(buf, sizeof(buf), ")/%ld", root);
      } else {
        std::snprintf(buf, sizeof(buf), ")/sqrt%ld", s);
      }
      out += buf;
    } else {
      out += ")";
    }
    return out;
  }
  for (Eigen::Index i : support) {
    std::snprintf(buf, sizeof(buf), "%s(%+.6f%+.6fi)|", out.empty() ? "" : " ", state[i].real(), state[i].imag());
    out += buf + qcore::label_of(static_cast<std::uint64_t>(i), state.n_qubits()) + ">";
  }
  return out;
}

std::vector<TableRowResult> reproduce_table(int table) {
  std::vector<TableRowResult> out;
  for (const OracleRow& row : oracle_rows(table)) {
    const auto votes = protocols::VoteVector::from_bits(row.votes);
    TableRowResult result{row, qcore::basis_state(1, "0"), "", 0.0, false, "", true, ""};
    if (table == 3) {
      const protocols::ProtocolARound round = protocols::protocol_a_round(votes, row.iteration - 1);
      result.final_state = round.pre_measure_state;
      result.readout = round.distribution.modal();
      result.readout_probability = round.distribution.probability(result.readout);
      result.conclusive = protocols::bell_outcome_of(result.readout) == protocols::BellOutcome::phi_minus;
      result.decision = result.conclusive ? "Conclusive" : "Inconclusive";
    } else {
      const auto variant =
          protocols::make_variant(table == 4 ? protocols::Variant::cluster4 : protocols::Variant::ghz3);
      const protocols::ProtocolBResult run = protocols::protocol_b_run(votes, variant);
      result.final_state = run.final_state;
      result.readout = run.readout;
      result.readout_probability = run.distribution.probability(run.readout);
      result.conclusive = run.decision == protocols::Decision::not_unanimous;
      result.decision = std::string(protocols::to_string(run.decision));
    }

    std::string problems;
    if (!qcore::equal_up_to_global_phase(result.final_state, ket_state(row.final_state), kTolerance)) {
      problems += "final state " + format_ket(result.final_state) + " differs from expected; ";
    }
    if (result.readout != row.readout) problems += "readout " + result.readout + " != " + row.readout + "; ";
    if (std::abs(result.readout_probability - 1.0) > kTolerance) problems += "readout probability is not 1; ";
    if (result.conclusive != row.conclusive) problems += "conclusive flag differs; ";
    result.matches = problems.empty();
    result.mismatch = problems;
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace qveto::cli
