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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qveto/noise/calibration.hpp"
#include "qveto/noise/kraus.hpp"
#include "qveto/noise/model.hpp"
#include "qveto/qcore.hpp"
#include "support.hpp"

namespace {

using namespace qveto;
using namespace qveto::qcore;
using namespace qveto::noise;
namespace ts = qveto::test_support;

const std::string kCalibration = std::string(QVETO_DATA_DIR) + "/casablanca_calibration.json";

DensityMatrix dm(const std::string& label) { return to_density(basis_state(static_cast<int>(label.size()), label)); }

DensityMatrix plus_state() { return apply_gate_dm(dm("0"), gates::h(), {0}); }

double max_abs_diff(const DensityMatrix& a, const CMatrix<double>& b) {
  return (a.entries() - b).cwiseAbs().maxCoeff();
}

CMatrix<double> diag2(double a, double b) {
  CMatrix<double> m = CMatrix<double>::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

const ChannelKind kKinds[] = {ChannelKind::amplitude_damping, ChannelKind::phase_damping, ChannelKind::depolarizing,
                              ChannelKind::bit_flip};

TEST(AmplitudeDamping, Examples) {
  std::mt19937_64 rng(21);
  const auto rho = ts::random_density(1, rng);
  EXPECT_EQ(apply_channel(rho, amplitude_damping(0.0), 0), rho);
  EXPECT_LT(max_abs_diff(apply_channel(dm("1"), amplitude_damping(1.0), 0), dm("0").entries()), 1e-15);
  // Oracle by hand: K0 = diag(1, sqrt(1-g)), K1 = sqrt(g)|0><1|; on |1><1| gives diag(g, 1-g).
  EXPECT_LT(max_abs_diff(apply_channel(dm("1"), amplitude_damping(0.5), 0), diag2(0.5, 0.5)), 1e-15);
  EXPECT_THROW(amplitude_damping(1.5), InputError);
  EXPECT_THROW(amplitude_damping(-0.1), InputError);
}

TEST(PhaseDamping, Examples) {
  EXPECT_TRUE(phase_damping(0.0).is_identity());
  EXPECT_LT(max_abs_diff(apply_channel(plus_state(), phase_damping(1.0), 0), diag2(0.5, 0.5)), 1e-15);
  // Off-diagonal scales by sqrt(1 - lambda): 0.5 * sqrt(0.5).
  const auto half = apply_channel(plus_state(), phase_damping(0.5), 0);
  EXPECT_NEAR(std::abs(half(0, 1)), 0.5 * std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(half(0, 0).real(), 0.5, 1e-15);
  EXPECT_THROW(phase_damping(2.0), InputError);
}

TEST(Depolarizing, Examples) {
  EXPECT_TRUE(depolarizing(0.0).is_identity());
  EXPECT_LT(max_abs_diff(apply_channel(dm("0"), depolarizing(1.0), 0), diag2(0.5, 0.5)), 1e-15);
  // (1 - p) |0><0| + p I/2 at p = 0.4.
  EXPECT_LT(max_abs_diff(apply_channel(dm("0"), depolarizing(0.4), 0), diag2(0.8, 0.2)), 1e-15);
  EXPECT_THROW(depolarizing(1.01), InputError);
}

TEST(BitFlip, Examples) {
  EXPECT_TRUE(bit_flip(0.0).is_identity());
  EXPECT_LT(max_abs_diff(apply_channel(dm("0"), bit_flip(1.0), 0), dm("1").entries()), 1e-15);
  EXPECT_LT(max_abs_diff(apply_channel(dm("0"), bit_flip(0.3), 0), diag2(0.7, 0.3)), 1e-15);
  EXPECT_THROW(bit_flip(-1e-3), InputError);
}

TEST(Channels, CompletenessAtRandomStrengths) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (ChannelKind kind : kKinds) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto ch = make_channel(kind, unit(rng));
      CMatrix<double> sum = CMatrix<double>::Zero(2, 2);
      for (const auto& k : ch.operators()) sum += k.adjoint() * k;
      EXPECT_LT((sum - CMatrix<double>::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-9) << to_string(kind);
    }
  }
}

TEST(Channels, StrengthZeroIsBitExactIdentity) {
  std::mt19937_64 rng(23);
  for (ChannelKind kind : kKinds) {
    const auto ch = make_channel(kind, 0.0);
    EXPECT_TRUE(ch.is_identity()) << to_string(kind);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = ts::random_density(3, rng);
      for (int q = 0; q < 3; ++q) EXPECT_TRUE(apply_channel(rho, ch, q) == rho) << to_string(kind);
    }
  }
}

TEST(Channels, FullDepolarizingGivesMaximallyMixed) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto out = apply_channel(ts::random_density(1, rng), depolarizing(1.0), 0);
    EXPECT_LT(max_abs_diff(out, diag2(0.5, 0.5)), 1e-9);
  }
}

TEST(Channels, PreserveTraceAndPositivity) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (ChannelKind kind : kKinds) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = ts::random_density(2, rng);
      // from_matrix validates Hermiticity, unit trace and positivity.
      EXPECT_NO_THROW(DensityMatrix::from_matrix(apply_channel(rho, make_channel(kind, unit(rng)), 1).entries()));
    }
  }
}

TEST(ApplyChannel, Examples) {
  std::mt19937_64 rng(26);
  const auto rho = ts::random_density(2, rng);
  EXPECT_EQ(apply_channel(rho, KrausChannel::identity(), 1), rho);
  EXPECT_LT(max_abs_diff(apply_channel(dm("00"), bit_flip(1.0), 1), dm("01").entries()), 1e-15);
  EXPECT_THROW(apply_channel(rho, bit_flip(0.1), 2), InputError);

  auto bell = apply_gate(basis_state(2, "00"), gates::h(), {0});
  bell = apply_gate(bell, gates::cnot(), {0, 1});
  const auto dephased = apply_channel(to_density(bell), phase_damping(1.0), 1);
  // Full dephasing removes the |00><11| coherence: overlap with phi+ is (0.5 + 0.5) / 2.
  EXPECT_NEAR(fidelity(to_density(bell), dephased), 0.5, 1e-12);
}

TEST(KrausChannel, RejectsIncompleteOperators) {
  EXPECT_THROW(KrausChannel::from_operators({diag2(1.0, 0.5)}), InputError);
  EXPECT_THROW(KrausChannel::from_operators({}), InputError);
}

TEST(ChannelKind, ParsesShortAndLongNames) {
  EXPECT_EQ(parse_channel_kind("phase"), ChannelKind::phase_damping);
  EXPECT_EQ(parse_channel_kind("amplitude_damping"), ChannelKind::amplitude_damping);
  EXPECT_EQ(parse_channel_kind("depol"), ChannelKind::depolarizing);
  EXPECT_EQ(parse_channel_kind("bitflip"), ChannelKind::bit_flip);
  EXPECT_FALSE(parse_channel_kind("gamma").has_value());
}

TEST(ReadoutFlip, Examples) {
  const auto d = OutcomeDistribution::from_map(2, {{"01", 0.25}, {"10", 0.75}});
  EXPECT_EQ(apply_readout_flip(d, {0.0, 0.0}).probabilities(), d.probabilities());
  EXPECT_EQ(apply_readout_flip(d, {}).probabilities(), d.probabilities());

  const auto one = OutcomeDistribution::from_map(1, {{"1", 1.0}});
  const auto uniform = apply_readout_flip(one, {0.5});
  EXPECT_NEAR(uniform.probability("0"), 0.5, 1e-15);
  EXPECT_NEAR(uniform.probability("1"), 0.5, 1e-15);

  const auto q0 = apply_readout_flip(OutcomeDistribution::from_map(1, {{"0", 1.0}}), {0.0374});
  EXPECT_NEAR(q0.probability("0"), 0.9626, 1e-15);
  EXPECT_NEAR(q0.probability("1"), 0.0374, 1e-15);

  EXPECT_THROW(apply_readout_flip(d, {0.1}), InputError);
}

TEST(ReadoutFlip, ActsPerQubitIndependently) {
  // Oracle: flip only qubit 1 of "00" with probability 0.2.
  const auto d = apply_readout_flip(OutcomeDistribution::from_map(2, {{"00", 1.0}}), {0.0, 0.2});
  EXPECT_NEAR(d.probability("00"), 0.8, 1e-15);
  EXPECT_NEAR(d.probability("01"), 0.2, 1e-15);
  EXPECT_NEAR(d.probability("10"), 0.0, 1e-15);
}

TEST(Calibration, LoadsBundledFile) {
  const Calibration cal = load_calibration(kCalibration);
  EXPECT_EQ(cal.device, "ibmq_casablanca");
  ASSERT_EQ(cal.records.size(), 4u);
  const auto* q0 = cal.find(0);
  ASSERT_NE(q0, nullptr);
  EXPECT_DOUBLE_EQ(q0->readout_error, 3.74e-2);
  EXPECT_DOUBLE_EQ(q0->pauli_x_error, 2.531e-4);
  EXPECT_DOUBLE_EQ(q0->t1_us, 108.61);
  const auto* q1 = cal.find(1);
  ASSERT_NE(q1, nullptr);
  EXPECT_EQ(q1->cnot_errors.size(), 3u);
  EXPECT_DOUBLE_EQ(q1->cnot_errors.at({1, 3}), 6.945e-3);
  EXPECT_DOUBLE_EQ(q1->cnot_errors.at({1, 2}), 9.599e-3);
  EXPECT_DOUBLE_EQ(q1->cnot_errors.at({1, 0}), 1.081e-2);
  EXPECT_DOUBLE_EQ(*cal.cnot_error(0, 1), 1.081e-2);
  EXPECT_DOUBLE_EQ(*cal.cnot_error(3, 1), 6.945e-3);
  EXPECT_FALSE(cal.cnot_error(2, 3).has_value());
}

TEST(Calibration, RoundTripsThroughJson) {
  const Calibration cal = load_calibration(kCalibration);
  const Calibration back = parse_calibration(to_json(cal));
  EXPECT_EQ(back.records, cal.records);
  EXPECT_EQ(back.date, cal.date);
}

std::string error_of(const std::string& text) {
  try {
    parse_calibration_text(text);
  } catch (const ConfigurationError& e) {
    return e.what();
  }
  return "";
}

TEST(Calibration, ReportsOffendingFieldPath) {
  const std::string good = R"({"qubits":[{"qubit_id":0,"t1_us":1,"t2_us":1,"frequency_ghz":5,
      "readout_error":0.01,"pauli_x_error":0.001,"cnot_errors":{}}]})";
  EXPECT_EQ(error_of(good), "");
  const std::string missing = R"({"qubits":[{"qubit_id":0,"t1_us":1,"t2_us":1,"frequency_ghz":5,
      "readout_error":0.01,"cnot_errors":{}}]})";
  EXPECT_NE(error_of(missing).find("qubits[0].pauli_x_error"), std::string::npos) << error_of(missing);
  const std::string bad_rate = R"({"qubits":[{"qubit_id":0,"t1_us":1,"t2_us":1,"frequency_ghz":5,
      "readout_error":1.5,"pauli_x_error":0.001,"cnot_errors":{}}]})";
  EXPECT_NE(error_of(bad_rate).find("qubits[0].readout_error"), std::string::npos);
  const std::string bad_key = R"({"qubits":[{"qubit_id":0,"t1_us":1,"t2_us":1,"frequency_ghz":5,
      "readout_error":0.1,"pauli_x_error":0.001,"cnot_errors":{"cz0_1":0.1}}]})";
  EXPECT_NE(error_of(bad_key).find("qubits[0].cnot_errors.cz0_1"), std::string::npos);
  EXPECT_NE(error_of("{not json").find("not valid JSON"), std::string::npos);
  EXPECT_THROW(load_calibration("/nonexistent/calibration.json"), ConfigurationError);
}

TEST(Calibration, ParsesCnotKeys) {
  EXPECT_EQ(parse_cnot_key("cx1_3"), std::make_pair(1, 3));
  EXPECT_EQ(cnot_key(2, 1), "cx2_1");
  EXPECT_THROW(parse_cnot_key("cx13"), ConfigurationError);
}

TEST(DeviceModel, UsesCnotRateForMappedPair) {
  const Calibration cal = load_calibration(kCalibration);
  const DeviceMapping mapping{{0, 1}, {{0, 1}}, PairPolicy::strict};
  const NoiseModel model = device_model_from_calibration(cal, mapping);
  const auto two = model.gate_channels_for({0, 1});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two.front()->kind(), ChannelKind::depolarizing);
  EXPECT_DOUBLE_EQ(two.front()->strength(), 1.081e-2);
  const auto single = model.gate_channels_for({1});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_DOUBLE_EQ(single.front()->strength(), 2.012e-4);
  EXPECT_EQ(model.readout_flip, (std::vector<double>{3.74e-2, 2.68e-2}));
  EXPECT_TRUE(model.hop_channels.empty());
}

TEST(DeviceModel, AllZeroCalibrationIsIdentity) {
  Calibration cal = load_calibration(kCalibration);
  for (auto& r : cal.records) {
    r.readout_error = 0.0;
    r.pauli_x_error = 0.0;
    for (auto& [pair, e] : r.cnot_errors) e = 0.0;
  }
  const DeviceMapping mapping{{1, 0, 2, 3}, {}, PairPolicy::strict};
  EXPECT_TRUE(device_model_from_calibration(cal, mapping).is_identity());
}

TEST(DeviceModel, StrictPolicyRejectsUncoupledPair) {
  const Calibration cal = load_calibration(kCalibration);
  const DeviceMapping mapping{{1, 0, 2, 3}, {{2, 3}}, PairPolicy::strict};
  EXPECT_THROW(device_model_from_calibration(cal, mapping), ConfigurationError);
}

TEST(DeviceModel, CouplingPathComposesEdgeErrors) {
  const Calibration cal = load_calibration(kCalibration);
  const DeviceMapping mapping{{1, 0, 2, 3}, {{2, 3}}, PairPolicy::coupling_path};
  const auto strengths = derived_strengths(cal, mapping);
  ASSERT_EQ(strengths.two_qubit.size(), 1u);
  // Physical Q2 and Q3 meet only through Q1: 1 - (1 - e21)(1 - e13).
  const double expected = 1.0 - (1.0 - 9.599e-3) * (1.0 - 6.945e-3);
  EXPECT_NEAR(strengths.two_qubit.front().second, expected, 1e-15);
}

TEST(DeviceModel, MissingRecordIsConfigurationError) {
  const Calibration cal = load_calibration(kCalibration);
  const DeviceMapping mapping{{0, 5}, {}, PairPolicy::strict};
  EXPECT_THROW(device_model_from_calibration(cal, mapping), ConfigurationError);
}

}  // namespace
