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

#include "qveto/election/election.hpp"
#include "qveto/election/serialize.hpp"
#include "qveto/noise/calibration.hpp"

namespace {

using namespace qveto;
using namespace qveto::election;
using protocols::Decision;
using protocols::VoteVector;

const std::string kCalibration = std::string(QVETO_DATA_DIR) + "/casablanca_calibration.json";

const noise::ChannelKind kKinds[] = {noise::ChannelKind::amplitude_damping, noise::ChannelKind::phase_damping,
                                     noise::ChannelKind::depolarizing, noise::ChannelKind::bit_flip};
const Protocol kProtocols[] = {Protocol::a, Protocol::b_ghz, Protocol::b_cluster};

std::vector<double> sweep_strengths() {
  std::vector<double> s;
  for (int i = 0; i <= 10; ++i) s.push_back(0.05 * i);
  return s;
}

ElectionConfig config_for(Protocol protocol, std::uint64_t seed = 1) {
  ElectionConfig c;
  c.protocol = protocol;
  c.seed = seed;
  return c;
}

/// Noiseless readouts straight from the protocol layer.
std::vector<std::string> ideal_readouts(Protocol protocol, const VoteVector& votes) {
  std::vector<std::string> out;
  if (protocol == Protocol::a) {
    for (const auto& it : protocols::protocol_a_run(votes).iterations) out.push_back(it.readout);
  } else {
    const auto v = protocols::make_variant(protocol == Protocol::b_ghz ? protocols::Variant::ghz3
                                                                      : protocols::Variant::cluster4);
    out.push_back(protocols::protocol_b_run(votes, v).readout);
  }
  return out;
}

TEST(RunElection, NoiselessExamples) {
  const auto a = run_election(config_for(Protocol::a), VoteVector::from_bits("1101"));
  EXPECT_EQ(a.decision, Decision::reject);
  ASSERT_EQ(a.iterations().size(), 1u);
  EXPECT_EQ(a.iterations()[0].modal_outcome, "10");
  EXPECT_NEAR(a.iterations()[0].success_probability, 1.0, 1e-9);
  EXPECT_NEAR(a.iterations()[0].fidelity, 1.0, 1e-9);
  EXPECT_EQ(a.iterations()[0].counts.counts.at("10"), 8192);

  const auto c = run_election(config_for(Protocol::b_cluster), VoteVector::from_bits("0000"));
  EXPECT_EQ(c.iterations()[0].modal_outcome, "0000");
  EXPECT_EQ(c.decision, Decision::unanimous);
  EXPECT_NEAR(c.iterations()[0].fidelity, 1.0, 1e-9);
}

TEST(RunElection, ZeroNoiseMatchesProtocolLayer) {
  for (Protocol p : kProtocols) {
    for (const auto& votes : VoteVector::enumerate(4)) {
      const auto report = run_election(config_for(p), votes);
      const auto ideal = ideal_readouts(p, votes);
      ASSERT_EQ(report.iterations().size(), ideal.size()) << to_string(p) << " " << votes.bits();
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        EXPECT_EQ(report.iterations()[i].modal_outcome, ideal[i]);
        EXPECT_EQ(report.iterations()[i].ideal_outcome, ideal[i]);
        EXPECT_NEAR(report.iterations()[i].fidelity, 1.0, 1e-9);
        EXPECT_NEAR(report.iterations()[i].success_probability, 1.0, 1e-9);
      }
    }
  }
}

TEST(RunElection, SeedDeterminism) {
  ElectionConfig c = config_for(Protocol::b_ghz, 77);
  c.noise = uniform_noise(noise::ChannelKind::depolarizing, 0.2, Placement::hop);
  c.repeats = 3;
  const auto votes = VoteVector::from_bits("0110");
  const auto first = run_election(c, votes);
  const auto second = run_election(c, votes);
  EXPECT_TRUE(first == second);
  EXPECT_EQ(to_json(first).dump(), to_json(second).dump());
  c.seed = 78;
  EXPECT_NE(run_election(c, votes).iterations()[0].counts, first.iterations()[0].counts);
}

TEST(RunElection, RepeatsUseConsecutiveSeeds) {
  ElectionConfig c = config_for(Protocol::a, 40);
  c.repeats = 4;
  c.noise = uniform_noise(noise::ChannelKind::bit_flip, 0.1, Placement::hop);
  const auto report = run_election(c, VoteVector::from_bits("0001"));
  ASSERT_EQ(report.repeats.size(), 4u);
  for (int r = 0; r < 4; ++r) {
    EXPECT_EQ(report.repeats[static_cast<std::size_t>(r)].seed, 40u + static_cast<unsigned>(r));
    ElectionConfig single = c;
    single.seed = 40 + static_cast<std::uint64_t>(r);
    single.repeats = 1;
    EXPECT_TRUE(run_election(single, VoteVector::from_bits("0001")).repeats.front() ==
                report.repeats[static_cast<std::size_t>(r)]);
  }
  EXPECT_EQ(report.repeats_summary.count, 4);
}

TEST(RunElection, TranscriptShape) {
  for (Protocol p : kProtocols) {
    for (const std::string bits : {"0000", "0011", "1111"}) {
      const auto report = run_election(config_for(p), VoteVector::from_bits(bits));
      const auto& transcript = report.transcript();
      const int iterations = static_cast<int>(report.iterations().size());
      EXPECT_EQ(static_cast<int>(transcript.readout_counts.size()), iterations);
      int transfers = 0;
      int announcements = 0;
      for (const auto& e : transcript.events) {
        (e.payload == Payload::qubit_transfer ? transfers : announcements) += 1;
      }
      EXPECT_EQ(transfers, 5 * iterations);
      EXPECT_EQ(announcements, iterations);
      for (int i = 1; i <= iterations; ++i) {
        EXPECT_EQ(transcript.hop_path(i), (std::vector<std::string>{"VA", "V1", "V2", "V3", "V4", "VA"}));
      }
    }
  }
  ElectionConfig wide = config_for(Protocol::a);
  wide.n_voters = 6;
  const auto report = run_election(wide, VoteVector::from_bits("000000"));
  EXPECT_EQ(report.iterations().size(), 4u);
  EXPECT_EQ(report.transcript().hop_path(4),
            (std::vector<std::string>{"VA", "V1", "V2", "V3", "V4", "V5", "V6", "VA"}));
}

TEST(RunElection, RejectsBadConfigurations) {
  EXPECT_THROW(run_election(config_for(Protocol::b_ghz), VoteVector::from_bits("00000")), InputError);
  ElectionConfig c = config_for(Protocol::a);
  c.shots = 0;
  EXPECT_THROW(run_election(c, VoteVector::from_bits("0000")), InputError);
  c = config_for(Protocol::a);
  c.n_voters = 5;
  EXPECT_THROW(run_election(c, VoteVector::from_bits("0000")), InputError);
  c = config_for(Protocol::a);
  c.repeats = 0;
  EXPECT_THROW(run_election(c, VoteVector::from_bits("0000")), InputError);
}

TEST(FidelityVsIdeal, Examples) {
  const auto bell = protocols::protocol_a_round(VoteVector::from_bits("0000"), 0).pre_measure_state;
  EXPECT_NEAR(fidelity_vs_ideal(qcore::to_density(bell), bell), 1.0, 1e-12);
  EXPECT_THROW(fidelity_vs_ideal(qcore::DensityMatrix::maximally_mixed(3), bell), InputError);

  ElectionConfig c = config_for(Protocol::a);
  c.noise = uniform_noise(noise::ChannelKind::phase_damping, 1.0, Placement::hop);
  const auto report = run_election(c, VoteVector::from_bits("0000"));
  EXPECT_LT(report.iterations()[0].fidelity, 0.6);
  // Coherence of the travel qubit vanishes, leaving an even classical mixture.
  EXPECT_NEAR(report.iterations()[0].fidelity, 0.5, 1e-12);

  for (noise::ChannelKind kind : kKinds) {
    for (Placement placement : {Placement::hop, Placement::gate}) {
      ElectionConfig z = config_for(Protocol::b_cluster);
      z.noise = uniform_noise(kind, 0.0, placement);
      EXPECT_NEAR(run_election(z, VoteVector::from_bits("1010")).iterations()[0].fidelity, 1.0, 1e-9);
    }
  }
}

// Oracle by hand for hop dephasing with four voters: five transits each scale
// a travel qubit's coherence by sqrt(1 - lambda), so r = (1 - lambda)^(5/2).
// Bell: (1 + r) / 2. GHZ carries both travel qubits in one coherence: (1 + r^2) / 2.
// Cluster splits into two dephased Bell-like pairs: ((1 + r) / 2)^2.
TEST(NoiseSweep, PhaseDampingMatchesClosedForm) {
  const auto votes = VoteVector::from_bits("0000");
  const auto strengths = sweep_strengths();
  const auto a = noise_sweep(Protocol::a, votes, noise::ChannelKind::phase_damping, strengths, Placement::hop, 5);
  const auto g = noise_sweep(Protocol::b_ghz, votes, noise::ChannelKind::phase_damping, strengths, Placement::hop, 5);
  const auto c =
      noise_sweep(Protocol::b_cluster, votes, noise::ChannelKind::phase_damping, strengths, Placement::hop, 5);
  for (std::size_t i = 0; i < strengths.size(); ++i) {
    const double r = std::pow(1.0 - strengths[i], 2.5);
    EXPECT_NEAR(a[i].fidelity, (1.0 + r) / 2.0, 1e-9);
    EXPECT_NEAR(g[i].fidelity, (1.0 + r * r) / 2.0, 1e-9);
    EXPECT_NEAR(c[i].fidelity, std::pow((1.0 + r) / 2.0, 2), 1e-9);
    // At zero strength all three equal 1 up to rounding.
    EXPECT_GE(a[i].fidelity + 1e-12, g[i].fidelity);
    EXPECT_GE(g[i].fidelity + 1e-12, c[i].fidelity);
    if (strengths[i] > 0.0) {
      EXPECT_GT(a[i].fidelity, g[i].fidelity);
      EXPECT_GT(g[i].fidelity, c[i].fidelity);
    }
  }
}

TEST(NoiseSweep, SingleZeroStrength) {
  for (Protocol p : kProtocols) {
    const auto rows = noise_sweep(p, VoteVector::from_bits("0000"), noise::ChannelKind::bit_flip, {0.0}, Placement::hop, 3);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].fidelity, 1.0, 1e-9);
  }
}

TEST(NoiseSweep, OrderingUnderPhaseDampingAtPointOne) {
  const auto votes = VoteVector::from_bits("0000");
  const double fa = noise_sweep(Protocol::a, votes, noise::ChannelKind::phase_damping, {0.1}, Placement::hop, 1)[0].fidelity;
  const double fg =
      noise_sweep(Protocol::b_ghz, votes, noise::ChannelKind::phase_damping, {0.1}, Placement::hop, 1)[0].fidelity;
  const double fc =
      noise_sweep(Protocol::b_cluster, votes, noise::ChannelKind::phase_damping, {0.1}, Placement::hop, 1)[0].fidelity;
  EXPECT_GE(fa, fg);
  EXPECT_GE(fg, fc);
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1] + 1e-12) return false;
  }
  return true;
}

TEST(NoiseSweep, MonotoneForUnanimousNoVetoElection) {
  for (Protocol p : kProtocols) {
    for (noise::ChannelKind kind : kKinds) {
      std::vector<double> f;
      for (const auto& row : noise_sweep(p, VoteVector::from_bits("0000"), kind, sweep_strengths(), Placement::hop, 9)) {
        f.push_back(row.fidelity);
      }
      EXPECT_TRUE(non_increasing(f)) << to_string(p) << " " << noise::to_string(kind);
    }
  }
}

// Protocol B always reports its single round, so every vote vector is
// monotone. Protocol A reports the round it stopped in; strong noise can move
// that stop, so the assertable property is monotonicity within a fixed round.
TEST(NoiseSweep, MonotoneForEveryVoteVectorWithinAFixedRound) {
  for (Protocol p : kProtocols) {
    for (noise::ChannelKind kind : kKinds) {
      for (const auto& votes : VoteVector::enumerate(4)) {
        std::map<int, std::vector<double>> by_round;
        for (const auto& row : noise_sweep(p, votes, kind, sweep_strengths(), Placement::hop, 9)) {
          by_round[row.iteration].push_back(row.fidelity);
        }
        if (p != Protocol::a) {
          EXPECT_EQ(by_round.size(), 1u);
        }
        for (const auto& [round, f] : by_round) {
          EXPECT_TRUE(non_increasing(f)) << to_string(p) << " " << noise::to_string(kind) << " " << votes.bits()
                                         << " round " << round;
        }
      }
    }
  }
}

TEST(NoiseSweep, BitFlipOnProtocolAIsMonotone) {
  std::vector<double> f;
  for (const auto& row :
       noise_sweep(Protocol::a, VoteVector::from_bits("0000"), noise::ChannelKind::bit_flip, sweep_strengths(), Placement::hop, 2)) {
    f.push_back(row.fidelity);
  }
  EXPECT_TRUE(non_increasing(f));
  EXPECT_LT(f.back(), f.front());
}

TEST(Robustness, SmallNoiseKeepsNoiselessReadouts) {
  for (Protocol p : kProtocols) {
    for (noise::ChannelKind kind : kKinds) {
      for (double s : {0.005, 0.01}) {
        ElectionConfig c = config_for(p, 31);
        c.noise = uniform_noise(kind, s, Placement::hop);
        for (const auto& votes : VoteVector::enumerate(4)) {
          const auto report = run_election(c, votes);
          const auto ideal = ideal_readouts(p, votes);
          ASSERT_EQ(report.iterations().size(), ideal.size());
          for (std::size_t i = 0; i < ideal.size(); ++i) {
            EXPECT_EQ(report.iterations()[i].modal_outcome, ideal[i])
                << to_string(p) << " " << noise::to_string(kind) << " " << s << " " << votes.bits();
          }
        }
      }
    }
  }
}

TEST(DeviceModel, CalibratedRunsStayInBand) {
  const auto cal = noise::load_calibration(kCalibration);
  for (Protocol p : kProtocols) {
    ElectionConfig c = config_for(p, 11);
    c.noise = noise::device_model_from_calibration(cal, default_device_mapping(p));
    for (const auto& votes : VoteVector::enumerate(4)) {
      const auto report = run_election(c, votes);
      for (const auto& it : report.iterations()) {
        EXPECT_GE(it.success_probability, p == Protocol::a ? 0.85 : 0.75) << to_string(p) << " " << votes.bits();
        EXPECT_LE(it.success_probability, 1.0);
        EXPECT_GE(it.fidelity, 0.80);
        EXPECT_LE(it.fidelity, 1.0);
      }
      ElectionConfig noiseless = config_for(p, 11);
      EXPECT_EQ(report.decision, run_election(noiseless, votes).decision) << to_string(p) << " " << votes.bits();
    }
  }
}

TEST(DeviceModel, ThreeVetoRepeatsHaveSmallSpread) {
  ElectionConfig c = config_for(Protocol::a, 100);
  c.noise = noise::device_model_from_calibration(noise::load_calibration(kCalibration),
                                                 default_device_mapping(Protocol::a));
  c.repeats = 10;
  const auto report = run_election(c, VoteVector::from_bits("1110"));
  EXPECT_EQ(report.repeats_summary.count, 10);
  EXPECT_LT(report.repeats_summary.stddev, 0.03);
  EXPECT_GT(report.repeats_summary.mean, 0.9);
  EXPECT_EQ(report.decision, Decision::reject);
}

TEST(DeviceModel, DefaultMappingsAreDerivable) {
  const auto cal = noise::load_calibration(kCalibration);
  for (Protocol p : kProtocols) {
    const auto mapping = default_device_mapping(p);
    EXPECT_EQ(static_cast<int>(mapping.role_to_qubit.size()), register_width(p));
    EXPECT_NO_THROW(noise::derived_strengths(cal, mapping));
  }
  auto strict = default_device_mapping(Protocol::b_cluster);
  strict.pair_policy = noise::PairPolicy::strict;
  EXPECT_THROW(noise::derived_strengths(cal, strict), ConfigurationError);
}

TEST(Placement, GateNoiseDegradesFidelity) {
  ElectionConfig c = config_for(Protocol::b_ghz);
  c.noise = uniform_noise(noise::ChannelKind::depolarizing, 0.05, Placement::gate);
  const auto report = run_election(c, VoteVector::from_bits("1000"));
  EXPECT_LT(report.iterations()[0].fidelity, 1.0 - 1e-3);
  EXPECT_EQ(report.iterations()[0].modal_outcome, "010");
}

}  // namespace
