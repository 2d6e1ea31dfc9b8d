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

#include "qveto/election/election.hpp"

#include <cmath>
#include <random>

#include "qveto/qcore/fidelity.hpp"

namespace qveto::election {

using protocols::Decision;
using protocols::GateSequence;
using protocols::VoteVector;

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::a:
      return "a";
    case Protocol::b_ghz:
      return "b-ghz";
    case Protocol::b_cluster:
      return "b-cluster";
  }
  return "?";
}

std::optional<Protocol> parse_protocol(std::string_view name) {
  if (name == "a") return Protocol::a;
  if (name == "b-ghz") return Protocol::b_ghz;
  if (name == "b-cluster") return Protocol::b_cluster;
  return std::nullopt;
}

int register_width(Protocol protocol) {
  switch (protocol) {
    case Protocol::a:
      return 2;
    case Protocol::b_ghz:
      return 3;
    case Protocol::b_cluster:
      return 4;
  }
  return 0;
}

qcore::QubitList travel_qubits(Protocol protocol) {
  if (protocol == Protocol::a) return {protocols::kTravelQubit};
  return {1, 2};
}

noise::DeviceMapping default_device_mapping(Protocol protocol) {
  noise::DeviceMapping mapping;
  switch (protocol) {
    case Protocol::a:
      mapping.role_to_qubit = {0, 1};
      mapping.two_qubit_pairs = {{protocols::kHomeQubit, protocols::kTravelQubit}};
      break;
    case Protocol::b_ghz:
      mapping.role_to_qubit = {1, 0, 2};
      mapping.two_qubit_pairs = protocols::two_qubit_pairs(protocols::make_variant(protocols::Variant::ghz3));
      break;
    case Protocol::b_cluster:
      mapping.role_to_qubit = {1, 0, 2, 3};
      mapping.two_qubit_pairs = protocols::two_qubit_pairs(protocols::make_variant(protocols::Variant::cluster4));
      break;
  }
  mapping.pair_policy = noise::PairPolicy::coupling_path;
  return mapping;
}

void ElectionConfig::validate() const {
  if (n_voters < 2) throw InputError("an election needs at least 2 voters");
  if (protocol != Protocol::a && n_voters != protocols::kProtocolBVoters) {
    throw InputError("protocol " + std::string(to_string(protocol)) + " requires exactly 4 voters");
  }
  if (shots < 1) throw InputError("shots must be >= 1");
  if (repeats < 1) throw InputError("repeats must be >= 1");
  noise.validate();
  if (!noise.readout_flip.empty() && static_cast<int>(noise.readout_flip.size()) != register_width(protocol)) {
    throw ConfigurationError("readout flip vector does not match the register width");
  }
}

std::string_view to_string(Payload payload) {
  return payload == Payload::qubit_transfer ? "qubit-transfer" : "classical-announcement";
}

std::vector<std::string> Transcript::hop_path(int iteration) const {
  std::vector<std::string> path;
  for (const auto& e : events) {
    if (e.iteration != iteration || e.payload != Payload::qubit_transfer) continue;
    if (path.empty()) path.push_back(e.from);
    path.push_back(e.to);
  }
  return path;
}

std::string_view to_string(Placement placement) { return placement == Placement::hop ? "hop" : "gate"; }

std::optional<Placement> parse_placement(std::string_view name) {
  if (name == "hop") return Placement::hop;
  if (name == "gate") return Placement::gate;
  return std::nullopt;
}

noise::NoiseModel uniform_noise(noise::ChannelKind kind, double strength, Placement placement) {
  const noise::KrausChannel channel = noise::make_channel(kind, strength);
  return placement == Placement::hop ? noise::hop_noise(channel) : noise::gate_noise(channel);
}

double fidelity_vs_ideal(const qcore::DensityMatrix& noisy_pre_measure, const qcore::StateVector& ideal) {
  if (noisy_pre_measure.dim() != ideal.dim()) throw InputError("fidelity_vs_ideal: dimension mismatch");
  return qcore::fidelity(qcore::to_density(ideal), noisy_pre_measure);
}

namespace {

std::string party(int index, int n_voters) {
  if (index == 0 || index == n_voters + 1) return "VA";
  return "V" + std::to_string(index);
}

std::string qubit_list_text(const qcore::QubitList& qubits) {
  std::string s;
  for (int q : qubits) {
    if (!s.empty()) s += ",";
    s += "q" + std::to_string(q);
  }
  return s;
}

/// Mixed-state execution of one protocol round with noise insertion.
class NoisyRound {
 public:
  NoisyRound(int n_qubits, const noise::NoiseModel& model)
      : rho_(qcore::to_density(qcore::basis_state(n_qubits, std::string(static_cast<std::size_t>(n_qubits), '0')))),
        model_(model) {}

  void apply(const GateSequence& sequence) {
    for (const auto& ins : sequence) {
      rho_ = qcore::apply_gate_dm(rho_, ins.gate, ins.targets);
      for (const noise::KrausChannel* channel : model_.gate_channels_for(ins.targets)) {
        for (int q : ins.targets) rho_ = noise::apply_channel(rho_, *channel, q);
      }
    }
  }

  void hop(const qcore::QubitList& travel) {
    for (int q : travel) {
      for (const noise::KrausChannel* channel : model_.hop_channels_for(q)) rho_ = noise::apply_channel(rho_, *channel, q);
    }
  }

  const qcore::DensityMatrix& state() const { return rho_; }

 private:
  qcore::DensityMatrix rho_;
  const noise::NoiseModel& model_;
};

struct RoundPlan {
  GateSequence preparation;
  std::vector<GateSequence> voter_ops;  // indexed by voter
  GateSequence decoding;
  qcore::StateVector ideal_pre_measure;
  std::string ideal_outcome;
};

RoundPlan plan_round(Protocol protocol, const VoteVector& votes, int t) {
  if (protocol == Protocol::a) {
    const protocols::ProtocolARound ideal = protocols::protocol_a_round(votes, t);
    RoundPlan plan{protocols::bell_preparation(), {}, protocols::bell_decoding(), ideal.pre_measure_state,
                   ideal.distribution.modal()};
    for (int i = 0; i < votes.size(); ++i) plan.voter_ops.push_back(protocols::voter_operations_a(votes.vetoes(i), t));
    return plan;
  }
  const auto variant =
      protocols::make_variant(protocol == Protocol::b_ghz ? protocols::Variant::ghz3 : protocols::Variant::cluster4);
  const protocols::ProtocolBResult ideal = protocols::protocol_b_run(votes, variant);
  RoundPlan plan{variant.preparation, {}, protocols::adjoint(variant.preparation), ideal.final_state, ideal.readout};
  for (int i = 0; i < votes.size(); ++i) {
    plan.voter_ops.push_back(protocols::voter_operations_b(variant, i, votes.vetoes(i)));
  }
  return plan;
}

IterationReport execute_round(const ElectionConfig& config, const VoteVector& votes, int t, std::uint64_t shot_seed,
                              Transcript& transcript) {
  const int iteration = t + 1;
  const RoundPlan plan = plan_round(config.protocol, votes, t);
  const qcore::QubitList travel = travel_qubits(config.protocol);
  const std::string carried = qubit_list_text(travel);
  const int n = votes.size();

  NoisyRound round(register_width(config.protocol), config.noise);
  round.apply(plan.preparation);
  for (int hop = 0; hop <= n; ++hop) {
    transcript.events.push_back({party(hop, n), party(hop + 1, n), Payload::qubit_transfer, iteration, carried});
    round.hop(travel);
    if (hop < n) round.apply(plan.voter_ops[static_cast<std::size_t>(hop)]);
  }
  const double fidelity = fidelity_vs_ideal(round.state(), plan.ideal_pre_measure);
  round.apply(plan.decoding);

  const qcore::OutcomeDistribution dist =
      noise::apply_readout_flip(qcore::measure_probs(round.state()), config.noise.readout_flip);
  qcore::ShotCounts counts = qcore::sample_shots(dist, config.shots, shot_seed);

  IterationReport report;
  report.iteration = iteration;
  report.modal_outcome = counts.modal();
  report.ideal_outcome = plan.ideal_outcome;
  report.success_probability = dist.probability(plan.ideal_outcome);
  report.fidelity = fidelity;
  report.distribution = dist.as_map();
  report.counts = counts;
  if (config.protocol == Protocol::a) {
    report.conclusive = protocols::bell_outcome_of(report.modal_outcome) == protocols::BellOutcome::phi_minus;
  } else {
    report.conclusive = protocols::verdict_b(report.modal_outcome) == Decision::not_unanimous;
  }
  transcript.events.push_back({"VA", "all", Payload::classical_announcement, iteration, report.modal_outcome});
  transcript.readout_counts.push_back(std::move(counts));
  return report;
}

RunReport run_once(const ElectionConfig& config, const VoteVector& votes, std::uint64_t seed) {
  RunReport run;
  run.seed = seed;
  // Each iteration's shots are drawn from a seed taken off a per-run engine.
  std::mt19937_64 seeds(seed);
  if (config.protocol == Protocol::a) {
    const int rounds = protocols::max_iterations(votes.size());
    run.decision = Decision::pass;
    for (int t = 0; t < rounds; ++t) {
      run.iterations.push_back(execute_round(config, votes, t, seeds(), run.transcript));
      if (run.iterations.back().conclusive) {
        run.decision = Decision::reject;
        break;
      }
    }
  } else {
    run.iterations.push_back(execute_round(config, votes, 0, seeds(), run.transcript));
    run.decision = protocols::verdict_b(run.iterations.back().modal_outcome);
  }
  return run;
}

}  // namespace

ElectionReport run_election(const ElectionConfig& config, const VoteVector& votes) {
  config.validate();
  if (votes.size() != config.n_voters) {
    throw InputError("votes has " + std::to_string(votes.size()) + " entries but the election has " +
                     std::to_string(config.n_voters) + " voters");
  }
  ElectionReport report;
  report.protocol = config.protocol;
  report.votes = votes.bits();
  report.shots = config.shots;
  for (int r = 0; r < config.repeats; ++r) {
    report.repeats.push_back(run_once(config, votes, config.seed + static_cast<std::uint64_t>(r)));
  }
  report.decision = report.repeats.front().decision;

  double sum = 0.0;
  for (const auto& run : report.repeats) sum += run.final_fidelity();
  const double count = static_cast<double>(report.repeats.size());
  report.repeats_summary.count = config.repeats;
  report.repeats_summary.mean = sum / count;
  if (config.repeats > 1) {
    double ss = 0.0;
    for (const auto& run : report.repeats) {
      const double d = run.final_fidelity() - report.repeats_summary.mean;
      ss += d * d;
    }
    report.repeats_summary.stddev = std::sqrt(ss / (count - 1.0));
  }
  return report;
}

std::vector<SweepRow> noise_sweep(Protocol protocol, const VoteVector& votes, noise::ChannelKind kind,
                                  const std::vector<double>& strengths, Placement placement, std::uint64_t seed,
                                  std::int64_t shots) {
  std::vector<SweepRow> rows;
  for (double s : strengths) {
    ElectionConfig config;
    config.protocol = protocol;
    config.n_voters = votes.size();
    config.shots = shots;
    config.seed = seed;
    config.noise = uniform_noise(kind, s, placement);
    const ElectionReport report = run_election(config, votes);
    const IterationReport& last = report.iterations().back();
    rows.push_back({s, last.fidelity, last.success_probability, last.iteration, last.modal_outcome});
  }
  return rows;
}

}  // namespace qveto::election
