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

#include "qveto/cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qveto/cli/tables.hpp"
#include "qveto/election/serialize.hpp"
#include "qveto/noise/calibration.hpp"

namespace qveto::cli {

using nlohmann::json;

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

election::Protocol require_protocol(const std::string& name) {
  const auto p = election::parse_protocol(name);
  if (!p) throw InputError("--protocol must be one of a, b-ghz, b-cluster; got '" + name + "'");
  return *p;
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string protocol;
  std::string votes;
  std::int64_t shots = 8192;
  std::uint64_t seed = 0;
  int repeats = 1;
  std::vector<std::string> noise;
  std::string calibration;
  std::string out = "text";
};

void print_run_text(const election::ElectionReport& report, std::ostream& out) {
  out << "protocol: " << election::to_string(report.protocol) << "\n";
  out << "votes: " << report.votes << "\n";
  out << "shots: " << report.shots << "\n";
  out << "decision: " << protocols::to_string(report.decision) << "\n";
  for (const auto& run : report.repeats) {
    out << "\nrepeat seed " << run.seed << " -> " << protocols::to_string(run.decision) << "\n";
    out << pad("iteration", 11) << pad("modal", 8) << pad("ideal", 8) << pad("success(%)", 12)
        << pad("fidelity(%)", 13) << "counts\n";
    for (const auto& it : run.iterations) {
      std::string counts;
      for (const auto& [label, n] : it.counts.counts) {
        if (!counts.empty()) counts += " ";
        counts += label + ":" + std::to_string(n);
      }
      out << pad(std::to_string(it.iteration), 11) << pad(it.modal_outcome, 8) << pad(it.ideal_outcome, 8)
          << pad(percent(it.success_probability), 12) << pad(percent(it.fidelity), 13) << counts << "\n";
    }
    out << "hops:";
    for (int i = 1; i <= static_cast<int>(run.iterations.size()); ++i) {
      const auto path = run.transcript.hop_path(i);
      out << " [";
      for (std::size_t k = 0; k < path.size(); ++k) out << (k ? "->" : "") << path[k];
      out << "]";
    }
    out << "\n";
  }
  out << "\nfidelity over " << report.repeats_summary.count << " repeat(s): mean "
      << percent(report.repeats_summary.mean) << "%, stddev " << percent(report.repeats_summary.stddev) << " points\n";
}

int cmd_run(const RunOptions& opt, std::ostream& out) {
  if (opt.out != "text" && opt.out != "json" && opt.out != "csv") throw InputError("--out must be text, json or csv");
  election::ElectionConfig config;
  config.protocol = require_protocol(opt.protocol);
  const auto votes = protocols::VoteVector::from_bits(opt.votes);
  config.n_voters = votes.size();
  config.shots = opt.shots;
  config.seed = opt.seed;
  config.repeats = opt.repeats;

  std::string noise_kind = "none";
  double noise_strength = 0.0;
  std::vector<NoiseSpec> specs;
  for (const auto& text : opt.noise) specs.push_back(parse_noise_spec(text));
  for (const auto& spec : specs) {
    const auto model = election::uniform_noise(spec.kind, spec.strength, spec.placement);
    config.noise.hop_channels.insert(config.noise.hop_channels.end(), model.hop_channels.begin(),
                                     model.hop_channels.end());
    config.noise.gate_channels.insert(config.noise.gate_channels.end(), model.gate_channels.begin(),
                                      model.gate_channels.end());
  }
  if (!opt.calibration.empty()) {
    const noise::Calibration cal = noise::load_calibration(opt.calibration);
    const noise::NoiseModel device =
        noise::device_model_from_calibration(cal, election::default_device_mapping(config.protocol));
    config.noise.gate_channels.insert(config.noise.gate_channels.end(), device.gate_channels.begin(),
                                      device.gate_channels.end());
    config.noise.readout_flip = device.readout_flip;
  }
  if (specs.size() == 1 && opt.calibration.empty()) {
    noise_kind = std::string(noise::to_string(specs.front().kind));
    noise_strength = specs.front().strength;
  } else if (specs.empty() && !opt.calibration.empty()) {
    noise_kind = "device";
  } else if (!specs.empty() || !opt.calibration.empty()) {
    noise_kind = "mixed";
  }
  if (config.protocol != election::Protocol::a && votes.size() != protocols::kProtocolBVoters) {
    throw InputError("protocol " + opt.protocol + " needs exactly 4 votes, got '" + opt.votes + "'");
  }

  const election::ElectionReport report = election::run_election(config, votes);
  const auto rows = election::result_rows(report, noise_kind, noise_strength);
  if (opt.out == "csv") {
    out << election::to_csv(rows);
  } else if (opt.out == "json") {
    json doc = election::to_json(report);
    doc["noise_kind"] = noise_kind;
    doc["noise_strength"] = noise_strength;
    doc["rows"] = election::to_json(rows);
    out << doc.dump(2) << "\n";
  } else {
    print_run_text(report, out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tables

struct TablesOptions {
  std::string which = "all";
  bool check = false;
  std::string out = "text";
};

std::string table_title(int table) {
  switch (table) {
    case 3:
      return "[3] Bell-state veto, iterative";
    case 4:
      return "[4] cluster-state veto";
    default:
      return "[5] GHZ-state veto";
  }
}

int cmd_tables(const TablesOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<int> tables;
  if (opt.which == "all") {
    tables = {3, 4, 5};
  } else if (opt.which == "3" || opt.which == "4" || opt.which == "5") {
    tables = {opt.which[0] - '0'};
  } else {
    throw InputError("--which must be 3, 4, 5 or all");
  }
  if (opt.out != "text" && opt.out != "json" && opt.out != "csv") throw InputError("--out must be text, json or csv");

  std::vector<std::string> failures;
  json doc = json::array();
  std::string csv = "table,case,votes,iteration,final_state,readout,readout_probability,conclusive,decision,"
                    "device_probability,device_fidelity_pct,status\n";
  for (int table : tables) {
    const auto rows = reproduce_table(table);
    if (opt.out == "text") {
      out << table_title(table) << "\n";
      out << pad("case", 6) << pad("votes", 7) << pad("iter", 6) << pad("final state", 48) << pad("readout", 9)
          << pad("P(readout)", 12) << pad("decision", 14) << pad("device P", 10) << pad("device F(%)", 13)
          << "status\n";
    }
    for (const auto& r : rows) {
      const std::string ket = format_ket(r.final_state);
      const std::string status = r.matches ? "ok" : "MISMATCH";
      if (!r.matches) {
        failures.push_back("table " + std::to_string(table) + " case " + std::to_string(r.expected.case_no) +
                           " votes " + r.expected.votes + " iteration " + std::to_string(r.expected.iteration) +
                           ": " + r.mismatch);
      }
      if (opt.out == "text") {
        char prob[32];
        std::snprintf(prob, sizeof(prob), "%.3f", r.expected.device_probability);
        char fid[32];
        std::snprintf(fid, sizeof(fid), "%.2f", r.expected.device_fidelity_pct);
        out << pad(std::to_string(r.expected.case_no), 6) << pad(r.expected.votes, 7)
            << pad(std::to_string(r.expected.iteration), 6) << pad(ket, 48) << pad(r.readout, 9)
            << pad(percent(r.readout_probability) + "%", 12) << pad(r.decision, 14) << pad(prob, 10) << pad(fid, 13)
            << status << "\n";
      } else if (opt.out == "json") {
        doc.push_back({{"table", table},
                       {"case", r.expected.case_no},
                       {"votes", r.expected.votes},
                       {"iteration", r.expected.iteration},
                       {"final_state", ket},
                       {"readout", r.readout},
                       {"readout_probability", r.readout_probability},
                       {"conclusive", r.conclusive},
                       {"decision", r.decision},
                       {"device_probability", r.expected.device_probability},
                       {"device_fidelity_pct", r.expected.device_fidelity_pct},
                       {"status", status}});
      } else {
        csv += std::to_string(table) + "," + std::to_string(r.expected.case_no) + "," + r.expected.votes + "," +
               std::to_string(r.expected.iteration) + "," + ket + "," + r.readout + "," +
               election::format_real(r.readout_probability) + "," + (r.conclusive ? "true" : "false") + "," +
               r.decision + "," + election::format_real(r.expected.device_probability) + "," +
               election::format_real(r.expected.device_fidelity_pct) + "," + status + "\n";
      }
    }
    if (opt.out == "text") out << "\n";
  }
  if (opt.out == "json") out << doc.dump(2) << "\n";
  if (opt.out == "csv") out << csv;

  if (opt.check && !failures.empty()) {
    for (const auto& f : failures) err << "check failed: " << f << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string protocol = "all";
  std::vector<std::string> noise;
  std::string strengths;
  std::string votes = "0000";
  std::string placement = "hop";
  std::uint64_t seed = 0;
  std::int64_t shots = 8192;
  std::string out = "csv";
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  if (opt.out != "json" && opt.out != "csv") throw InputError("--out must be json or csv");
  std::vector<election::Protocol> protocols_list;
  if (opt.protocol == "all") {
    protocols_list = {election::Protocol::a, election::Protocol::b_ghz, election::Protocol::b_cluster};
  } else {
    protocols_list = {require_protocol(opt.protocol)};
  }
  std::vector<noise::ChannelKind> kinds;
  for (const auto& entry : opt.noise) {
    for (const auto& name : split(entry, ',')) {
      if (name == "all") {
        kinds.insert(kinds.end(), {noise::ChannelKind::phase_damping, noise::ChannelKind::amplitude_damping,
                                   noise::ChannelKind::depolarizing, noise::ChannelKind::bit_flip});
        continue;
      }
      const auto kind = noise::parse_channel_kind(name);
      if (!kind) throw InputError("--noise: unknown channel kind '" + name + "'");
      kinds.push_back(*kind);
    }
  }
  if (kinds.empty()) throw InputError("--noise needs at least one channel kind");
  const auto placement = election::parse_placement(opt.placement);
  if (!placement) throw InputError("--placement must be hop or gate");
  const std::vector<double> strengths = parse_strength_range(opt.strengths);
  const auto votes = protocols::VoteVector::from_bits(opt.votes);
  for (auto p : protocols_list) {
    if (p != election::Protocol::a && votes.size() != protocols::kProtocolBVoters) {
      throw InputError("protocol " + std::string(election::to_string(p)) + " needs exactly 4 votes");
    }
  }
  if (opt.shots < 1) throw InputError("--shots must be >= 1");

  std::vector<election::ResultRow> rows;
  for (auto p : protocols_list) {
    for (auto kind : kinds) {
      const auto sweep = election::noise_sweep(p, votes, kind, strengths, *placement, opt.seed, opt.shots);
      for (const auto& s : sweep) {
        rows.push_back({std::string(election::to_string(p)), votes.bits(), s.iteration, s.modal_outcome,
                        s.success_probability, s.fidelity, std::string(noise::to_string(kind)), s.strength, opt.seed});
      }
    }
  }
  if (opt.out == "csv") {
    out << election::to_csv(rows);
  } else {
    out << json{{"placement", opt.placement}, {"rows", election::to_json(rows)}}.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// device-info

struct DeviceOptions {
  std::string calibration;
  std::string protocol = "all";
  std::string out = "text";
};

json derived_json(const noise::DerivedStrengths& s, const noise::DeviceMapping& mapping, bool identity) {
  json pairs = json::array();
  for (const auto& [pair, rate] : s.two_qubit) {
    pairs.push_back({{"logical", {pair.first, pair.second}},
                     {"physical",
                      {mapping.role_to_qubit[static_cast<std::size_t>(pair.first)],
                       mapping.role_to_qubit[static_cast<std::size_t>(pair.second)]}},
                     {"depolarizing", rate}});
  }
  return {{"role_to_qubit", mapping.role_to_qubit},
          {"single_qubit_depolarizing", s.single_qubit},
          {"two_qubit_depolarizing", pairs},
          {"readout_flip", s.readout},
          {"identity", identity}};
}

int cmd_device_info(const DeviceOptions& opt, std::ostream& out) {
  if (opt.out != "text" && opt.out != "json") throw InputError("--out must be text or json");
  const noise::Calibration cal = noise::load_calibration(opt.calibration);
  std::vector<election::Protocol> protocols_list;
  if (opt.protocol == "all") {
    protocols_list = {election::Protocol::a, election::Protocol::b_ghz, election::Protocol::b_cluster};
  } else {
    protocols_list = {require_protocol(opt.protocol)};
  }

  json models = json::object();
  for (auto p : protocols_list) {
    const auto mapping = election::default_device_mapping(p);
    const auto strengths = noise::derived_strengths(cal, mapping);
    const bool identity = noise::device_model_from_calibration(cal, mapping).is_identity();
    models[std::string(election::to_string(p))] = derived_json(strengths, mapping, identity);
  }

  if (opt.out == "json") {
    out << json{{"calibration", noise::to_json(cal)}, {"noise_models", models}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "device: " << (cal.device.empty() ? "(unnamed)" : cal.device) << "  date: " << cal.date << "\n";
  out << pad("qubit", 7) << pad("T1(us)", 9) << pad("T2(us)", 9) << pad("freq(GHz)", 11) << pad("readout", 10)
      << pad("pauli_x", 12) << "cnot_errors\n";
  for (const auto& r : cal.records) {
    std::string cx;
    for (const auto& [pair, e] : r.cnot_errors) {
      if (!cx.empty()) cx += ", ";
      cx += noise::cnot_key(pair.first, pair.second) + ": " + election::format_real(e);
    }
    out << pad("Q" + std::to_string(r.qubit_id), 7) << pad(election::format_real(r.t1_us), 9)
        << pad(election::format_real(r.t2_us), 9) << pad(election::format_real(r.frequency_ghz), 11)
        << pad(election::format_real(r.readout_error), 10) << pad(election::format_real(r.pauli_x_error), 12) << cx
        << "\n";
  }
  for (auto p : protocols_list) {
    const json& m = models[std::string(election::to_string(p))];
    out << "\nnoise model for protocol " << election::to_string(p) << (m["identity"].get<bool>() ? " (identity)" : "")
        << "\n  logical->physical: " << m["role_to_qubit"].dump() << "\n  single-qubit depolarizing: "
        << m["single_qubit_depolarizing"].dump() << "\n  readout flip: " << m["readout_flip"].dump()
        << "\n  two-qubit depolarizing:";
    for (const auto& pair : m["two_qubit_depolarizing"]) {
      out << " " << pair["logical"].dump() << "@Q" << pair["physical"].dump() << "=" << pair["depolarizing"].dump();
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

NoiseSpec parse_noise_spec(std::string_view text) {
  NoiseSpec spec;
  bool have_kind = false;
  bool have_strength = false;
  for (const auto& field : split(text, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw InputError("--noise: expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "kind") {
      const auto kind = noise::parse_channel_kind(value);
      if (!kind) throw InputError("--noise: unknown channel kind '" + value + "'");
      spec.kind = *kind;
      have_kind = true;
    } else if (key == "strength") {
      spec.strength = parse_double(value, "--noise strength");
      if (!(spec.strength >= 0.0 && spec.strength <= 1.0)) throw InputError("--noise: strength must lie in [0, 1]");
      have_strength = true;
    } else if (key == "placement") {
      const auto placement = election::parse_placement(value);
      if (!placement) throw InputError("--noise: placement must be hop or gate");
      spec.placement = *placement;
    } else {
      throw InputError("--noise: unknown key '" + key + "'");
    }
  }
  if (!have_kind || !have_strength) throw InputError("--noise needs kind=K,strength=S");
  return spec;
}

std::vector<double> parse_strength_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InputError("--strengths must be min:max:step");
  const double lo = parse_double(parts[0], "--strengths min");
  const double hi = parse_double(parts[1], "--strengths max");
  const double step = parse_double(parts[2], "--strengths step");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw InputError("--strengths: need 0 <= min <= max <= 1");
  if (!(step > 0.0)) throw InputError("--strengths: step must be > 0");
  std::vector<double> values;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (long i = 0; i < count; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    values.push_back(std::round(v * 1e12) / 1e12);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate quantum anonymous veto protocols", "qveto"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "Run one election and print its report");
  run_cmd->add_option("--protocol", run_opt.protocol, "a | b-ghz | b-cluster")->required();
  run_cmd->add_option("--votes", run_opt.votes, "Veto bits, voter 1 leftmost (1 = veto)")->required();
  run_cmd->add_option("--shots", run_opt.shots, "Shots per iteration")->capture_default_str();
  run_cmd->add_option("--seed", run_opt.seed, "RNG seed")->capture_default_str();
  run_cmd->add_option("--repeats", run_opt.repeats, "Independent repeats (seeds seed..seed+repeats-1)")
      ->capture_default_str();
  run_cmd->add_option("--noise", run_opt.noise, "kind=K,strength=S[,placement=hop|gate]; repeatable");
  run_cmd->add_option("--calibration", run_opt.calibration, "Calibration file activating the device model");
  run_cmd->add_option("--out", run_opt.out, "text | json | csv")->capture_default_str();

  TablesOptions tables_opt;
  auto* tables_cmd = app.add_subcommand("tables", "Reproduce the noiseless outcome tables");
  tables_cmd->add_option("--which", tables_opt.which, "3 | 4 | 5 | all")->capture_default_str();
  tables_cmd->add_flag("--check", tables_opt.check, "Exit 1 if any row deviates from the embedded oracle");
  tables_cmd->add_option("--out", tables_opt.out, "text | json | csv")->capture_default_str();

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Fidelity and success probability versus noise strength");
  sweep_cmd->add_option("--protocol", sweep_opt.protocol, "a | b-ghz | b-cluster | all")->capture_default_str();
  sweep_cmd->add_option("--noise", sweep_opt.noise, "Channel kinds (phase, amplitude, depolarizing, bit_flip, all)")
      ->required();
  sweep_cmd->add_option("--strengths", sweep_opt.strengths, "min:max:step within [0, 1]")->required();
  sweep_cmd->add_option("--votes", sweep_opt.votes, "Veto bits")->capture_default_str();
  sweep_cmd->add_option("--placement", sweep_opt.placement, "hop | gate")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_opt.seed, "RNG seed")->capture_default_str();
  sweep_cmd->add_option("--shots", sweep_opt.shots, "Shots per iteration")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_opt.out, "csv | json")->capture_default_str();

  DeviceOptions device_opt;
  auto* device_cmd = app.add_subcommand("device-info", "Show parsed calibration and the derived noise models");
  device_cmd->add_option("--calibration", device_opt.calibration, "Calibration file")->required();
  device_cmd->add_option("--protocol", device_opt.protocol, "a | b-ghz | b-cluster | all")->capture_default_str();
  device_cmd->add_option("--out", device_opt.out, "text | json")->capture_default_str();

  std::vector<const char*> argv{"qveto"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opt, out);
    if (tables_cmd->parsed()) return cmd_tables(tables_opt, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, out);
    if (device_cmd->parsed()) return cmd_device_info(device_opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qveto::cli
