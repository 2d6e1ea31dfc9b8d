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

#ifndef QVETO_CLI_CLI_HPP
#define QVETO_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qveto/election/election.hpp"

namespace qveto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing the
/// result document to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "kind=phase,strength=0.1,placement=hop".
struct NoiseSpec {
  noise::ChannelKind kind = noise::ChannelKind::phase_damping;
  double strength = 0.0;
  election::Placement placement = election::Placement::hop;
};

NoiseSpec parse_noise_spec(std::string_view text);

/// "min:max:step" -> min, min + step, ... up to max (inclusive within 1e-9).
/// Each value is rounded to 12 decimals so printed strengths stay tidy.
std::vector<double> parse_strength_range(std::string_view text);

}  // namespace qveto::cli

#endif  // QVETO_CLI_CLI_HPP
