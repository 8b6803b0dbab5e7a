// Copyright 2026 The eraser-emergence Authors
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eraser/errors.hpp"
#include "eraser/experiments.hpp"
#include "eraser/report_io.hpp"

namespace eraser::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

enum class Command { Fine, Coarse, Sweep, KCurve, Compare };

std::string to_string(Command command);

struct RunConfig {
    Command command = Command::Coarse;
    ScenarioParams params;
    std::size_t theta_steps = 181;
    double theta_max = std::numbers::pi / 2;
    std::vector<double> phi_list = default_phi_list();
    std::optional<std::string> output_path;
    Format format = Format::Csv;
    bool averaged_branches = false;
};

class UsageError : public Error {
   public:
    using Error::Error;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public Error {
   public:
    using Error::Error;
};

/// `args` excludes the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string> &args);

/// Rendered output of a run (CSV or JSON text).
std::string execute(const RunConfig &config);

/// Full front end: parse, execute, write. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &err);

}  // namespace eraser::cli
