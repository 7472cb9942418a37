// Copyright 2026 The QRS Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QRS_CLI_HPP
#define QRS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace qrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitNumerical = 3;

enum class Format { kJson, kCsv };

struct ExperimentConfig {
    std::string subcommand;
    std::string instance;
    /// Mandatory for every subcommand except waterfill and certify.
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 1;
    Format format = Format::kJson;
    /// Standard output when empty.
    std::string out;
    /// Overrides the instance's "p".
    std::optional<double> p;
    /// Hidden shift; drawn per trial when absent.
    std::optional<std::uint64_t> shift;
    double gamma = 1.0;
    double delta = 0.05;
    /// Worker threads for the trial loop. Results are assembled in trial
    /// order, so the output does not depend on this.
    unsigned jobs = 1;
};

bool is_stochastic(const std::string &subcommand);

/// Runs the experiment and returns the result document. Throws the library's
/// error types; `run` maps them to exit codes.
nlohmann::json execute(const ExperimentConfig &config);

/// Flattens the "trials" table, or the "result" object for single-shot
/// subcommands, into CSV. Nested arrays become ';'-joined cells.
std::string to_csv(const nlohmann::json &document);

int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Parses the command line and calls `run`.
int run_command_line(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qrs::cli

#endif
