// Copyright 2026 The fermiswap developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fermiswap {

enum class Command { SynthTrotter, SynthSlater, SynthHubbard, Verify, Stats };

struct RunConfig {
    Command command = Command::Stats;
    std::string input_path;
    std::string output_path;
    double t = 0.0;
    bool t_given = false;
    int order = 1;
    std::uint64_t seed = 0;
    double tolerance = 1e-10;
    int threads = 1;
};

// Exit codes: 0 success, 1 verification failure, 2 parse/validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Parses argv (program name excluded). Throws UsageError with the message
/// to print on unknown flags or malformed values. FERMISWAP_SEED in the
/// environment overrides --seed.
RunConfig parse_args(const std::vector<std::string>& argv);

struct UsageError {
    std::string message;
};

std::string usage_text();

/// Executes a parsed config. Writes artifacts, streams human-readable
/// progress to out and machine-readable error JSON to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fermiswap
