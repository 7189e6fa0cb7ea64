// Copyright 2026 The qpinn Authors
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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "qpinn/pinn.hpp"
#include "qpinn/validate.hpp"

namespace qpinn {

/// Everything an end-to-end run needs: the training config plus output
/// location and the evaluation/histogram knobs.
struct RunConfig {
    TrainConfig train;
    std::filesystem::path out_dir = "qpinn_out";
    /// x at which the measurement histogram is exported.
    double histogram_t = 0.3;
    std::uint64_t histogram_shots = 4096;
    std::size_t n_eval = 200;

    void validate() const;
};

/// Flat setting keys, identical to the CLI flag names without the leading
/// dashes. Underscores are accepted in place of dashes.
inline constexpr std::array<std::string_view, 14> kSettingKeys{
    "n-points", "n-eval",          "shots", "seed", "epochs", "lr",   "hidden",
    "mode",     "histogram-t",     "histogram-shots", "out",  "beta1", "beta2", "epsilon",
};

/// Parses `value` for `key` and stores it. Throws InvalidArgument for an
/// unknown key or a malformed / out-of-range value.
void apply_setting(RunConfig &config, std::string_view key, std::string_view value);

/// Current value of `key` in its textual form (what apply_setting accepts).
std::string get_setting(const RunConfig &config, std::string_view key);

/// Applies every key of a flat JSON object. Numbers, strings, and (for
/// "hidden") arrays of integers are accepted.
void apply_json(RunConfig &config, std::string_view json_text);

void load_config_file(RunConfig &config, const std::filesystem::path &path);

/// Flat JSON echo of the config. The output directory is left out so that
/// the echo depends only on what determines the results.
std::string config_to_json(const RunConfig &config);

inline constexpr std::array<std::string_view, 8> kArtifactFiles{
    "features.csv", "loss.csv",          "solution.csv",       "errors.json",
    "histogram.csv", "plot_solution.svg", "plot_histogram.svg", "checkpoint.json",
};

struct RunSummary {
    double initial_loss = 0.0;
    double final_loss = 0.0;
    ErrorReport errors;
    double wall_time = 0.0;
};

/// Trains, evaluates, and writes every file in kArtifactFiles to
/// config.out_dir (created if missing).
RunSummary run_experiment(const RunConfig &config);

}  // namespace qpinn
