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

// Text encodings of the experiment artifacts. Every real is written with 17
// significant digits so files round-trip and reruns compare byte for byte.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpinn/features.hpp"
#include "qpinn/nn.hpp"
#include "qpinn/qsim.hpp"

namespace qpinn {

/// printf("%.17g").
std::string format_real(double value);

struct SolutionPoint {
    double x = 0.0;
    double y_pred = 0.0;
    double y_exact = 0.0;
    double abs_err = 0.0;
};

/// x, p00_raw, p01_raw, p10_raw, p11_raw, q0_std, q1_std, q2_std, q3_std
std::string features_csv(const Grid &grid, const FeatureMatrix &features);

/// epoch, loss (epochs numbered from 1)
std::string loss_csv(std::span<const double> loss_history);

/// x, y_pred, y_exact, abs_err
std::string solution_csv(std::span<const SolutionPoint> points);

/// outcome, count, frequency, exact_probability
std::string histogram_csv(const qsim::Counts &counts, const qsim::ProbVector &exact);

/// {"layer_sizes": [...], "parameters": [...]} with the flat layout of
/// MLPParams.
std::string checkpoint_json(const MLPParams &params);

/// Inverse of checkpoint_json. Throws InvalidArgument on malformed input.
MLPParams parse_checkpoint(std::string_view text);

/// Throws IoError when the file cannot be written completely.
void write_text_file(const std::filesystem::path &path, std::string_view contents);

/// Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path &path);

}  // namespace qpinn
