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

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qpinn/features.hpp"
#include "qpinn/nn.hpp"

namespace qpinn {

/// How dy/dx treats the feature path q(x).
enum class DerivativeMode {
    /// q(x_i) is a constant auxiliary input (dq/dx = 0).
    frozen,
    /// Chain rule through the closed-form probabilities and the 1/sigma
    /// standardization factors.
    analytic_diff,
};

std::string_view to_string(DerivativeMode mode);
/// Accepts "frozen" and "analytic-diff"; throws InvalidArgument otherwise.
DerivativeMode parse_derivative_mode(std::string_view text);

struct TrainConfig {
    std::uint64_t epochs = 5000;
    double learning_rate = 1e-2;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    DerivativeMode derivative_mode = DerivativeMode::analytic_diff;
    std::uint64_t seed = 0;
    std::size_t grid_size = 64;
    /// 0 selects exact Born probabilities.
    std::uint64_t shots = 0;
    std::vector<std::size_t> hidden_sizes{32, 32};

    /// Throws InvalidArgument naming the first offending field.
    void validate() const;

    /// [5, hidden..., 1].
    std::vector<std::size_t> layer_sizes() const;
};

struct AdamState {
    MLPParams m;
    MLPParams v;
    std::uint64_t step = 0;

    static AdamState zeros_like(const MLPParams &params);
};

struct TrainReport {
    /// Loss at the parameters entering each epoch.
    std::vector<double> loss_history;
    MLPParams final_params;
    /// Loss of final_params.
    double final_loss = 0.0;
    double wall_time = 0.0;
    Grid grid{std::vector<double>{0.0, 1.0}};
    FeatureMatrix features;
};

/// dy/dx + k y from the ansatz.
double residual(const MLPParams &params, const NetworkInput &input);

/// Mean of squared residuals. Throws InvalidArgument on an empty batch.
double ode_loss(const MLPParams &params, std::span<const NetworkInput> batch);

/// One bias-corrected Adam update. The step counter is incremented before
/// the correction factors are formed.
std::pair<MLPParams, AdamState> adam_step(const MLPParams &params, const MLPParams &grads,
                                          const AdamState &state, const TrainConfig &config);

/// Network inputs for every grid point of a feature matrix. In analytic-diff
/// mode dq_dx is the exact derivative divided by the column sigma.
std::vector<NetworkInput> make_batch(const Grid &grid, const FeatureMatrix &features,
                                     DerivativeMode mode);

/// Input at an arbitrary x using exact features and a frozen scaling.
NetworkInput make_input(double x, const FeatureScaling &scaling, DerivativeMode mode);

using Objective = std::function<LossAndGradient(const MLPParams &)>;

struct OptimizeResult {
    std::vector<double> loss_history;
    MLPParams params;
    double final_loss = 0.0;
};

/// Full-batch Adam for config.epochs iterations starting from `initial`.
/// Records the loss evaluated before each update, then the loss of the
/// returned parameters. Throws DivergenceError as soon as a loss is
/// non-finite.
OptimizeResult optimize(MLPParams initial, const Objective &objective, const TrainConfig &config);

/// Grid, features, initialization and optimization in one deterministic call.
TrainReport train(const TrainConfig &config);

}  // namespace qpinn
