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

#include "qpinn/pinn.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qpinn/error.hpp"

namespace qpinn {

std::string_view to_string(DerivativeMode mode) {
    switch (mode) {
        case DerivativeMode::frozen:
            return "frozen";
        case DerivativeMode::analytic_diff:
            return "analytic-diff";
    }
    return "unknown";
}

DerivativeMode parse_derivative_mode(std::string_view text) {
    if (text == "frozen") {
        return DerivativeMode::frozen;
    }
    if (text == "analytic-diff" || text == "analytic_diff") {
        return DerivativeMode::analytic_diff;
    }
    throw InvalidArgument("unknown derivative mode '" + std::string(text) +
                          "' (expected frozen or analytic-diff)");
}

void TrainConfig::validate() const {
    if (epochs == 0) {
        throw InvalidArgument("epochs must be a positive integer");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw InvalidArgument("learning rate must be a positive finite number");
    }
    if (!(beta1 >= 0.0 && beta1 < 1.0)) {
        throw InvalidArgument("beta1 must lie in [0, 1)");
    }
    if (!(beta2 >= 0.0 && beta2 < 1.0)) {
        throw InvalidArgument("beta2 must lie in [0, 1)");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InvalidArgument("epsilon must be a positive finite number");
    }
    if (grid_size < 2) {
        throw InvalidArgument("grid size must be at least 2");
    }
    if (hidden_sizes.empty()) {
        throw InvalidArgument("at least one hidden layer is required");
    }
    for (std::size_t h : hidden_sizes) {
        if (h == 0) {
            throw InvalidArgument("hidden layer widths must be positive");
        }
    }
}

std::vector<std::size_t> TrainConfig::layer_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(hidden_sizes.size() + 2);
    sizes.push_back(kInputWidth);
    sizes.insert(sizes.end(), hidden_sizes.begin(), hidden_sizes.end());
    sizes.push_back(1);
    return sizes;
}

AdamState AdamState::zeros_like(const MLPParams &params) {
    return {params.zeros_like(), params.zeros_like(), 0};
}

double residual(const MLPParams &params, const NetworkInput &input) {
    const AnsatzValue y = ansatz(params, input);
    return y.dy_dx + kDecayRate * y.y;
}

double ode_loss(const MLPParams &params, std::span<const NetworkInput> batch) {
    if (batch.empty()) {
        throw InvalidArgument("batch must not be empty");
    }
    double total = 0.0;
    for (const auto &input : batch) {
        const double r = residual(params, input);
        total += r * r;
    }
    return total / static_cast<double>(batch.size());
}

std::pair<MLPParams, AdamState> adam_step(const MLPParams &params, const MLPParams &grads,
                                          const AdamState &state, const TrainConfig &config) {
    if (!params.same_shape(grads) || !params.same_shape(state.m) || !params.same_shape(state.v)) {
        throw InvalidArgument("parameter, gradient, and moment shapes differ");
    }
    MLPParams next = params;
    AdamState s = state;
    s.step += 1;
    const double step = static_cast<double>(s.step);
    const double correction1 = 1.0 - std::pow(config.beta1, step);
    const double correction2 = 1.0 - std::pow(config.beta2, step);

    auto theta = next.values();
    auto m = s.m.values();
    auto v = s.v.values();
    const auto g = grads.values();
    for (std::size_t k = 0; k < theta.size(); ++k) {
        m[k] = config.beta1 * m[k] + (1.0 - config.beta1) * g[k];
        v[k] = config.beta2 * v[k] + (1.0 - config.beta2) * g[k] * g[k];
        const double m_hat = m[k] / correction1;
        const double v_hat = v[k] / correction2;
        theta[k] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
    }
    return {std::move(next), std::move(s)};
}

std::vector<NetworkInput> make_batch(const Grid &grid, const FeatureMatrix &features, DerivativeMode mode) {
    if (features.rows() != grid.size() || features.standardized.size() != grid.size()) {
        throw InvalidArgument("feature matrix rows do not match the grid");
    }
    std::vector<NetworkInput> batch(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        batch[i].x = grid[i];
        batch[i].q = features.standardized[i];
        if (mode == DerivativeMode::analytic_diff) {
            const FeatureRow d = exact_feature_derivative(grid[i]);
            for (std::size_t j = 0; j < kNumFeatures; ++j) {
                batch[i].dq_dx[j] = d[j] / features.scaling.sigma[j];
            }
        }
    }
    return batch;
}

NetworkInput make_input(double x, const FeatureScaling &scaling, DerivativeMode mode) {
    NetworkInput input;
    input.x = x;
    input.q = exact_standardized_features(x, scaling);
    if (mode == DerivativeMode::analytic_diff) {
        const FeatureRow d = exact_feature_derivative(x);
        for (std::size_t j = 0; j < kNumFeatures; ++j) {
            input.dq_dx[j] = d[j] / scaling.sigma[j];
        }
    }
    return input;
}

OptimizeResult optimize(MLPParams initial, const Objective &objective, const TrainConfig &config) {
    config.validate();
    OptimizeResult result;
    result.loss_history.reserve(config.epochs);
    result.params = std::move(initial);
    AdamState state = AdamState::zeros_like(result.params);
    for (std::uint64_t epoch = 1; epoch <= config.epochs; ++epoch) {
        LossAndGradient lg = objective(result.params);
        if (!std::isfinite(lg.loss)) {
            throw DivergenceError("loss became non-finite at epoch " + std::to_string(epoch) +
                                  (result.loss_history.empty()
                                       ? std::string()
                                       : " (previous loss " + std::to_string(result.loss_history.back()) + ")"));
        }
        result.loss_history.push_back(lg.loss);
        auto [params, next_state] = adam_step(result.params, lg.gradient, state, config);
        result.params = std::move(params);
        state = std::move(next_state);
    }
    result.final_loss = objective(result.params).loss;
    if (!std::isfinite(result.final_loss)) {
        throw DivergenceError("loss of the final parameters is non-finite");
    }
    return result;
}

TrainReport train(const TrainConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    TrainReport report;
    report.grid = make_grid(config.grid_size);
    report.features = build_feature_matrix(report.grid, config.shots, config.seed);
    const std::vector<NetworkInput> batch = make_batch(report.grid, report.features, config.derivative_mode);

    MLPParams initial = init_params(config.layer_sizes(), config.seed);
    OptimizeResult result = optimize(
        std::move(initial), [&batch](const MLPParams &p) { return loss_and_gradient(p, batch); }, config);

    report.loss_history = std::move(result.loss_history);
    report.final_params = std::move(result.params);
    report.final_loss = result.final_loss;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qpinn
