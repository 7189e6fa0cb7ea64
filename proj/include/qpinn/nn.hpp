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

// Feed-forward network g and the hard initial-condition ansatz
// y(x) = 1 + x * g([x, q(x)]) for the ODE y' + 2y = 0, y(0) = 1.

#include <cstdint>
#include <span>
#include <vector>

#include "qpinn/features.hpp"

namespace qpinn {

/// Coefficient k in y' + k y = 0.
inline constexpr double kDecayRate = 2.0;

/// Network input width: x followed by the four features.
inline constexpr std::size_t kInputWidth = 1 + kNumFeatures;

struct NetworkInput {
    double x = 0.0;
    FeatureRow q{};
    /// dq/dx of the standardized features; all zero in frozen mode.
    FeatureRow dq_dx{};
};

/// Weights and biases of an MLP with layer widths [5, h1, ..., 1].
///
/// Parameters live in one flat vector. For each weight layer l (mapping
/// width n_l to n_{l+1}) it stores the n_{l+1} x n_l weight matrix row-major
/// and then the n_{l+1} biases. The same shape doubles as the gradient and
/// Adam moment containers.
class MLPParams {
   public:
    MLPParams() = default;

    /// Zero-filled parameters. Throws InvalidArgument for malformed sizes.
    explicit MLPParams(std::vector<std::size_t> layer_sizes);

    /// Throws InvalidArgument if `values` does not match the shape or holds a
    /// non-finite entry.
    MLPParams(std::vector<std::size_t> layer_sizes, std::vector<double> values);

    const std::vector<std::size_t> &layer_sizes() const { return sizes_; }
    std::size_t num_layers() const { return sizes_.empty() ? 0 : sizes_.size() - 1; }
    std::size_t size() const { return values_.size(); }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    std::size_t fan_in(std::size_t layer) const { return sizes_[layer]; }
    std::size_t fan_out(std::size_t layer) const { return sizes_[layer + 1]; }

    double &weight(std::size_t layer, std::size_t out, std::size_t in) {
        return values_[offsets_[layer] + out * sizes_[layer] + in];
    }
    double weight(std::size_t layer, std::size_t out, std::size_t in) const {
        return values_[offsets_[layer] + out * sizes_[layer] + in];
    }
    double &bias(std::size_t layer, std::size_t out) {
        return values_[offsets_[layer] + sizes_[layer] * sizes_[layer + 1] + out];
    }
    double bias(std::size_t layer, std::size_t out) const {
        return values_[offsets_[layer] + sizes_[layer] * sizes_[layer + 1] + out];
    }

    MLPParams zeros_like() const { return MLPParams(sizes_); }
    bool same_shape(const MLPParams &other) const { return sizes_ == other.sizes_; }

    friend bool operator==(const MLPParams &, const MLPParams &) = default;

   private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<double> values_;
};

/// Checks [5, h..., 1] with every width positive; throws InvalidArgument.
void validate_layer_sizes(std::span<const std::size_t> layer_sizes);

/// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
MLPParams init_params(std::vector<std::size_t> layer_sizes, std::uint64_t seed);

/// g([x, q]) with tanh hidden layers and a linear output.
double forward(const MLPParams &params, const NetworkInput &input);

struct AnsatzValue {
    double y = 0.0;
    double dy_dx = 0.0;
};

/// y = 1 + x g and dy/dx = g + x (dg/dx + sum_j dg/dq_j dq_j/dx), with the
/// inner derivative propagated as a dual number.
AnsatzValue ansatz(const MLPParams &params, const NetworkInput &input);

struct LossAndGradient {
    double loss = 0.0;
    MLPParams gradient;
};

/// Mean squared residual over `batch` and its exact gradient with respect to
/// every parameter, differentiating through dy/dx. Per-point contributions
/// are accumulated in batch order. Throws InvalidArgument on an empty batch.
LossAndGradient loss_and_gradient(const MLPParams &params, std::span<const NetworkInput> batch);

/// Gradient part of loss_and_gradient.
MLPParams parameter_gradient(const MLPParams &params, std::span<const NetworkInput> batch);

}  // namespace qpinn
