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

#include "qpinn/nn.hpp"

#include <cmath>
#include <string>

#include "qpinn/dual.hpp"
#include "qpinn/error.hpp"
#include "qpinn/rng.hpp"

namespace qpinn {

void validate_layer_sizes(std::span<const std::size_t> layer_sizes) {
    if (layer_sizes.size() < 2) {
        throw InvalidArgument("layer sizes need at least an input and an output width");
    }
    if (layer_sizes.front() != kInputWidth) {
        throw InvalidArgument("first layer width must be " + std::to_string(kInputWidth) + ", got " +
                              std::to_string(layer_sizes.front()));
    }
    if (layer_sizes.back() != 1) {
        throw InvalidArgument("last layer width must be 1, got " + std::to_string(layer_sizes.back()));
    }
    for (std::size_t w : layer_sizes) {
        if (w == 0) {
            throw InvalidArgument("layer widths must be positive");
        }
    }
}

MLPParams::MLPParams(std::vector<std::size_t> layer_sizes) : sizes_(std::move(layer_sizes)) {
    validate_layer_sizes(sizes_);
    std::size_t total = 0;
    offsets_.reserve(sizes_.size() - 1);
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        offsets_.push_back(total);
        total += sizes_[l] * sizes_[l + 1] + sizes_[l + 1];
    }
    values_.assign(total, 0.0);
}

MLPParams::MLPParams(std::vector<std::size_t> layer_sizes, std::vector<double> values)
    : MLPParams(std::move(layer_sizes)) {
    if (values.size() != values_.size()) {
        throw InvalidArgument("expected " + std::to_string(values_.size()) + " parameters, got " +
                              std::to_string(values.size()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("parameters must be finite");
        }
    }
    values_ = std::move(values);
}

MLPParams init_params(std::vector<std::size_t> layer_sizes, std::uint64_t seed) {
    MLPParams params(std::move(layer_sizes));
    Xoshiro256 rng(seed);
    for (std::size_t l = 0; l < params.num_layers(); ++l) {
        const double bound =
            std::sqrt(6.0 / static_cast<double>(params.fan_in(l) + params.fan_out(l)));
        for (std::size_t o = 0; o < params.fan_out(l); ++o) {
            for (std::size_t i = 0; i < params.fan_in(l); ++i) {
                params.weight(l, o, i) = bound * (2.0 * rng.uniform() - 1.0);
            }
        }
    }
    return params;
}

namespace {

// Dual activations entering each weight layer, plus the dual output.
struct ForwardTrace {
    std::vector<std::vector<DualValue>> inputs;
    DualValue output;
};

void check_shape(const MLPParams &params) {
    if (params.num_layers() == 0) {
        throw InvalidArgument("network has no layers");
    }
    // Constructors enforce the remaining invariants.
}

ForwardTrace forward_trace(const MLPParams &params, const NetworkInput &input) {
    check_shape(params);
    ForwardTrace trace;
    trace.inputs.reserve(params.num_layers());

    std::vector<DualValue> a(kInputWidth);
    a[0] = DualValue::variable(input.x);
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
        a[j + 1] = DualValue(input.q[j], input.dq_dx[j]);
    }

    const std::size_t last = params.num_layers() - 1;
    for (std::size_t l = 0; l <= last; ++l) {
        std::vector<DualValue> z(params.fan_out(l));
        for (std::size_t o = 0; o < params.fan_out(l); ++o) {
            DualValue acc(params.bias(l, o));
            for (std::size_t i = 0; i < params.fan_in(l); ++i) {
                acc += params.weight(l, o, i) * a[i];
            }
            z[o] = l == last ? acc : tanh(acc);
        }
        trace.inputs.push_back(std::move(a));
        a = std::move(z);
    }
    trace.output = a[0];
    return trace;
}

AnsatzValue ansatz_from(double x, const DualValue &g) {
    return {1.0 + x * g.value, g.value + x * g.tangent};
}

// Adds d(weight * r)/d(theta) to `grad`, given the trace at one input.
void accumulate_residual_gradient(const MLPParams &params, const ForwardTrace &trace, double x, double weight,
                                  MLPParams &grad) {
    // r = g + x g' + k (1 + x g), so dr/dg = 1 + k x and dr/dg' = x.
    std::vector<double> value_adj{weight * (1.0 + kDecayRate * x)};
    std::vector<double> tangent_adj{weight * x};

    for (std::size_t l = params.num_layers(); l-- > 0;) {
        const auto &a = trace.inputs[l];
        for (std::size_t o = 0; o < params.fan_out(l); ++o) {
            for (std::size_t i = 0; i < params.fan_in(l); ++i) {
                grad.weight(l, o, i) += value_adj[o] * a[i].value + tangent_adj[o] * a[i].tangent;
            }
            grad.bias(l, o) += value_adj[o];
        }
        if (l == 0) {
            break;
        }
        // Back through W, then through the tanh that produced `a`:
        // a = tanh(z), a' = s z' with s = 1 - a^2 and ds/dz = -2 a s.
        std::vector<double> next_value(params.fan_in(l), 0.0);
        std::vector<double> next_tangent(params.fan_in(l), 0.0);
        for (std::size_t i = 0; i < params.fan_in(l); ++i) {
            double av = 0.0;
            double at = 0.0;
            for (std::size_t o = 0; o < params.fan_out(l); ++o) {
                av += params.weight(l, o, i) * value_adj[o];
                at += params.weight(l, o, i) * tangent_adj[o];
            }
            const double s = 1.0 - a[i].value * a[i].value;
            next_value[i] = av * s - 2.0 * a[i].value * a[i].tangent * at;
            next_tangent[i] = at * s;
        }
        value_adj = std::move(next_value);
        tangent_adj = std::move(next_tangent);
    }
}

}  // namespace

double forward(const MLPParams &params, const NetworkInput &input) {
    return forward_trace(params, input).output.value;
}

AnsatzValue ansatz(const MLPParams &params, const NetworkInput &input) {
    return ansatz_from(input.x, forward_trace(params, input).output);
}

LossAndGradient loss_and_gradient(const MLPParams &params, std::span<const NetworkInput> batch) {
    if (batch.empty()) {
        throw InvalidArgument("batch must not be empty");
    }
    const double n = static_cast<double>(batch.size());
    LossAndGradient out{0.0, params.zeros_like()};
    for (const auto &input : batch) {
        const ForwardTrace trace = forward_trace(params, input);
        const AnsatzValue y = ansatz_from(input.x, trace.output);
        const double r = y.dy_dx + kDecayRate * y.y;
        out.loss += r * r;
        accumulate_residual_gradient(params, trace, input.x, 2.0 * r / n, out.gradient);
    }
    out.loss /= n;
    return out;
}

MLPParams parameter_gradient(const MLPParams &params, std::span<const NetworkInput> batch) {
    return loss_and_gradient(params, batch).gradient;
}

}  // namespace qpinn
