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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qpinn/error.hpp"
#include "qpinn/pinn.hpp"

using namespace qpinn;

namespace {

MLPParams random_params(std::vector<std::size_t> sizes, std::mt19937_64 &gen, double scale = 1.0) {
    MLPParams p(std::move(sizes));
    std::normal_distribution<double> normal(0.0, scale);
    for (double &v : p.values()) v = normal(gen);
    return p;
}

FeatureRow random_row(std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    return {u(gen), u(gen), u(gen), u(gen)};
}

// One hidden unit: w = [0.3, -0.2, 0.1, 0.4, -0.5], b = 0.1, w_out = 0.7,
// b_out = -0.2, evaluated at x = 0.4, q = [0.5, -1.2, 0.5, -1.2].
MLPParams hand_network() {
    MLPParams p({5, 1, 1});
    const double w[5] = {0.3, -0.2, 0.1, 0.4, -0.5};
    for (std::size_t i = 0; i < 5; ++i) p.weight(0, 0, i) = w[i];
    p.bias(0, 0) = 0.1;
    p.weight(1, 0, 0) = 0.7;
    p.bias(1, 0) = -0.2;
    return p;
}

const NetworkInput kHandInput{0.4, {0.5, -1.2, 0.5, -1.2}, {}};

// Hand evaluation of the expressions above at 30 digits.
constexpr double kHandG = 0.26482573918749427458;
constexpr double kHandY = 1.10593029567499770983;
constexpr double kHandDy = 0.31178637327700276878;

}  // namespace

TEST(InitParams, deterministic_bounded_zero_bias) {
    const std::vector<std::size_t> sizes{5, 32, 32, 1};
    const MLPParams a = init_params(sizes, 17);
    const MLPParams b = init_params(sizes, 17);
    EXPECT_EQ(a, b);
    EXPECT_NE(init_params(sizes, 18), a);
    for (std::size_t l = 0; l < a.num_layers(); ++l) {
        const double bound = std::sqrt(6.0 / static_cast<double>(a.fan_in(l) + a.fan_out(l)));
        for (std::size_t o = 0; o < a.fan_out(l); ++o) {
            EXPECT_EQ(a.bias(l, o), 0.0);
            for (std::size_t i = 0; i < a.fan_in(l); ++i) {
                EXPECT_LE(std::abs(a.weight(l, o, i)), bound);
            }
        }
    }
}

TEST(InitParams, rejects_malformed_sizes) {
    EXPECT_THROW(init_params({5}, 0), InvalidArgument);
    EXPECT_THROW(init_params({4, 8, 1}, 0), InvalidArgument);
    EXPECT_THROW(init_params({5, 8, 2}, 0), InvalidArgument);
    EXPECT_THROW(init_params({5, 0, 1}, 0), InvalidArgument);
    EXPECT_NO_THROW(init_params({5, 1}, 0));
}

TEST(MLPParams, layout_and_validation) {
    MLPParams p({5, 3, 1});
    EXPECT_EQ(p.size(), 5u * 3 + 3 + 3 * 1 + 1);
    p.weight(1, 0, 2) = 9.0;
    EXPECT_EQ(p.values()[5 * 3 + 3 + 2], 9.0);
    EXPECT_THROW(MLPParams({5, 3, 1}, std::vector<double>(3, 0.0)), InvalidArgument);
    std::vector<double> bad(p.size(), 0.0);
    bad[4] = std::nan("");
    EXPECT_THROW(MLPParams({5, 3, 1}, bad), InvalidArgument);
}

TEST(Forward, zero_network_outputs_zero) {
    const MLPParams p({5, 8, 8, 1});
    EXPECT_EQ(forward(p, {0.7, {1, 2, 3, 4}, {}}), 0.0);
}

TEST(Forward, hand_evaluated_single_unit) {
    const MLPParams p = hand_network();
    EXPECT_NEAR(forward(p, kHandInput), kHandG, 1e-15);
    EXPECT_EQ(forward(p, kHandInput), forward(p, kHandInput));
}

TEST(Forward, rejects_empty_params) {
    EXPECT_THROW(forward(MLPParams{}, kHandInput), InvalidArgument);
}

TEST(Ansatz, hand_evaluated_single_unit) {
    const AnsatzValue v = ansatz(hand_network(), kHandInput);
    EXPECT_NEAR(v.y, kHandY, 1e-15);
    EXPECT_NEAR(v.dy_dx, kHandDy, 1e-15);
}

TEST(Ansatz, initial_condition_is_exact) {
    std::mt19937_64 gen(2024);
    for (int i = 0; i < 1000; ++i) {
        const MLPParams p = random_params({5, 6, 1}, gen, 3.0);
        const AnsatzValue v = ansatz(p, {0.0, random_row(gen), random_row(gen)});
        EXPECT_EQ(v.y, 1.0);
    }
}

TEST(Ansatz, zero_network_is_constant_one) {
    const MLPParams p({5, 4, 1});
    for (double x : {0.0, 0.3, 1.0}) {
        const AnsatzValue v = ansatz(p, {x, {0.2, -0.1, 0.2, -0.1}, {}});
        EXPECT_EQ(v.y, 1.0);
        EXPECT_EQ(v.dy_dx, 0.0);
    }
}

TEST(Ansatz, architecture_never_changes_value_at_zero) {
    std::mt19937_64 gen(8);
    for (const auto &sizes : std::vector<std::vector<std::size_t>>{{5, 1}, {5, 3, 1}, {5, 16, 16, 1}, {5, 4, 7, 2, 1}}) {
        const MLPParams p = random_params(sizes, gen);
        EXPECT_EQ(ansatz(p, {0.0, random_row(gen), {}}).y, 1.0);
    }
}

TEST(Ansatz, input_derivative_matches_finite_differences_frozen) {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    constexpr double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const MLPParams p = random_params({5, 4, 1}, gen, 0.8);
        const FeatureRow q = random_row(gen);
        const double x = unit(gen);
        const double fd = (ansatz(p, {x + h, q, {}}).y - ansatz(p, {x - h, q, {}}).y) / (2 * h);
        const double ad = ansatz(p, {x, q, {}}).dy_dx;
        EXPECT_LE(std::abs(ad - fd), 1e-6 * std::max(1.0, std::abs(fd))) << trial;
    }
}

TEST(Ansatz, input_derivative_matches_finite_differences_analytic) {
    std::mt19937_64 gen(78);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    const FeatureScaling scaling = build_feature_matrix(make_grid(64), 0, 0).scaling;
    constexpr double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const MLPParams p = random_params({5, 4, 1}, gen, 0.8);
        const double x = unit(gen);
        auto y = [&](double t) { return ansatz(p, make_input(t, scaling, DerivativeMode::analytic_diff)).y; };
        const double fd = (y(x + h) - y(x - h)) / (2 * h);
        const double ad = ansatz(p, make_input(x, scaling, DerivativeMode::analytic_diff)).dy_dx;
        EXPECT_LE(std::abs(ad - fd), 1e-6 * std::max(1.0, std::abs(fd))) << trial;
    }
}

TEST(ParameterGradient, matches_finite_differences) {
    std::mt19937_64 gen(99);
    const FeatureMatrix fm = build_feature_matrix(make_grid(5), 0, 0);
    for (auto mode : {DerivativeMode::frozen, DerivativeMode::analytic_diff}) {
        const auto batch = make_batch(make_grid(5), fm, mode);
        for (int trial = 0; trial < 10; ++trial) {
            const MLPParams p = random_params({5, 4, 1}, gen, 0.7);
            const MLPParams g = parameter_gradient(p, batch);
            constexpr double h = 1e-5;
            for (std::size_t k = 0; k < p.size(); ++k) {
                MLPParams plus = p;
                MLPParams minus = p;
                plus.values()[k] += h;
                minus.values()[k] -= h;
                const double fd = (ode_loss(plus, batch) - ode_loss(minus, batch)) / (2 * h);
                EXPECT_LE(std::abs(g.values()[k] - fd), 1e-5 * std::max(1.0, std::abs(fd)))
                    << "entry " << k << " trial " << trial;
            }
        }
    }
}

TEST(ParameterGradient, vanishes_at_zero_residual) {
    // With only the output bias set, g = b and r = 2 + (1 + 2x) b, so
    // b = -2 / (1 + 2x) zeroes the residual at x.
    MLPParams p({5, 3, 1});
    const double x = 0.25;
    p.bias(1, 0) = -2.0 / (1.0 + 2.0 * x);
    const std::vector<NetworkInput> batch{{x, {0.1, 0.2, 0.3, 0.4}, {}}, {x, {-1, 0.5, 0, 2}, {0.3, 0, 0, 0}}};
    const LossAndGradient lg = loss_and_gradient(p, batch);
    EXPECT_NEAR(lg.loss, 0.0, 1e-30);
    for (double v : lg.gradient.values()) EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST(ParameterGradient, batch_is_mean_of_points) {
    std::mt19937_64 gen(4);
    const MLPParams p = random_params({5, 4, 3, 1}, gen, 0.5);
    std::vector<NetworkInput> batch;
    for (int i = 0; i < 6; ++i) batch.push_back({0.15 * i, random_row(gen), random_row(gen)});
    const MLPParams whole = parameter_gradient(p, batch);
    MLPParams mean = p.zeros_like();
    for (const auto &in : batch) {
        const MLPParams single = parameter_gradient(p, std::span(&in, 1));
        for (std::size_t k = 0; k < p.size(); ++k) mean.values()[k] += single.values()[k] / batch.size();
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_NEAR(whole.values()[k], mean.values()[k], 1e-13 * std::max(1.0, std::abs(mean.values()[k])));
    }
}

TEST(ParameterGradient, rejects_empty_batch) {
    EXPECT_THROW(parameter_gradient(MLPParams({5, 2, 1}), {}), InvalidArgument);
}
