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

#include <cstddef>
#include <functional>

#include "qpinn/features.hpp"
#include "qpinn/nn.hpp"
#include "qpinn/qsim.hpp"

namespace qpinn {

/// e^{-2x}.
double exact_solution(double x);
double exact_solution_derivative(double x);

/// [cos^2 t / 2, sin^2 t / 2, cos^2 t / 2, sin^2 t / 2], derived by hand from
/// the product form of the circuit. Independent of the statevector engine.
qsim::ProbVector closed_form_probabilities(double t);

struct ErrorReport {
    double max_abs_error = 0.0;
    double mean_abs_error = 0.0;
    /// Root mean square of the pointwise errors.
    double l2_error = 0.0;
    std::size_t eval_points = 0;
};

using Predictor = std::function<double(double)>;

/// Errors of `predict` against exact_solution on a uniform n_eval-point grid
/// over [0, 1]. Requires n_eval >= 2.
ErrorReport compare(const Predictor &predict, std::size_t n_eval);

/// Same, for a trained network fed exact features standardized with the
/// training scaling.
ErrorReport compare(const MLPParams &params, const FeatureScaling &scaling, std::size_t n_eval);

/// (f(x + step) - f(x - step)) / (2 step).
double finite_difference_check(const std::function<double(double)> &f, double x, double step);

}  // namespace qpinn
