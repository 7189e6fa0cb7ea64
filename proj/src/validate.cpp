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

#include "qpinn/validate.hpp"

#include <algorithm>
#include <cmath>

#include "qpinn/error.hpp"
#include "qpinn/pinn.hpp"

namespace qpinn {

double exact_solution(double x) { return std::exp(-kDecayRate * x); }

double exact_solution_derivative(double x) { return -kDecayRate * std::exp(-kDecayRate * x); }

qsim::ProbVector closed_form_probabilities(double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {{0.5 * c * c, 0.5 * s * s, 0.5 * c * c, 0.5 * s * s}};
}

ErrorReport compare(const Predictor &predict, std::size_t n_eval) {
    const Grid grid = make_grid(n_eval);
    ErrorReport report;
    report.eval_points = n_eval;
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    for (double x : grid.points()) {
        const double err = std::abs(predict(x) - exact_solution(x));
        report.max_abs_error = std::max(report.max_abs_error, err);
        sum_abs += err;
        sum_sq += err * err;
    }
    const double n = static_cast<double>(n_eval);
    // Rounding in the sum must not push the mean past the max.
    report.mean_abs_error = std::min(sum_abs / n, report.max_abs_error);
    report.l2_error = std::sqrt(sum_sq / n);
    return report;
}

ErrorReport compare(const MLPParams &params, const FeatureScaling &scaling, std::size_t n_eval) {
    return compare(
        [&](double x) { return ansatz(params, make_input(x, scaling, DerivativeMode::frozen)).y; }, n_eval);
}

double finite_difference_check(const std::function<double(double)> &f, double x, double step) {
    if (!(step > 0.0)) {
        throw InvalidArgument("finite-difference step must be positive");
    }
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace qpinn
