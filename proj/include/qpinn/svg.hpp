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

// Minimal SVG chart emitter. Output is a pure function of the inputs (no
// timestamps), so reruns are byte-identical.

#include <span>
#include <string>
#include <vector>

namespace qpinn::svg {

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 720;
    int height = 440;
};

struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
    std::string color = "#1f77b4";
    bool dashed = false;
};

/// Polylines over a shared, padded data range with ticks and a legend.
std::string line_chart(const ChartSpec &spec, std::span<const Series> series);

struct Bar {
    std::string label;
    double value = 0.0;
    /// Drawn as a horizontal marker over the bar.
    double reference = 0.0;
};

std::string bar_chart(const ChartSpec &spec, std::span<const Bar> bars, const std::string &value_legend,
                      const std::string &reference_legend);

}  // namespace qpinn::svg
