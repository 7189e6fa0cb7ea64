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

#include "qpinn/artifacts.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpinn/error.hpp"

namespace qpinn {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string features_csv(const Grid &grid, const FeatureMatrix &features) {
    if (features.rows() != grid.size()) {
        throw InvalidArgument("feature matrix rows do not match the grid");
    }
    std::string out = "x,p00_raw,p01_raw,p10_raw,p11_raw,q0_std,q1_std,q2_std,q3_std\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += format_real(grid[i]);
        for (double v : features.raw[i]) {
            out += ',' + format_real(v);
        }
        for (double v : features.standardized[i]) {
            out += ',' + format_real(v);
        }
        out += '\n';
    }
    return out;
}

std::string loss_csv(std::span<const double> loss_history) {
    std::string out = "epoch,loss\n";
    for (std::size_t i = 0; i < loss_history.size(); ++i) {
        out += std::to_string(i + 1) + ',' + format_real(loss_history[i]) + '\n';
    }
    return out;
}

std::string solution_csv(std::span<const SolutionPoint> points) {
    std::string out = "x,y_pred,y_exact,abs_err\n";
    for (const auto &p : points) {
        out += format_real(p.x) + ',' + format_real(p.y_pred) + ',' + format_real(p.y_exact) + ',' +
               format_real(p.abs_err) + '\n';
    }
    return out;
}

std::string histogram_csv(const qsim::Counts &counts, const qsim::ProbVector &exact) {
    const qsim::ProbVector freq = qsim::counts_to_probabilities(counts);
    std::string out = "outcome,count,frequency,exact_probability\n";
    for (std::size_t k = 0; k < qsim::kNumOutcomes; ++k) {
        out += std::string(qsim::kOutcomeLabels[k]) + ',' + std::to_string(counts[k]) + ',' +
               format_real(freq[k]) + ',' + format_real(exact[k]) + '\n';
    }
    return out;
}

std::string checkpoint_json(const MLPParams &params) {
    nlohmann::json j;
    j["layer_sizes"] = params.layer_sizes();
    j["parameters"] = std::vector<double>(params.values().begin(), params.values().end());
    return j.dump(2) + '\n';
}

MLPParams parse_checkpoint(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        return MLPParams(j.at("layer_sizes").get<std::vector<std::size_t>>(),
                         j.at("parameters").get<std::vector<double>>());
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("malformed checkpoint: ") + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qpinn
