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

#include "qpinn/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "json.hpp"
#include "qpinn/artifacts.hpp"
#include "qpinn/error.hpp"
#include "qpinn/rng.hpp"
#include "qpinn/svg.hpp"

namespace qpinn {

namespace {

// Shortest text that parses back to the same double.
std::string setting_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string normalize_key(std::string_view key) {
    std::string out(key);
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

[[noreturn]] void reject(std::string_view key, std::string_view value, std::string_view expectation) {
    throw InvalidArgument(std::string(key) + " must be " + std::string(expectation) + ", got '" +
                          std::string(value) + "'");
}

std::uint64_t parse_count(std::string_view key, std::string_view value, std::uint64_t minimum,
                          std::string_view expectation) {
    std::uint64_t out = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || end != value.data() + value.size() || value.empty() || out < minimum) {
        reject(key, value, expectation);
    }
    return out;
}

double parse_real(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || end != value.data() + value.size() || value.empty() || !std::isfinite(out)) {
        reject(key, value, "a finite number");
    }
    return out;
}

std::uint64_t parse_seed(std::string_view key, std::string_view value) {
    std::uint64_t u = 0;
    const char *first = value.data();
    const char *last = value.data() + value.size();
    if (auto [end, ec] = std::from_chars(first, last, u); ec == std::errc() && end == last && !value.empty()) {
        return u;
    }
    std::int64_t s = 0;
    if (auto [end, ec] = std::from_chars(first, last, s); ec == std::errc() && end == last && !value.empty()) {
        return static_cast<std::uint64_t>(s);
    }
    reject(key, value, "an integer");
}

std::vector<std::size_t> parse_hidden(std::string_view key, std::string_view value) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = value.find(',', start);
        const std::string_view part = value.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(parse_count(key, part, 1, "a comma-separated list of positive integers"));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string join_hidden(const std::vector<std::size_t> &hidden) {
    std::string out;
    for (std::size_t i = 0; i < hidden.size(); ++i) {
        out += (i ? "," : "") + std::to_string(hidden[i]);
    }
    return out;
}

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

bool is_known_key(std::string_view key) {
    return std::find(kSettingKeys.begin(), kSettingKeys.end(), key) != kSettingKeys.end();
}

}  // namespace

void RunConfig::validate() const {
    train.validate();
    if (!(histogram_t >= 0.0 && histogram_t <= 1.0)) {
        throw InvalidArgument("histogram-t must lie in [0, 1]");
    }
    if (histogram_shots == 0) {
        throw InvalidArgument("histogram-shots must be a positive integer");
    }
    if (n_eval < 2) {
        throw InvalidArgument("n-eval must be at least 2");
    }
    if (out_dir.empty()) {
        throw InvalidArgument("out must name a directory");
    }
}

void apply_setting(RunConfig &config, std::string_view raw_key, std::string_view value) {
    const std::string key = normalize_key(raw_key);
    if (key == "n-points") {
        config.train.grid_size = parse_count(key, value, 2, "an integer >= 2");
    } else if (key == "n-eval") {
        config.n_eval = parse_count(key, value, 2, "an integer >= 2");
    } else if (key == "shots") {
        config.train.shots = parse_count(key, value, 0, "a non-negative integer (0 = exact)");
    } else if (key == "seed") {
        config.train.seed = parse_seed(key, value);
    } else if (key == "epochs") {
        config.train.epochs = parse_count(key, value, 1, "a positive integer");
    } else if (key == "lr") {
        const double lr = parse_real(key, value);
        if (!(lr > 0.0)) {
            reject(key, value, "positive");
        }
        config.train.learning_rate = lr;
    } else if (key == "beta1" || key == "beta2") {
        const double b = parse_real(key, value);
        if (!(b >= 0.0 && b < 1.0)) {
            reject(key, value, "in [0, 1)");
        }
        (key == "beta1" ? config.train.beta1 : config.train.beta2) = b;
    } else if (key == "epsilon") {
        const double e = parse_real(key, value);
        if (!(e > 0.0)) {
            reject(key, value, "positive");
        }
        config.train.epsilon = e;
    } else if (key == "hidden") {
        config.train.hidden_sizes = parse_hidden(key, value);
    } else if (key == "mode") {
        config.train.derivative_mode = parse_derivative_mode(value);
    } else if (key == "histogram-t") {
        const double t = parse_real(key, value);
        if (!(t >= 0.0 && t <= 1.0)) {
            reject(key, value, "in [0, 1]");
        }
        config.histogram_t = t;
    } else if (key == "histogram-shots") {
        config.histogram_shots = parse_count(key, value, 1, "a positive integer");
    } else if (key == "out") {
        if (value.empty()) {
            reject(key, value, "a directory path");
        }
        config.out_dir = std::filesystem::path(std::string(value));
    } else {
        throw InvalidArgument("unknown setting '" + std::string(raw_key) + "'");
    }
}

std::string get_setting(const RunConfig &config, std::string_view raw_key) {
    const std::string key = normalize_key(raw_key);
    if (key == "n-points") return std::to_string(config.train.grid_size);
    if (key == "n-eval") return std::to_string(config.n_eval);
    if (key == "shots") return std::to_string(config.train.shots);
    if (key == "seed") return std::to_string(config.train.seed);
    if (key == "epochs") return std::to_string(config.train.epochs);
    if (key == "lr") return setting_real(config.train.learning_rate);
    if (key == "beta1") return setting_real(config.train.beta1);
    if (key == "beta2") return setting_real(config.train.beta2);
    if (key == "epsilon") return setting_real(config.train.epsilon);
    if (key == "hidden") return join_hidden(config.train.hidden_sizes);
    if (key == "mode") return std::string(to_string(config.train.derivative_mode));
    if (key == "histogram-t") return setting_real(config.histogram_t);
    if (key == "histogram-shots") return std::to_string(config.histogram_shots);
    if (key == "out") return config.out_dir.string();
    throw InvalidArgument("unknown setting '" + std::string(raw_key) + "'");
}

void apply_json(RunConfig &config, std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InvalidArgument("config must be a flat JSON object");
    }
    RunConfig updated = config;
    for (const auto &[key, value] : j.items()) {
        if (!is_known_key(normalize_key(key))) {
            throw InvalidArgument("unknown config key '" + key + "'");
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number_unsigned()) {
            text = std::to_string(value.get<std::uint64_t>());
        } else if (value.is_number_integer()) {
            text = std::to_string(value.get<std::int64_t>());
        } else if (value.is_number_float()) {
            text = setting_real(value.get<double>());
        } else if (value.is_array() && normalize_key(key) == "hidden") {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (!value[i].is_number_integer()) {
                    throw InvalidArgument("hidden must be an array of positive integers");
                }
                text += (i ? "," : "") + std::to_string(value[i].get<std::int64_t>());
            }
        } else {
            throw InvalidArgument("config key '" + key + "' has an unsupported value type");
        }
        apply_setting(updated, key, text);
    }
    config = std::move(updated);
}

void load_config_file(RunConfig &config, const std::filesystem::path &path) {
    apply_json(config, read_text_file(path));
}

std::string config_to_json(const RunConfig &config) {
    nlohmann::ordered_json j;
    j["n-points"] = config.train.grid_size;
    j["n-eval"] = config.n_eval;
    j["shots"] = config.train.shots;
    j["seed"] = config.train.seed;
    j["epochs"] = config.train.epochs;
    j["lr"] = config.train.learning_rate;
    j["hidden"] = config.train.hidden_sizes;
    j["mode"] = to_string(config.train.derivative_mode);
    j["histogram-t"] = config.histogram_t;
    j["histogram-shots"] = config.histogram_shots;
    j["beta1"] = config.train.beta1;
    j["beta2"] = config.train.beta2;
    j["epsilon"] = config.train.epsilon;
    return j.dump(2);
}

RunSummary run_experiment(const RunConfig &config) {
    config.validate();

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config.out_dir)) {
        throw IoError("cannot create output directory '" + config.out_dir.string() + "'" +
                      (ec ? ": " + ec.message() : std::string()));
    }

    const TrainReport report = train(config.train);
    const FeatureScaling &scaling = report.features.scaling;

    RunSummary summary;
    summary.initial_loss = report.loss_history.front();
    summary.final_loss = report.final_loss;
    summary.wall_time = report.wall_time;
    summary.errors = compare(report.final_params, scaling, config.n_eval);

    const Grid eval_grid = make_grid(config.n_eval);
    std::vector<SolutionPoint> solution;
    solution.reserve(eval_grid.size());
    for (double x : eval_grid.points()) {
        const double y = ansatz(report.final_params, make_input(x, scaling, DerivativeMode::frozen)).y;
        const double exact = exact_solution(x);
        solution.push_back({x, y, exact, std::abs(y - exact)});
    }

    const qsim::ProbVector exact_hist = quantum_features(config.histogram_t, 0, 0);
    const qsim::Counts counts = qsim::sample_counts(exact_hist, config.histogram_shots, config.train.seed);

    nlohmann::ordered_json errors;
    errors["max_abs_error"] = summary.errors.max_abs_error;
    errors["mean_abs_error"] = summary.errors.mean_abs_error;
    errors["l2_error"] = summary.errors.l2_error;
    errors["eval_points"] = summary.errors.eval_points;
    errors["initial_loss"] = summary.initial_loss;
    errors["final_loss"] = summary.final_loss;
    errors["config_echo"] = nlohmann::ordered_json::parse(config_to_json(config));

    const auto &dir = config.out_dir;
    write_text_file(dir / "features.csv", features_csv(report.grid, report.features));
    write_text_file(dir / "loss.csv", loss_csv(report.loss_history));
    write_text_file(dir / "solution.csv", solution_csv(solution));
    write_text_file(dir / "errors.json", errors.dump(2) + '\n');
    write_text_file(dir / "histogram.csv", histogram_csv(counts, exact_hist));
    write_text_file(dir / "checkpoint.json", checkpoint_json(report.final_params));

    std::vector<svg::Series> lines(2);
    lines[0] = {"exact e^(-2x)", {}, {}, "#333333", true};
    lines[1] = {"PINN prediction", {}, {}, "#d62728", false};
    for (const auto &p : solution) {
        lines[0].xs.push_back(p.x);
        lines[0].ys.push_back(p.y_exact);
        lines[1].xs.push_back(p.x);
        lines[1].ys.push_back(p.y_pred);
    }
    write_text_file(dir / "plot_solution.svg",
                    svg::line_chart({"Analytical vs predicted solution of y' + 2y = 0", "x", "y(x)"}, lines));

    const qsim::ProbVector freq = qsim::counts_to_probabilities(counts);
    std::vector<svg::Bar> bars;
    for (std::size_t k = 0; k < qsim::kNumOutcomes; ++k) {
        bars.push_back({std::string(qsim::kOutcomeLabels[k]), freq[k], exact_hist[k]});
    }
    write_text_file(dir / "plot_histogram.svg",
                    svg::bar_chart({"Measurement outcomes at t = " + short_real(config.histogram_t) + " (" +
                                        std::to_string(config.histogram_shots) + " shots)",
                                    "outcome", "probability"},
                                   bars, "sampled frequency", "exact probability"));
    return summary;
}

}  // namespace qpinn
