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

#include "cli_args.hpp"

#include <map>
#include <stdexcept>

#include "CLI11.hpp"

namespace qpinn_cli {

namespace {

struct FlagSpec {
    const char *key;
    const char *help;
};

// Flag name (without dashes) doubles as the config key.
constexpr FlagSpec kFlags[] = {
    {"n-points", "number of collocation points in [0, 1]"},
    {"n-eval", "number of evaluation points for the error report"},
    {"shots", "shots per collocation point for the features (0 = exact probabilities)"},
    {"seed", "seed for initialization and sampling"},
    {"epochs", "full-batch Adam iterations"},
    {"lr", "Adam learning rate"},
    {"beta1", "Adam first-moment decay"},
    {"beta2", "Adam second-moment decay"},
    {"epsilon", "Adam denominator offset"},
    {"hidden", "hidden layer widths, comma separated"},
    {"mode", "dy/dx treatment of the features: frozen or analytic-diff"},
    {"histogram-t", "x at which the measurement histogram is exported"},
    {"histogram-shots", "shots for the exported histogram"},
    {"out", "output directory for the artifacts"},
};

std::string get_value(const qpinn_config *config, const char *key) {
    std::size_t required = 0;
    if (qpinn_config_get(config, key, nullptr, 0, &required) != QPINN_OK) {
        throw std::runtime_error(qpinn_last_error());
    }
    std::string buffer(required, '\0');
    if (qpinn_config_get(config, key, buffer.data(), buffer.size(), &required) != QPINN_OK) {
        throw std::runtime_error(qpinn_last_error());
    }
    buffer.resize(required - 1);
    return buffer;
}

}  // namespace

ConfigPtr make_default_config() {
    qpinn_config *raw = nullptr;
    if (qpinn_config_create(&raw) != QPINN_OK) {
        throw std::runtime_error(qpinn_last_error());
    }
    return ConfigPtr(raw);
}

ParseResult parse_config(const std::vector<std::string> &args) {
    ParseResult result;
    ConfigPtr config = make_default_config();

    CLI::App app{"Solve y' + 2y = 0, y(0) = 1 with a PINN fed by two-qubit circuit features.", "qpinn"};
    app.get_formatter()->column_width(28);

    std::string config_file;
    app.add_option("--config", config_file, "flat JSON file of settings (flags override it)");

    std::map<std::string, std::string> values;
    for (const auto &flag : kFlags) {
        const std::string help = std::string(flag.help) + " [default: " + get_value(config.get(), flag.key) + "]";
        app.add_option(std::string("--") + flag.key, values[flag.key], help)->allow_extra_args(false);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        result.message = app.help();
        return result;
    } catch (const CLI::ParseError &e) {
        result.exit_code = 2;
        result.message = std::string("error: ") + e.what() + "\n\n" + app.help();
        return result;
    }

    auto invalid = [&](const std::string &what) {
        result.exit_code = 2;
        result.message = "error: " + what + "\n\n" + app.help();
        return std::move(result);
    };

    if (!config_file.empty() && qpinn_config_load_file(config.get(), config_file.c_str()) != QPINN_OK) {
        return invalid(qpinn_last_error());
    }
    for (const auto &flag : kFlags) {
        if (app.count(std::string("--") + flag.key) == 0) {
            continue;
        }
        if (qpinn_config_set(config.get(), flag.key, values[flag.key].c_str()) != QPINN_OK) {
            return invalid(qpinn_last_error());
        }
    }
    if (qpinn_config_validate(config.get()) != QPINN_OK) {
        return invalid(qpinn_last_error());
    }
    result.config = std::move(config);
    return result;
}

}  // namespace qpinn_cli
