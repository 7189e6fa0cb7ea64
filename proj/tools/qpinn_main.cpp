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

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "cli_args.hpp"
#include "qpinn/qpinn.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qpinn_cli::ParseResult parsed;
    try {
        parsed = qpinn_cli::parse_config(args);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    if (!parsed.config) {
        std::fputs(parsed.message.c_str(), parsed.exit_code == 0 ? stdout : stderr);
        return parsed.exit_code;
    }

    qpinn_run_summary summary{};
    const qpinn_status status = qpinn_run_experiment(parsed.config.get(), &summary);
    if (status != QPINN_OK) {
        std::fprintf(stderr, "error (%s): %s\n", qpinn_status_string(status), qpinn_last_error());
        return 1;
    }

    char out_dir[4096];
    std::size_t required = 0;
    if (qpinn_config_get(parsed.config.get(), "out", out_dir, sizeof out_dir, &required) != QPINN_OK) {
        out_dir[0] = '\0';
    }
    std::printf("initial loss     %.6e\n", summary.initial_loss);
    std::printf("final loss       %.6e\n", summary.final_loss);
    std::printf("max abs error    %.6e\n", summary.errors.max_abs_error);
    std::printf("mean abs error   %.6e\n", summary.errors.mean_abs_error);
    std::printf("l2 error         %.6e\n", summary.errors.l2_error);
    std::printf("eval points      %zu\n", summary.errors.eval_points);
    std::printf("training time    %.2f s\n", summary.wall_time);
    std::printf("artifacts        %s\n", out_dir);
    return 0;
}
