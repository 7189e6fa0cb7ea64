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

// Command-line flag handling for the qpinn tool. Talks to the library only
// through the C API.

#include <memory>
#include <string>
#include <vector>

#include "qpinn/qpinn.h"

namespace qpinn_cli {

struct ConfigDeleter {
    void operator()(qpinn_config *c) const { qpinn_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<qpinn_config, ConfigDeleter>;

/// Fresh config with every default. Throws std::runtime_error on failure.
ConfigPtr make_default_config();

struct ParseResult {
    /// Configuration to run; null when the process should exit instead.
    ConfigPtr config;
    int exit_code = 0;
    /// Text for stdout (help) or stderr (errors).
    std::string message;
};

/// Defaults, then the optional --config JSON file, then explicit flags.
/// Unknown flags and invalid values produce a nonzero exit code and a
/// message that includes the usage text.
ParseResult parse_config(const std::vector<std::string> &args);

}  // namespace qpinn_cli
