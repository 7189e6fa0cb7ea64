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

#include <stdexcept>
#include <string>

namespace qpinn {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A caller supplied a value outside an operation's contract.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// Reading or writing an artifact or config file failed.
class IoError : public Error {
   public:
    using Error::Error;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
   public:
    using Error::Error;
};

}  // namespace qpinn
