// SPDX-License-Identifier: Apache-2.0
//
// rissense - RIS-aided FMCW radar simulation and scene depth estimation
// Copyright (C) 2026 The rissense authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rissense {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDistance : Error {
    using Error::Error;
};

struct EmptyScene : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct RangeOverflow : Error {
    using Error::Error;
};

struct DegenerateGrid : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Malformed input; `row` is the 1-based data row for tabular sources, 0 otherwise.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg), row(0) {}
    ParseError(std::size_t row_, const std::string& msg)
        : Error("row " + std::to_string(row_) + ": " + msg), row(row_) {}
    std::size_t row;
};

// Well-formed input carrying physically invalid values.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg), row(0) {}
    ValidationError(std::size_t row_, const std::string& msg)
        : Error("row " + std::to_string(row_) + ": " + msg), row(row_) {}
    std::size_t row;
};

} // namespace rissense
