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
#include <vector>

#include "rissense/geometry.hpp"

namespace rissense {

// Dense complex matrix, column-major.
struct CMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    CMat() = default;
    CMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx* col(std::size_t c) { return data.data() + c * rows; }
    const cplx* col(std::size_t c) const { return data.data() + c * rows; }
    cplx& at(std::size_t r, std::size_t c) { return data[c * rows + r]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data[c * rows + r]; }
};

} // namespace rissense
