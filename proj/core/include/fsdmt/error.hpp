// SPDX-License-Identifier: Apache-2.0
//
// fsdmt: finite-SNR diversity-multiplexing tradeoff toolkit
// Copyright (C) 2026 The fsdmt Authors
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

#ifndef FSDMT_ERROR_HPP
#define FSDMT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsdmt
{

enum class ErrorKind
{
    parameter,         // argument outside its documented domain
    regime,            // formula evaluated outside the SNR regime it is valid in
    precision,         // quadrature or tail evaluation could not reach the requested accuracy
    data,              // non-finite or malformed numeric data
    configuration,     // inconsistent request (e.g. nothing to compare against)
    not_psd,           // matrix has eigenvalues below the PSD tolerance
    rank,              // matrix is singular where full rank is required
    degenerate,        // zero capacity variance where a ratio needs it
    insufficient_data, // too few reliable Monte-Carlo points
    domain             // mathematical domain violation (e.g. tail approximation at z <= 0)
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const char* message)
{
    if (!condition)
        throw Error(kind, message);
}

} // namespace fsdmt

#endif
