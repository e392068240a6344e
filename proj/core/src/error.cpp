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

#include "fsdmt/error.hpp"

namespace fsdmt
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::parameter:
        return "parameter";
    case ErrorKind::regime:
        return "regime";
    case ErrorKind::precision:
        return "precision";
    case ErrorKind::data:
        return "data";
    case ErrorKind::configuration:
        return "configuration";
    case ErrorKind::not_psd:
        return "not_psd";
    case ErrorKind::rank:
        return "rank";
    case ErrorKind::degenerate:
        return "degenerate";
    case ErrorKind::insufficient_data:
        return "insufficient_data";
    case ErrorKind::domain:
        return "domain";
    }
    return "unknown";
}

} // namespace fsdmt
