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

#ifndef FSDMT_APP_TABLE_HPP
#define FSDMT_APP_TABLE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace fsdmt::app
{

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-major description, row-major storage. Every row has one cell per column.
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::size_t column(const std::string& name) const; // throws std::out_of_range
};

/// Doubles are written with 10 significant digits; NaN as "nan", infinities as "inf" / "-inf".
void write_csv(const Table& table, std::ostream& out);

/// Array of objects keyed by column name; non-finite doubles become null.
void write_json(const Table& table, std::ostream& out);

std::string format_double(double v);

} // namespace fsdmt::app

#endif
