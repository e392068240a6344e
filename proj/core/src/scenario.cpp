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

#include "fsdmt/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fsdmt/error.hpp"

namespace fsdmt
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail(const std::string& message)
{
    throw Error(ErrorKind::data, "scenario: " + message);
}

std::complex<double> parse_complex(const json& j, const char* what)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(std::string(what) + " must be a number or an [re, im] pair");
}

CorrelationMatrix parse_correlation(const json* j, int size, const std::string& label, std::vector<std::string>& notes)
{
    if (j == nullptr || j->is_null())
        return CorrelationMatrix::identity(size);
    if (!j->is_object() || !j->contains("type"))
        fail(label + " must be an object with a \"type\" key");

    const std::string type = j->at("type").get<std::string>();
    if (type == "exp")
    {
        if (!j->contains("rho") || !j->at("rho").is_number())
            fail(label + " of type exp needs a numeric \"rho\"");
        return make_exponential_correlation(size, j->at("rho").get<double>());
    }
    if (type != "explicit")
        fail(label + " has unknown type \"" + type + "\"");

    const json& rows = j->value("rows", json::array());
    if (!rows.is_array() || static_cast<int>(rows.size()) != size)
        fail(label + " needs " + std::to_string(size) + " rows");
    CMatrix entries(size, size);
    for (int i = 0; i < size; ++i)
    {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != size)
            fail(label + " row " + std::to_string(i) + " has the wrong length");
        for (int k = 0; k < size; ++k)
            entries(i, k) = parse_complex(rows[i][k], "correlation entry");
    }

    CorrelationMatrix r(entries);
    const double scale = size / r.trace();
    std::ostringstream note;
    note.precision(17);
    note << label << ": trace " << r.trace() << " normalized to " << size << " (scale factor " << scale << ")";
    notes.push_back(note.str());
    return r.scaled_to_trace(size);
}

int positive_int(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc.at(key).is_number_integer())
        fail(std::string("\"") + key + "\" must be an integer");
    const int v = doc.at(key).get<int>();
    if (v < 1)
        fail(std::string("\"") + key + "\" must be positive");
    return v;
}

const json* find(const json& j, const char* key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

Scenario build(const json& doc)
{
    if (!doc.is_object())
        fail("top level must be an object");
    const std::string kind = doc.value("model", std::string());
    const ChannelDims dims(positive_int(doc, "m"), positive_int(doc, "n"));
    std::vector<std::string> notes;

    if (kind == "iid")
    {
        const std::string dist = doc.value("entry_dist", std::string("gaussian"));
        if (dist == "gaussian")
            return {ChannelModel::iid(dims, EntryDistribution::gaussian), notes};
        if (dist == "two_point")
            return {ChannelModel::iid(dims, EntryDistribution::two_point), notes};
        fail("unknown entry_dist \"" + dist + "\"");
    }
    if (kind == "kronecker")
    {
        auto rt = parse_correlation(find(doc, "rt"), dims.m(), "rt", notes);
        auto rr = parse_correlation(find(doc, "rr"), dims.n(), "rr", notes);
        return {ChannelModel::kronecker(dims, std::move(rt), std::move(rr)), notes};
    }
    if (kind == "keyhole")
    {
        const json* modes = find(doc, "modes");
        if (modes == nullptr)
            return {ChannelModel::single_keyhole(dims), notes};
        if (!modes->is_array() || modes->empty())
            fail("\"modes\" must be a non-empty list");
        std::vector<KeyholeMode> parsed;
        for (std::size_t k = 0; k < modes->size(); ++k)
        {
            const json& jm = (*modes)[k];
            const std::string tag = "modes[" + std::to_string(k) + "]";
            if (!jm.is_object())
                fail(tag + " must be an object");
            const std::complex<double> b = jm.contains("b") ? parse_complex(jm.at("b"), "b") : 1.0;
            auto rt = parse_correlation(find(jm, "rt"), dims.m(), tag + ".rt", notes);
            auto rr = parse_correlation(find(jm, "rr"), dims.n(), tag + ".rr", notes);
            parsed.push_back(KeyholeMode{b, std::move(rt), std::move(rr), jm.value("beta_t", 1.0), jm.value("beta_r", 1.0)});
        }
        return {ChannelModel::keyhole(dims, std::move(parsed)), notes};
    }
    fail("\"model\" must be one of iid, kronecker, keyhole");
}

} // namespace

Scenario parse_scenario(const std::string& json_text)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::exception& e)
    {
        fail(e.what());
    }
    try
    {
        return build(doc);
    }
    catch (const json::exception& e)
    {
        fail(e.what());
    }
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace fsdmt
