// SPDX-License-Identifier: Apache-2.0
//
// uldl-dof: degrees of freedom of uplink-downlink two-cell MIMO networks
// Copyright (C) 2026 The uldl-dof Authors
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

#include "uldl/cli/output.hpp"

namespace uldl::cli {

Record::Record(const std::string &kind) : fields_(nlohmann::ordered_json::object()) { fields_["record"] = kind; }

Record &Record::set(const std::string &key, const std::string &value)
{
    fields_[key] = value;
    return *this;
}

Record &Record::set(const std::string &key, const char *value) { return set(key, std::string(value)); }

Record &Record::set(const std::string &key, std::int64_t value)
{
    fields_[key] = value;
    return *this;
}

Record &Record::set(const std::string &key, std::uint64_t value)
{
    fields_[key] = value;
    return *this;
}

Record &Record::set(const std::string &key, double value)
{
    fields_[key] = value;
    return *this;
}

Record &Record::set(const std::string &key, bool value)
{
    fields_[key] = value;
    return *this;
}

Record &Record::rational(const std::string &key, const Rational &value)
{
    fields_[key] = to_fraction_string(value);
    fields_[key + "_decimal"] = std::stod(to_decimal_string(value, 6));
    return *this;
}

Record &Record::config(const CellConfig &cfg)
{
    set("m1", cfg.m1);
    set("m2", cfg.m2);
    set("n1", cfg.n1);
    set("n2", cfg.n2);
    return *this;
}

std::vector<std::string> Record::keys() const
{
    std::vector<std::string> out;
    for (const auto &item : fields_.items())
        out.push_back(item.key());
    return out;
}

std::string csv_escape(const std::string &field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void RecordWriter::write(const Record &record)
{
    if (format_ == Format::JsonLines) {
        out_ << record.fields().dump() << '\n';
        return;
    }
    auto keys = record.keys();
    if (keys != header_) {
        header_ = keys;
        for (size_t i = 0; i < keys.size(); ++i)
            out_ << (i ? "," : "") << csv_escape(keys[i]);
        out_ << '\n';
    }
    bool first = true;
    for (const auto &item : record.fields().items()) {
        const auto &v = item.value();
        out_ << (first ? "" : ",") << csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
    }
    out_ << '\n';
}

} // namespace uldl::cli
