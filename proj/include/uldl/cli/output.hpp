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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uldl/cell_config.hpp"
#include "uldl/rational.hpp"

namespace uldl::cli {

enum class Format { JsonLines, Csv };

/// Flat, ordered key/value record. Every record starts with a "record" key
/// naming its kind.
class Record {
  public:
    explicit Record(const std::string &kind);

    Record &set(const std::string &key, const std::string &value);
    Record &set(const std::string &key, const char *value);
    Record &set(const std::string &key, std::int64_t value);
    Record &set(const std::string &key, int value) { return set(key, static_cast<std::int64_t>(value)); }
    Record &set(const std::string &key, std::uint64_t value);
    Record &set(const std::string &key, double value);
    Record &set(const std::string &key, bool value);
    /// `key` = "p/q" and `key_decimal` = value rounded half-up to 6 places.
    Record &rational(const std::string &key, const Rational &value);
    /// m1, m2, n1, n2
    Record &config(const CellConfig &cfg);

    const nlohmann::ordered_json &fields() const { return fields_; }
    std::vector<std::string> keys() const;

  private:
    nlohmann::ordered_json fields_;
};

/// JSON-lines, or CSV with a header row that is repeated whenever the key set
/// changes (summary records carry different columns).
class RecordWriter {
  public:
    RecordWriter(std::ostream &out, Format format) : out_(out), format_(format) {}

    void write(const Record &record);
    Format format() const { return format_; }

  private:
    std::ostream &out_;
    Format format_;
    std::vector<std::string> header_;
};

std::string csv_escape(const std::string &field);

} // namespace uldl::cli
