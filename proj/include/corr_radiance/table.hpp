// Copyright 2026 The corr-radiance Authors
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

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace corr_radiance {

/// Empty cells print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
};

enum class OutputFormat { Csv, Json };

/// 12 significant digits, '.' decimal separator.
std::string format_number(double value);

void write_csv(const Table &table, std::ostream &out);
void write_json(const Table &table, std::ostream &out);
void write_table(const Table &table, OutputFormat format, std::ostream &out);

}  // namespace corr_radiance
