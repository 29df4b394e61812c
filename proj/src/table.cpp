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

#include "corr_radiance/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace corr_radiance {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_field(const Cell &cell) {
    return std::visit(overloaded{[](std::monostate) { return std::string(); },
                                 [](double v) { return format_number(v); },
                                 [](const std::string &s) { return s; }},
                      cell);
}

}  // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("refusing to format a non-finite value");
    }
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_csv(const Table &table, std::ostream &out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("table row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table &table, std::ostream &out) {
    nlohmann::ordered_json doc;
    doc["config"] = table.config;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(overloaded{[&](std::monostate) { record[table.columns[i]] = nullptr; },
                                  // Round through the CSV text so both formats agree.
                                  [&](double v) {
                                      record[table.columns[i]] = std::stod(format_number(v));
                                  },
                                  [&](const std::string &s) { record[table.columns[i]] = s; }},
                       row[i]);
        }
        rows.push_back(std::move(record));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_table(const Table &table, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::Csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

}  // namespace corr_radiance
