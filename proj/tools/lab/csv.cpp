// Copyright 2026 The dgrading Authors
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

#include "lab/csv.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lab {

namespace {

std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::invalid_argument("CsvTable: row width differs from header");
    rows_.push_back(std::move(row));
}

void CsvTable::sort_rows(std::size_t key_columns, int numeric_column) {
    std::stable_sort(rows_.begin(), rows_.end(), [&](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < key_columns; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        if (numeric_column >= 0) {
            const auto c = static_cast<std::size_t>(numeric_column);
            return std::stod(a[c]) < std::stod(b[c]);
        }
        return false;
    });
}

std::string CsvTable::str() const {
    std::ostringstream os;
    const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << quote(fields[i]);
        os << "\n";
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
}

CsvTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\n') {
            fields.push_back(std::move(cur));
            cur.clear();
            records.push_back(std::move(fields));
            fields.clear();
            any = false;
        } else if (c != '\r') {
            cur += c;
            any = true;
        }
    }
    if (any || !fields.empty()) {
        fields.push_back(std::move(cur));
        records.push_back(std::move(fields));
    }
    if (records.empty()) throw std::invalid_argument("parse_csv: empty input");
    CsvTable table(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) table.add_row(std::move(records[i]));
    return table;
}

}  // namespace lab
