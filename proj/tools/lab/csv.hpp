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

#ifndef GRADING_LAB_CSV_HPP
#define GRADING_LAB_CSV_HPP

#include <string>
#include <vector>

namespace lab {

/// Header plus rows. Fields containing a comma, quote or newline are quoted.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    /// Orders rows lexicographically by the first `key_columns` fields, then by
    /// the numeric value of column `numeric_column` (-1 for none).
    void sort_rows(std::size_t key_columns, int numeric_column = -1);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Minimal reader for tables written by CsvTable.
CsvTable parse_csv(const std::string& text);

}  // namespace lab

#endif  // GRADING_LAB_CSV_HPP
