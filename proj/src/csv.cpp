// Copyright 2026 The nmlab Authors
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


#include "nmlab/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace nmlab::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(',', start);
        out.emplace_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) {
        return "0";  // folds -0
    }
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

Writer::Writer(const std::vector<std::string> &header) {
    for (const std::string &h : header) {
        cell(h);
    }
    end_row();
}

Writer &Writer::cell(double v) { return cell(format_double(v)); }

Writer &Writer::cell(std::string_view s) {
    if (row_open_) {
        out_ += ',';
    }
    out_ += s;
    row_open_ = true;
    return *this;
}

void Writer::end_row() {
    out_ += '\n';
    row_open_ = false;
}

size_t Table::column(std::string_view name) const {
    for (size_t k = 0; k < header.size(); ++k) {
        if (header[k] == name) {
            return k;
        }
    }
    throw std::invalid_argument("csv: missing column '" + std::string(name) + "'");
}

Table parse(std::string_view text) {
    // UTF-8 byte order mark
    if (text.substr(0, 3) == "\xEF\xBB\xBF") {
        text.remove_prefix(3);
    }
    Table table;
    bool have_header = false;
    size_t line_no = 0;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw std::invalid_argument("csv: line " + std::to_string(line_no) + " has " +
                                        std::to_string(fields.size()) + " fields, header has " +
                                        std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    if (!have_header) {
        throw std::invalid_argument("csv: empty input (header row required)");
    }
    return table;
}

double parse_double(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw std::invalid_argument("csv: not a number: '" + std::string(field) + "'");
    }
    return v;
}

}  // namespace nmlab::csv
