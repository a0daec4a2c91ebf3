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


#ifndef NMLAB_CSV_HPP
#define NMLAB_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace nmlab::csv {

/// Shortest round-trip decimal form of `v` ('.' separator, locale independent).
std::string format_double(double v);

/// Builds comma-separated text with LF line endings.
class Writer {
   public:
    explicit Writer(const std::vector<std::string> &header);

    Writer &cell(double v);
    Writer &cell(std::string_view s);
    void end_row();

    const std::string &str() const { return out_; }

   private:
    std::string out_;
    bool row_open_ = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header; throws std::invalid_argument if absent.
    size_t column(std::string_view name) const;
};

/// Parses comma-separated text; CRLF is accepted, blank lines are skipped.
/// Throws std::invalid_argument on an empty input or ragged rows.
Table parse(std::string_view text);

/// Strict full-field parse; throws std::invalid_argument.
double parse_double(std::string_view field);

}  // namespace nmlab::csv

#endif
