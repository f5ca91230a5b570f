// Copyright 2026 The pahp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal delimited-text reader: quoted fields with doubled quotes, CRLF or LF
// line ends, delimiter ',', ';' or tab picked from the header line.

#include <string>
#include <string_view>
#include <vector>

namespace pahp::csv {

struct Table {
  char delimiter = ',';
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Delimiter that occurs most often outside quotes in the first line; ','
/// when none occurs.
char detect_delimiter(std::string_view text);

/// Parses `text`; `delimiter` 0 means detect. Blank lines are skipped.
/// Throws ValidationError on an unterminated quote.
Table parse(std::string_view text, char delimiter = 0);

/// Quotes a field when it contains the delimiter, a quote or a line break.
std::string escape(std::string_view field, char delimiter = ',');

}  // namespace pahp::csv
