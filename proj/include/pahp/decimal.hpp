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

#include <optional>
#include <string>
#include <string_view>

namespace pahp {

/// Shortest decimal string that parses back to the same double.
std::string format_decimal(double value);

/// Fixed notation with `digits` decimals, for display tables.
std::string format_fixed(double value, int digits);

/// Strict parse of a plain decimal ("-12.5", "1e-3"); nullopt on any junk.
std::optional<double> parse_decimal(std::string_view text);

/// Lenient parse of a human-entered number with grouping separators:
///   - spaces, thin spaces (U+2009) and narrow no-break spaces (U+202F) are
///     grouping and dropped;
///   - when both ',' and '.' occur, the last one is the decimal mark;
///   - a lone kind of separator occurring more than once is grouping
///     ("1.250.000", "1,250,000");
///   - a single ',' followed by exactly three digits with a non-zero integer
///     part is grouping ("7,500"); otherwise it is a decimal comma ("0,125",
///     "7,5");
///   - a single '.' is a decimal point.
std::optional<double> parse_human_number(std::string_view text);

}  // namespace pahp
