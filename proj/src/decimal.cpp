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

#include "pahp/decimal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace pahp {

std::string format_decimal(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_fixed(double value, int digits) {
  if (std::abs(value) < 0.5 * std::pow(10.0, -digits)) value = 0.0;
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, digits);
  return std::string(buf.data(), ptr);
}

std::optional<double> parse_decimal(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<double> parse_human_number(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) continue;
    // U+2009 thin space = E2 80 89, U+202F narrow no-break space = E2 80 AF,
    // U+00A0 no-break space = C2 A0.
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x89 ||
         static_cast<unsigned char>(text[i + 2]) == 0xAF)) {
      i += 2;
      continue;
    }
    if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      i += 1;
      continue;
    }
    s.push_back(static_cast<char>(c));
  }
  const auto commas = std::count(s.begin(), s.end(), ',');
  const auto dots = std::count(s.begin(), s.end(), '.');
  auto erase_all = [&](char ch) { s.erase(std::remove(s.begin(), s.end(), ch), s.end()); };

  if (commas > 0 && dots > 0) {
    const char decimal = s.find_last_of(',') > s.find_last_of('.') ? ',' : '.';
    const char group = decimal == ',' ? '.' : ',';
    if (std::count(s.begin(), s.end(), decimal) != 1) return std::nullopt;
    erase_all(group);
    std::replace(s.begin(), s.end(), ',', '.');
  } else if (commas > 1) {
    erase_all(',');
  } else if (dots > 1) {
    erase_all('.');
  } else if (commas == 1) {
    const auto pos = s.find(',');
    const auto digits_after = s.size() - pos - 1;
    std::string_view int_part(s.data(), pos);
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    const bool all_digits_after =
        std::all_of(s.begin() + static_cast<long>(pos) + 1, s.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    const bool grouping = digits_after == 3 && all_digits_after && !int_part.empty() &&
                          int_part.size() <= 3 && int_part.find_first_not_of('0') != std::string_view::npos;
    if (grouping) {
      erase_all(',');
    } else {
      s[pos] = '.';
    }
  }
  return parse_decimal(s);
}

}  // namespace pahp
