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

#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "pahp/csv.hpp"
#include "pahp/decimal.hpp"
#include "pahp/error.hpp"

using namespace pahp;

TEST_CASE("format_decimal round-trips") {
  CHECK(format_decimal(0.5) == "0.5");
  CHECK(format_decimal(7500) == "7500");
  CHECK(format_decimal(-0.125) == "-0.125");
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = i % 2 ? d(rng) : d(rng) * 1e-9;
    const auto s = format_decimal(x);
    const auto back = parse_decimal(s);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  CHECK(format_fixed(0.38944, 4) == "0.3894");
  CHECK(format_fixed(1.0 / 65.0, 6) == "0.015385");
}

TEST_CASE("parse_decimal is strict") {
  CHECK(parse_decimal("1e-3") == 1e-3);
  CHECK(parse_decimal("-12.5") == -12.5);
  CHECK_FALSE(parse_decimal("").has_value());
  CHECK_FALSE(parse_decimal("1.5x").has_value());
  CHECK_FALSE(parse_decimal("7,500").has_value());
  CHECK_FALSE(parse_decimal("nan").has_value());
}

TEST_CASE("parse_human_number accepts grouping separators and decimal commas") {
  CHECK(parse_human_number("7,500") == 7500.0);
  CHECK(parse_human_number("12,500") == 12500.0);
  CHECK(parse_human_number("7 500") == 7500.0);
  CHECK(parse_human_number("7\u2009" "500") == 7500.0);  // thin space
  CHECK(parse_human_number("7\u202F" "500") == 7500.0);  // narrow no-break space
  CHECK(parse_human_number("1.250.000") == 1250000.0);
  CHECK(parse_human_number("1,250,000") == 1250000.0);
  CHECK(parse_human_number("1.250,5") == 1250.5);
  CHECK(parse_human_number("1,250.5") == 1250.5);
  CHECK(parse_human_number("0,125") == 0.125);
  CHECK(parse_human_number("7,5") == 7.5);
  CHECK(parse_human_number("0.0899") == 0.0899);
  CHECK(parse_human_number(" 24 ") == 24.0);
  CHECK_FALSE(parse_human_number("abc").has_value());
  CHECK_FALSE(parse_human_number("").has_value());
  CHECK_FALSE(parse_human_number("1,2,3.4.5").has_value());
}

TEST_CASE("csv parsing") {
  SUBCASE("delimiter detection") {
    CHECK(csv::detect_delimiter("a,b,c\n1,2,3") == ',');
    CHECK(csv::detect_delimiter("a;b;c\n1;2;3") == ';');
    CHECK(csv::detect_delimiter("a\tb\tc") == '\t');
    CHECK(csv::detect_delimiter("\"a,b\";c;d") == ';');
    CHECK(csv::detect_delimiter("single") == ',');
  }
  SUBCASE("quotes, CRLF, BOM and blank lines") {
    const auto t = csv::parse("\xEF\xBB\xBFid,C5\r\nP1,\"7,500\"\r\n\r\nP2,\"say \"\"hi\"\"\"\n");
    CHECK(t.header == std::vector<std::string>{"id", "C5"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][1] == "7,500");
    CHECK(t.rows[1][1] == "say \"hi\"");
  }
  SUBCASE("quoted line break") {
    const auto t = csv::parse("a,b\n\"x\ny\",2\n");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][0] == "x\ny");
  }
  SUBCASE("unterminated quote") { CHECK_THROWS_AS(csv::parse("a,b\n\"x,2\n"), ValidationError); }
  SUBCASE("escape round-trips") {
    for (std::string f : {"plain", "7,500", "say \"hi\"", "two\nlines"}) {
      const auto t = csv::parse("h\n" + csv::escape(f) + "\n", ',');
      REQUIRE(t.rows.size() == 1);
      CHECK(t.rows[0][0] == f);
    }
    CHECK(csv::escape("plain") == "plain");
  }
}
