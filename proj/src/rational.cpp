// Copyright 2026 The Arrovian Agreement Authors
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

#include "arrovian/rational.hpp"

#include <cctype>
#include <charconv>

#include "arrovian/errors.hpp"

namespace arrovian {
namespace {

std::int64_t parse_digits(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected digit", offset + i);
    }
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc()) throw ParseError("number out of range", offset);
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    offset = 1;
  }
  std::string_view body = text.substr(offset);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(body.substr(0, slash), offset);
    std::int64_t den = parse_digits(body.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view frac = body.substr(dot + 1);
    if (frac.size() > 15) throw ParseError("too many decimal places", offset + dot);
    std::int64_t whole = dot == 0 ? 0 : parse_digits(body.substr(0, dot), offset);
    std::int64_t part = parse_digits(frac, offset + dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(part, scale);
  } else {
    value = Rational(parse_digits(body, offset));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

}  // namespace arrovian
