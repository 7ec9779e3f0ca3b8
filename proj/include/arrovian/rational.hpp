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

#ifndef ARROVIAN_RATIONAL_HPP_
#define ARROVIAN_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace arrovian {

/// Exact agreement tolerances and block-balance ratios.
using Rational = boost::rational<std::int64_t>;

/// Accepts "3", "-1/2", "5/2" and finite decimals such as "2.75".
Rational parse_rational(std::string_view text);
/// Integers print bare, other values as "num/den".
std::string format_rational(const Rational& value);

}  // namespace arrovian

#endif  // ARROVIAN_RATIONAL_HPP_
