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

#ifndef ARROVIAN_ERRORS_HPP_
#define ARROVIAN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrovian {

/// Root of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed a value outside an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An operation defined on strict preferences received a weak one.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration or sweep would exceed its configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed preference, profile, block or schedule text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& detail() const { return detail_; }
  std::size_t position() const { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// An object fails the premises a verifier requires of it.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A protocol ran past its declared round bound without deciding.
class LivenessError : public Error {
 public:
  using Error::Error;
};

/// A report disagrees with an independent recomputation of its contents.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Two runs of the same execution produced different traces.
class DeterminismError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrovian

#endif  // ARROVIAN_ERRORS_HPP_
