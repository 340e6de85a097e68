// Copyright 2026 The mixlat Authors
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

#ifndef MIXLAT_ERRORS_HPP
#define MIXLAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixlat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid spec text; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operation not available for this carrier (e.g. negation on a semigroup).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// Window enumeration would exceed the configured cap.
class WindowRefused : public Error {
 public:
  WindowRefused(std::size_t count, std::size_t cap)
      : Error("window holds " + std::to_string(count) +
              " elements, cap is " + std::to_string(cap)),
        count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Required envelope could not be resolved inside the window.
class EnvelopeUnresolved : public Error {
 public:
  using Error::Error;
};

/// A consistency check that must never fail did fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixlat

#endif  // MIXLAT_ERRORS_HPP
