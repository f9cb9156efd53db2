/* Copyright 2026 The hod Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well-formed but violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON; `byte()` is the offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte)
      : Error(what), byte_(byte) {}
  std::size_t byte() const noexcept { return byte_; }

 private:
  std::size_t byte_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hod
