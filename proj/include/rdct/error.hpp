// Copyright 2026 The rdct Authors.
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

#ifndef RDCT_ERROR_HPP_
#define RDCT_ERROR_HPP_

#include <stdexcept>

namespace rdct {

// Data errors: malformed or damaged inputs (files, streams).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

class CorruptionError : public Error {
 public:
  using Error::Error;
};

// Caller errors: out-of-range parameters, mismatched shapes.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rdct

#endif  // RDCT_ERROR_HPP_
