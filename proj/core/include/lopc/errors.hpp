// Copyright 2026 The lopc Authors
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

#include <stdexcept>
#include <string>

namespace lopc {

// Base of every exception thrown by the library. The CLI maps the concrete
// subclasses onto its exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (bad shape, index out of range,
// non-Hermitian generator, malformed gate...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An occupation vector is not a member of the basis it was looked up in.
class NotMember : public Error {
 public:
  using Error::Error;
};

// A Fock state that does not encode any logical state (photon number != 1).
class NotEncoding : public Error {
 public:
  using Error::Error;
};

// A configured size cap (dimension, photon number, qubit count) or the exact
// integer range would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A numerical check failed at the requested tolerance: a matrix is not
// unitary enough, or a reconstruction does not match.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or an input document that does not follow the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lopc
