// Copyright 2026 The Authors.
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

#ifndef SYMSUB_ERRORS_HPP_
#define SYMSUB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace symsub {

// Every error raised by the library derives from Error, so callers that only
// care about "bad input vs. bug" can catch Error and InternalInvariantError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set argument names an element outside the ground set.
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

// An instance or constraint description is structurally broken.
class MalformedInstanceError : public Error {
 public:
  using Error::Error;
};

// A solver or generator parameter is out of its allowed range.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// An operation precondition on its arguments does not hold (e.g. u already in S).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class UndefinedWidthError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

// Raised when a guarantee that holds by construction is observed broken.
// Seeing one of these means the library has a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symsub

#endif  // SYMSUB_ERRORS_HPP_
