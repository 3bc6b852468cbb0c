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

#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input object violates a structural requirement (bad index, loop where
// none is allowed, wrong counts, failed reduction precondition on instances).
struct InstanceError : Error {
  using Error::Error;
};

// Malformed text input; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

// A brute-force cap was exceeded. Exact enumeration refuses rather than
// trimming silently.
struct SizeError : Error {
  using Error::Error;
};

// A search budget ran out before the search space was exhausted. Distinct
// from a proven "none".
struct ResourceError : Error {
  using Error::Error;
};

// A certificate or assignment handed to a mapper fails its precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// A property that is guaranteed by a proven claim failed to hold; indicates
// a bug in this library, not in the caller's input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace rainbow
