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

#ifndef SARR_ERRORS_H_
#define SARR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sarr {

// Malformed or out-of-contract input (bad shapes, points outside the box,
// zero subspaces, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar or document that could not be parsed at all.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sampling of generic bases gave up. Over the rationals this only happens
// when something upstream is broken.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force oracle was asked for an instance it refuses to enumerate.
class OracleScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold for every valid input failed. The message
// carries the full witness; these are never expected in a correct build.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sarr

#endif  // SARR_ERRORS_H_
