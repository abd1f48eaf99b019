// Copyright 2026 The BellLab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace belllab {

// Bad input value: non-finite angle, non-normalized coefficients, zero counts
// requested, and so on.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The state is separable, so no measurement settings can violate CHSH.
class NoViolationPossible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A model or input does not satisfy the assumption an operation relies on.
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Not enough recorded events to form an estimate.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace belllab
