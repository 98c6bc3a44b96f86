// Copyright 2026 The Bratteli Authors
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

namespace bratteli {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A level, index or size parameter lies outside the supported range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Input data (graph document, measure, path, cost matrix) violates an
// invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// No path joins the requested vertices.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

// The operation needs exact arithmetic but was handed floating point data.
class ModeError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to converge.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bratteli
