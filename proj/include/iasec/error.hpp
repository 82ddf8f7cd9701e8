// Copyright (C) 2026 The iasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace iasec {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A NetworkConfig (or any other input record) violates one of its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Matrix or vector dimensions do not agree with the network layout.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A null space that must exist under the antenna assumption came out too small.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Root bracketing or another numerical routine failed.
class NumericError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace iasec
