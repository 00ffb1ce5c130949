// Copyright 2026 The dqc1-lab Authors
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

namespace dqc1lab {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A caller passed an argument outside the operation's domain. */
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/** Matrix shapes do not fit together, or exceed the configured maximum. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/** A matrix failed the density-matrix admission checks. */
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/** The input is not diagonal in the three-qubit GHZ basis. */
class NotGhzDiagonalError : public Error {
 public:
  NotGhzDiagonalError(const std::string &what, double residual)
      : Error(what), residual_(residual) {}

  /** Max-norm distance between the input and its GHZ-diagonal projection. */
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace dqc1lab
