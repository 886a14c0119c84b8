// Copyright 2026 The pcakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCAKIT_ERRORS_HPP_
#define PCAKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pcakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or vector dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A matrix is singular or too close to singular to continue.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A column has zero spread where positive spread is required.
class DegenerateColumnError : public Error {
 public:
  using Error::Error;
};

/// Fewer observations than the statistic needs.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Sample size too small relative to the number of variables.
class InsufficientSampleError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A measure is 0/0 on this input.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A referenced column does not exist in the data.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV content.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcakit

#endif  // PCAKIT_ERRORS_HPP_
