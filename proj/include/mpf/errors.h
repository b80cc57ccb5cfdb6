// Copyright 2026 The MPF Authors.
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

#ifndef MPF_ERRORS_H_
#define MPF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mpf {

// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reducible or wrong-degree modulus, or a degree outside [1, 24].
class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

// Out-of-range point, size mismatch or other malformed argument.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A multivariate object handed to a univariate operation or vice versa.
class ModeMismatchError : public Error {
 public:
  using Error::Error;
};

// Shifted derivative requested in direction z = 0.
class ZeroDirectionError : public Error {
 public:
  using Error::Error;
};

// Component function requested for c = 0.
class ZeroComponentError : public Error {
 public:
  using Error::Error;
};

// Transform input whose length is not a power of two.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Spectrum that is not the image of any twisted point sequence.
class InvalidSpectrumError : public Error {
 public:
  using Error::Error;
};

class NotSubgroupError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the requested group law or parameter family.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search job outside the permitted bounds.
class SearchBoundsError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Two planarity routes disagreed on one function. Never expected; carries
// the counterexample as its message.
class DefinitionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpf

#endif  // MPF_ERRORS_H_
