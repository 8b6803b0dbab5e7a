// Copyright 2026 The eraser-emergence Authors
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

namespace eraser {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument is non-finite or outside its admissible range.
class InvalidParameter : public Error {
   public:
    using Error::Error;
};

/// A basis label is used in a space it does not belong to.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A value object failed its construction-time invariants.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// The requested measurement outcome has (numerically) zero probability.
class ImpossibleOutcome : public Error {
   public:
    using Error::Error;
};

/// KL divergence with p_i > 0 where q_i = 0.
class InfiniteDivergence : public Error {
   public:
    using Error::Error;
};

/// A named state is not present on the queried axis.
class LookupError : public Error {
   public:
    using Error::Error;
};

/// A model with fewer than two target states has no entropy scale.
class DegenerateModel : public Error {
   public:
    using Error::Error;
};

/// A macro source state carries zero intervention weight.
class UndefinedRow : public Error {
   public:
    using Error::Error;
};

/// Output could not be written.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace eraser
