// Copyright 2026 The sowig Authors
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

namespace sowig {

/// Bad parameters or malformed input documents.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A lattice or quadrature rule too coarse for the structure it has to resolve,
/// or a window that does not contain the distribution.
class UndersampledError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A scale measurement whose preconditions are not met by the data
/// (too few zero crossings, a vanishing reference value, ...).
class AnalysisError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace sowig
