// Copyright 2026 The fpos Authors
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

#ifndef FPOS_ERROR_HPP_
#define FPOS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fpos {

// Root of the library's exception hierarchy. The command-line tool maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid arguments, e.g. a rank outside [1, n].
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured budget (enumeration size, grid size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A truncated series cannot be certified to the requested tolerance with the
// tail information available.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// A quantity is undefined because the distribution is a point mass.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

// The prior assigns no mass to any population size compatible with the data.
class InconsistentPriorError : public Error {
 public:
  using Error::Error;
};

}  // namespace fpos

#endif  // FPOS_ERROR_HPP_
