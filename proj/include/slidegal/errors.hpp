// Copyright 2026 slidegal contributors
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

#ifndef SLIDEGAL__ERRORS_HPP_
#define SLIDEGAL__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace slidegal
{

/// Bad or inconsistent run configuration (unknown keys, invariant violations).
class ConfigError : public std::runtime_error
{
public:
  explicit ConfigError(const std::string & what) : std::runtime_error(what) {}
};

/// The sliding covector does not act on the control direction (gamma^T g ~ 0),
/// so no sliding mode exists on the surface.
class TransversalityError : public std::runtime_error
{
public:
  explicit TransversalityError(const std::string & what) : std::runtime_error(what) {}
};

/// Requested Galerkin dimension cannot represent the sliding covector exactly.
class NotRepresentableError : public std::runtime_error
{
public:
  explicit NotRepresentableError(const std::string & what) : std::runtime_error(what) {}
};

/// A verification oracle was asked about a system outside its validity range.
class OracleError : public std::runtime_error
{
public:
  explicit OracleError(const std::string & what) : std::runtime_error(what) {}
};

/// Linear solve hit a (numerically) singular matrix.
class SingularMatrixError : public std::runtime_error
{
public:
  explicit SingularMatrixError(const std::string & what) : std::runtime_error(what) {}
};

}  // namespace slidegal

#endif  // SLIDEGAL__ERRORS_HPP_
