// Copyright 2026 The sedkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEDKIT_ERROR_HPP_
#define SEDKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sedkit {

// Base class for all sedkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration values (bad ranges, zero sizes, non-divisible dims).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Tensor or matrix shape mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Unsupported or malformed data format (wav, feature file, checkpoint).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent dataset contents.
class DataError : public Error {
 public:
  using Error::Error;
};

// Training diverged or hit a numerical fault.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// API misuse (backward on non-scalar, empty ensemble, double backward).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage was invoked before the stage that produces its inputs.
class StageDependencyError : public Error {
 public:
  StageDependencyError(const std::string& stage, const std::string& missing)
      : Error("stage '" + stage + "' requires missing artifact: " + missing),
        stage_(stage),
        missing_(missing) {}
  const std::string& stage() const { return stage_; }
  const std::string& missing() const { return missing_; }

 private:
  std::string stage_;
  std::string missing_;
};

}  // namespace sedkit

#endif  // SEDKIT_ERROR_HPP_
