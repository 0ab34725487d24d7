// Copyright 2026 The RMOPP Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace rmopp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent input data (records, annotations, probabilities).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unreadable files, malformed file structure, unwritable outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: empty grids, out-of-range thresholds.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// No sweep cell satisfies the selection constraint. Carries the best F1
// actually achieved so callers can report how far off the constraint was.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double best_f1)
      : Error(what), best_f1_(best_f1) {}
  double best_f1() const { return best_f1_; }

 private:
  double best_f1_;
};

}  // namespace rmopp
