// Copyright 2026 The netjam Authors
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

#ifndef NETJAM_ERROR_HPP_
#define NETJAM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace netjam {

// Base of every error thrown by the library. The C API maps each subclass to
// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters (growth config, rate plan, experiment config).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A graph violates a structural requirement (disconnected, self-loop, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Parameter outside a formula's domain (gamma_of_p at p = 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures while writing experiment output.
class IoError : public Error {
 public:
  using Error::Error;
};

// Config text could not be parsed. Carries the offending line and key.
class ParseError : public ConfigError {
 public:
  ParseError(int line, std::string key, const std::string& what)
      : ConfigError(format(line, key, what)), line_(line), key_(std::move(key)) {}

  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  static std::string format(int line, const std::string& key,
                            const std::string& what) {
    std::string out = "line " + std::to_string(line);
    if (!key.empty()) out += ", key '" + key + "'";
    return out + ": " + what;
  }

  int line_;
  std::string key_;
};

// The beta search bracket does not straddle the congestion transition.
class BracketError : public Error {
 public:
  BracketError(const std::string& what, double slope_lo, double slope_hi)
      : Error(what), slope_lo_(slope_lo), slope_hi_(slope_hi) {}

  double slope_lo() const { return slope_lo_; }
  double slope_hi() const { return slope_hi_; }

 private:
  double slope_lo_;
  double slope_hi_;
};

}  // namespace netjam

#endif  // NETJAM_ERROR_HPP_
