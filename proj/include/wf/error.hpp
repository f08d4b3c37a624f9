// Copyright 2026 The wreathgen Authors
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

#ifndef WF_ERROR_HPP
#define WF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed permutation text. `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A flattened degree exceeds the configured cap (or does not fit a machine word).
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// A standing hypothesis (transitive, perfect, non-regular, ...) failed.
class HypothesisError : public Error {
 public:
  HypothesisError(std::size_t level, const std::string &hypothesis,
                  const std::string &detail)
      : Error("level " + std::to_string(level) + ": hypothesis '" + hypothesis +
              "' failed: " + detail),
        level_(level),
        hypothesis_(hypothesis) {}
  std::size_t level() const noexcept { return level_; }
  const std::string &hypothesis() const noexcept { return hypothesis_; }

 private:
  std::size_t level_;
  std::string hypothesis_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A search found nothing admissible.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace wf

#endif  // WF_ERROR_HPP
