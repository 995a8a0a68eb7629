// Copyright 2026 The catprob Authors
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

#ifndef CATPROB_ERROR_HPP
#define CATPROB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace catprob {

// Every failure the library reports carries a stable kind name. The CLI
// uses the name in its reports and to pick an exit code.
enum class ErrorKind {
  LabelNotInSet,
  SetMismatch,
  InvalidDistribution,
  InvalidPredicate,
  UndefinedSum,
  ScalarOutOfRange,
  NotATensor,
  NotATest,
  ShapeMismatch,
  InvalidEffect,
  NotPositive,
  NotInvertible,
  MarginalNotInvertible,
  DegenerateEffect,
  NotAProjection,
  NotAGraph,
  ParseError,
  TriangleViolated,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::LabelNotInSet: return "LabelNotInSet";
  case ErrorKind::SetMismatch: return "SetMismatch";
  case ErrorKind::InvalidDistribution: return "InvalidDistribution";
  case ErrorKind::InvalidPredicate: return "InvalidPredicate";
  case ErrorKind::UndefinedSum: return "UndefinedSum";
  case ErrorKind::ScalarOutOfRange: return "ScalarOutOfRange";
  case ErrorKind::NotATensor: return "NotATensor";
  case ErrorKind::NotATest: return "NotATest";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::InvalidEffect: return "InvalidEffect";
  case ErrorKind::NotPositive: return "NotPositive";
  case ErrorKind::NotInvertible: return "NotInvertible";
  case ErrorKind::MarginalNotInvertible: return "MarginalNotInvertible";
  case ErrorKind::DegenerateEffect: return "DegenerateEffect";
  case ErrorKind::NotAProjection: return "NotAProjection";
  case ErrorKind::NotAGraph: return "NotAGraph";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::TriangleViolated: return "TriangleViolated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace catprob

#endif // CATPROB_ERROR_HPP
