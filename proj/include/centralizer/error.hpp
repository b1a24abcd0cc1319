// Copyright 2026 The Centralizer Lab Authors.
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

#ifndef CENTRALIZER_ERROR_HPP_
#define CENTRALIZER_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cz {

enum class Errc {
  FieldMismatch,
  DivisionByZero,
  ShapeMismatch,
  NoSolution,
  AmbientMismatch,
  AlgebraMismatch,
  NotEmbeddable,
  BadIdempotent,
  StarNotFixing,
  NonTermination,
  HypothesisFailed,
  SizeMismatch,
  IndexOutOfRange,
  CapExceeded,
  CharTooSmall,
  NotSplit,
  ParseError,
  InvalidInput,
  AssertionFailed,
};

const char* errc_name(Errc c);

// Errors that reject an input before any computation (CLI exit code 2).
bool is_precondition(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace cz

#endif  // CENTRALIZER_ERROR_HPP_
