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

// JSON reports behind the C API. Every report has the keys schema_version,
// tool_version, command, params, results and pass; keys are sorted, so the
// text is deterministic unless timings are requested.

#ifndef CENTRALIZER_SRC_REPORT_HPP_
#define CENTRALIZER_SRC_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "centralizer/scalar.hpp"

namespace cz::report {

inline constexpr int kSchemaVersion = 1;

struct Options {
  bool timings = false;
  uint64_t seed = 1;
};

struct Outcome {
  std::string json;
  std::string summary;  // human-readable, one item per line
  bool pass = false;
};

const char* tool_version();

Outcome brauer_mul(const std::string& a, const std::string& b, int m, const FieldSpec& f,
                   const Options& o);
Outcome brauer_ideal_dim(int n, int f, int m, const FieldSpec& field, const Options& o);
Outcome spsw_schur(int m, int n, const FieldSpec& field, const Options& o);
Outcome spsw_harmonic(int m, int n, int f, const FieldSpec& field, const Options& o);
Outcome spsw_quotient_duality(int m, int n, int f, const FieldSpec& field, const Options& o);
// p = 0 skips the separation search.
Outcome spsw_weights(int m, int n, int f, long p, const Options& o);
Outcome dcp(const std::string& algebra_json, const std::optional<std::string>& module_json,
            const Options& o);
// Empty name runs every corpus entry.
Outcome corpus_check(const std::string& name, const FieldSpec& field, const Options& o);

}  // namespace cz::report

#endif  // CENTRALIZER_SRC_REPORT_HPP_
