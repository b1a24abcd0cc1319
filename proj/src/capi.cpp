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

#include "centralizer/centralizer.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "report.hpp"

struct cl_session {
  cz::FieldSpec field;
  cz::report::Options options;
  std::string last_error;
};

namespace {

thread_local std::string g_session_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cz::Error(cz::Errc::InvalidInput, std::string("cannot read ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cl_status run(cl_session* s, char** report_json, char** summary,
              const std::function<cz::report::Outcome()>& body) {
  if (report_json) *report_json = nullptr;
  if (summary) *summary = nullptr;
  if (!s) return CL_ERROR;
  s->last_error.clear();
  try {
    cz::report::Outcome out = body();
    if (report_json) *report_json = dup(out.json);
    if (summary) *summary = dup(out.summary);
    return out.pass ? CL_PASS : CL_FAIL;
  } catch (const cz::Error& e) {
    s->last_error = e.what();
    return cz::is_precondition(e.code()) ? CL_PRECONDITION : CL_FAIL;
  } catch (const std::exception& e) {
    s->last_error = std::string("internal error: ") + e.what();
    return CL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* cl_version(void) { return cz::report::tool_version(); }

cl_session* cl_session_new(const char* field) {
  try {
    auto* s = new cl_session;
    s->field = cz::FieldSpec::parse(field ? field : "Q");
    return s;
  } catch (const std::exception& e) {
    g_session_error = e.what();
    return nullptr;
  }
}

void cl_session_free(cl_session* s) { delete s; }

const char* cl_last_error(const cl_session* s) {
  return s ? s->last_error.c_str() : g_session_error.c_str();
}

void cl_session_set_timings(cl_session* s, int enabled) {
  if (s) s->options.timings = enabled != 0;
}

void cl_session_set_seed(cl_session* s, uint64_t seed) {
  if (s) s->options.seed = seed;
}

void cl_string_free(char* str) { std::free(str); }

cl_status cl_brauer_mul(cl_session* s, const char* a, const char* b, int m, char** report_json,
                        char** summary) {
  return run(s, report_json, summary, [&] {
    if (!a || !b) throw cz::Error(cz::Errc::InvalidInput, "missing diagram");
    return cz::report::brauer_mul(a, b, m, s->field, s->options);
  });
}

cl_status cl_brauer_ideal_dim(cl_session* s, int n, int f, int m, char** report_json,
                              char** summary) {
  return run(s, report_json, summary,
             [&] { return cz::report::brauer_ideal_dim(n, f, m, s->field, s->options); });
}

cl_status cl_spsw_schur(cl_session* s, int m, int n, char** report_json, char** summary) {
  return run(s, report_json, summary, [&] { return cz::report::spsw_schur(m, n, s->field, s->options); });
}

cl_status cl_spsw_harmonic(cl_session* s, int m, int n, int f, char** report_json, char** summary) {
  return run(s, report_json, summary,
             [&] { return cz::report::spsw_harmonic(m, n, f, s->field, s->options); });
}

cl_status cl_spsw_quotient_duality(cl_session* s, int m, int n, int f, char** report_json,
                                   char** summary) {
  return run(s, report_json, summary,
             [&] { return cz::report::spsw_quotient_duality(m, n, f, s->field, s->options); });
}

cl_status cl_spsw_weights(cl_session* s, int m, int n, int f, long p, char** report_json,
                          char** summary) {
  return run(s, report_json, summary, [&] { return cz::report::spsw_weights(m, n, f, p, s->options); });
}

cl_status cl_dcp_file(cl_session* s, const char* algebra_path, const char* module_path,
                      char** report_json, char** summary) {
  return run(s, report_json, summary, [&] {
    if (!algebra_path) throw cz::Error(cz::Errc::InvalidInput, "missing algebra file");
    std::optional<std::string> mod;
    if (module_path) mod = read_file(module_path);
    return cz::report::dcp(read_file(algebra_path), mod, s->options);
  });
}

cl_status cl_corpus_check(cl_session* s, const char* name, char** report_json, char** summary) {
  return run(s, report_json, summary,
             [&] { return cz::report::corpus_check(name ? name : "", s->field, s->options); });
}

}  // extern "C"
