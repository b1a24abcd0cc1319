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

#include <doctest.h>

#include <string>

#include "centralizer/centralizer.h"

namespace {

struct Result {
  cl_status status;
  std::string json, summary;
};

template <typename F>
Result call(F f) {
  char* json = nullptr;
  char* summary = nullptr;
  Result r{f(&json, &summary), "", ""};
  if (json) r.json = json;
  if (summary) r.summary = summary;
  cl_string_free(json);
  cl_string_free(summary);
  return r;
}

struct Session {
  cl_session* s;
  explicit Session(const char* field = "Q") : s(cl_session_new(field)) {}
  ~Session() { cl_session_free(s); }
};

}  // namespace

TEST_CASE("session lifecycle") {
  CHECK(std::string(cl_version()).size() > 0);
  Session ok;
  REQUIRE(ok.s != nullptr);
  CHECK(cl_session_new("F4") == nullptr);
  CHECK(std::string(cl_last_error(nullptr)).size() > 0);
}

TEST_CASE("brauer commands") {
  Session s;
  auto r = call([&](char** j, char** m) { return cl_brauer_mul(s.s, "[(1,2),(1',2')]", "[(1,2),(1',2')]", 1, j, m); });
  CHECK(r.status == CL_PASS);
  CHECK(r.summary.find("-2 * [(1,2),(1',2')]") != std::string::npos);
  CHECK(r.json.find("\"schema_version\": 1") != std::string::npos);
  auto d = call([&](char** j, char** m) { return cl_brauer_ideal_dim(s.s, 2, 1, 1, j, m); });
  CHECK(d.status == CL_PASS);
  CHECK(d.summary.rfind("1\n", 0) == 0);
  auto bad = call([&](char** j, char** m) { return cl_brauer_mul(s.s, "[(1,2)", "[(1,2),(1',2')]", 1, j, m); });
  CHECK(bad.status == CL_PRECONDITION);
  CHECK(bad.json.empty());
  CHECK(std::string(cl_last_error(s.s)).size() > 0);
}

TEST_CASE("spsw commands and exit statuses") {
  Session s;
  auto t = call([&](char** j, char** m) { return cl_spsw_quotient_duality(s.s, 1, 2, 1, j, m); });
  CHECK(t.status == CL_PASS);
  CHECK(t.json.find("\"dim_commutant\"") != std::string::npos);
  CHECK(t.json.find("\"timings\"") == std::string::npos);
  Session f3("F3");
  auto c = call([&](char** j, char** m) { return cl_spsw_quotient_duality(f3.s, 1, 3, 1, j, m); });
  CHECK(c.status == CL_PRECONDITION);
  auto h = call([&](char** j, char** m) { return cl_spsw_harmonic(s.s, 1, 2, 2, j, m); });
  CHECK(h.status == CL_PRECONDITION);
  auto w = call([&](char** j, char** m) { return cl_spsw_weights(s.s, 2, 4, 1, 3, j, m); });
  CHECK(w.status == CL_PASS);
  CHECK(w.summary.find("violation: (2,0) < (3,1)") != std::string::npos);
  auto sch = call([&](char** j, char** m) { return cl_spsw_schur(s.s, 1, 2, j, m); });
  CHECK(sch.status == CL_PASS);
  CHECK(sch.json.find("\"dim_schur_algebra\": 10") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  Session a, b;
  auto x = call([&](char** j, char** m) { return cl_spsw_schur(a.s, 1, 3, j, m); });
  auto y = call([&](char** j, char** m) { return cl_spsw_schur(b.s, 1, 3, j, m); });
  CHECK(x.json == y.json);
  CHECK(x.summary == y.summary);
  cl_session_set_seed(b.s, 99);
  auto z = call([&](char** j, char** m) { return cl_spsw_schur(b.s, 1, 3, j, m); });
  CHECK(z.status == CL_PASS);
  cl_session_set_timings(b.s, 1);
  auto t = call([&](char** j, char** m) { return cl_spsw_schur(b.s, 1, 2, j, m); });
  CHECK(t.json.find("\"timings\"") != std::string::npos);
}

TEST_CASE("dcp on files") {
  Session s;
  const std::string alg = std::string(DATA_DIR) + "/regular.json";
  const std::string mod = std::string(DATA_DIR) + "/simple_module.json";
  auto r = call([&](char** j, char** m) { return cl_dcp_file(s.s, alg.c_str(), nullptr, j, m); });
  CHECK(r.status == CL_PASS);
  CHECK(r.summary.rfind("bijective", 0) == 0);
  auto n = call([&](char** j, char** m) { return cl_dcp_file(s.s, alg.c_str(), mod.c_str(), j, m); });
  CHECK(n.status == CL_FAIL);
  CHECK(n.summary.rfind("not bijective", 0) == 0);
  auto missing = call([&](char** j, char** m) { return cl_dcp_file(s.s, "/nonexistent.json", nullptr, j, m); });
  CHECK(missing.status == CL_PRECONDITION);
}

TEST_CASE("corpus command") {
  Session s;
  auto r = call([&](char** j, char** m) { return cl_corpus_check(s.s, "path-a3", j, m); });
  CHECK(r.status == CL_PASS);
  auto bad = call([&](char** j, char** m) { return cl_corpus_check(s.s, "no-such-entry", j, m); });
  CHECK(bad.status == CL_PRECONDITION);
}
