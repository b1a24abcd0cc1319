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

// JSON form of algebras and modules.
//
// Algebra: {dim, field, mult: [[[c_ij^k]]], unit: [...], idempotents?,
// star?, labels?, preorder?: [[i, j], ...], name?}. Scalars may be JSON
// numbers or strings such as "3/4". Matrices are either row arrays or
// {rows, cols, field, entries}.

#include <json.hpp>

#include "centralizer/fdalg.hpp"

namespace cz {

namespace {

using json = nlohmann::json;

Scalar scalar_of(const json& j, const FieldSpec& f) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  throw Error(Errc::ParseError, "scalar must be an integer or a string");
}

Vec vec_of(const json& j, size_t n, const FieldSpec& f) {
  if (!j.is_array() || j.size() != n) throw Error(Errc::ParseError, "vector of wrong length");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_of(x, f));
  return v;
}

Mat mat_of(const json& j, size_t rows, size_t cols, const FieldSpec& f) {
  if (j.is_object()) {
    Mat m = mat_from_json(j.dump());
    if (m.rows() != rows || m.cols() != cols || !(m.field() == f))
      throw Error(Errc::ParseError, "matrix has wrong shape or field");
    return m;
  }
  if (!j.is_array() || j.size() != rows) throw Error(Errc::ParseError, "matrix row count");
  std::vector<Vec> rs;
  for (const auto& r : j) rs.push_back(vec_of(r, cols, f));
  return Mat::from_rows(rs, cols, f);
}

json json_of(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json json_of(const Mat& m) {
  json out = json::array();
  for (size_t i = 0; i < m.rows(); ++i) out.push_back(json_of(m.row(i)));
  return out;
}

}  // namespace

AlgebraData algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    FieldSpec f = FieldSpec::parse(j.value("field", std::string("Q")));
    size_t d = j.at("dim").get<size_t>();
    const json& mult = j.at("mult");
    if (!mult.is_array() || mult.size() != d) throw Error(Errc::ParseError, "mult must be dim x dim x dim");
    std::vector<std::vector<Vec>> c(d);
    for (size_t i = 0; i < d; ++i) {
      if (!mult[i].is_array() || mult[i].size() != d) throw Error(Errc::ParseError, "mult row");
      for (size_t k = 0; k < d; ++k) c[i].push_back(vec_of(mult[i][k], d, f));
    }
    AlgebraData out;
    out.algebra = Algebra::make(f, std::move(c), vec_of(j.at("unit"), d, f), j.value("name", std::string()));
    if (j.contains("idempotents"))
      for (const auto& e : j["idempotents"]) out.idempotents.push_back(vec_of(e, d, f));
    if (j.contains("star")) out.star = mat_of(j["star"], d, d, f);
    if (j.contains("labels"))
      for (const auto& l : j["labels"]) out.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    if (j.contains("preorder"))
      for (const auto& p : j["preorder"]) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "preorder pairs are [i, j]");
        out.preorder.emplace_back(p[0].get<size_t>(), p[1].get<size_t>());
      }
    if (!out.labels.empty() && out.labels.size() != out.idempotents.size())
      throw Error(Errc::ParseError, "one idempotent per label required");
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string algebra_to_json(const AlgebraData& d) {
  const Algebra& a = *d.algebra;
  json j;
  j["dim"] = a.dim();
  j["field"] = a.field().name();
  if (!a.name().empty()) j["name"] = a.name();
  json mult = json::array();
  for (size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < a.dim(); ++k) row.push_back(json_of(a.product(i, k)));
    mult.push_back(row);
  }
  j["mult"] = mult;
  j["unit"] = json_of(a.unit());
  if (!d.idempotents.empty()) {
    j["idempotents"] = json::array();
    for (const auto& e : d.idempotents) j["idempotents"].push_back(json_of(e));
  }
  if (d.star) j["star"] = json_of(*d.star);
  if (!d.labels.empty()) j["labels"] = d.labels;
  if (!d.preorder.empty()) {
    j["preorder"] = json::array();
    for (auto [x, y] : d.preorder) j["preorder"].push_back({x, y});
  }
  return j.dump(1);
}

LeftModule module_from_json(const AlgebraPtr& a, const std::string& text) {
  try {
    json j = json::parse(text);
    size_t d = j.at("dim").get<size_t>();
    const json& act = j.at("action");
    if (!act.is_array() || act.size() != a->dim()) throw Error(Errc::ParseError, "one action matrix per basis element");
    std::vector<Mat> ms;
    for (const auto& m : act) ms.push_back(mat_of(m, d, d, a->field()));
    return make_module(a, std::move(ms));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string module_to_json(const LeftModule& m) {
  json j;
  j["dim"] = m.dim;
  j["action"] = json::array();
  for (const auto& x : m.action) j["action"].push_back(json_of(x));
  return j.dump(1);
}

}  // namespace cz
