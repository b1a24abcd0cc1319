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

#include "centralizer/corpus.hpp"
#include "centralizer/strat.hpp"

using namespace cz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

StratifiedAlgebra strat(const std::string& name) { return make_stratified(corpus_entry(name, Q).data); }

std::vector<size_t> dims(const std::vector<LeftModule>& ms) {
  std::vector<size_t> out;
  for (const auto& m : ms) out.push_back(m.dim);
  return out;
}

std::vector<CorpusEntry> qh_entries() {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus(Q))
    if (make_stratified(e.data).quasi_hereditary) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("trace submodules") {
  auto s = strat("path-a2");
  auto reg = regular_module(s.algebra);
  for (const auto& p : s.pims) CHECK(trace_submodule(reg, p).dim() == p.dim);
  CHECK(trace_submodule(s.simples[0], s.pims[1]).dim() == 1);
  CHECK(trace_submodule(zero_module(s.algebra), s.pims[1]).dim() == 0);
}

TEST_CASE("standard modules") {
  auto ss = strat("field-x3");
  for (size_t l = 0; l < ss.size(); ++l) {
    CHECK(is_isomorphic(ss.standard[l], ss.simples[l]));
    CHECK(is_isomorphic(ss.costandard[l], ss.simples[l]));
  }
  auto a = strat("path-a2");
  auto b = strat("path-a2-rev");
  CHECK(dims(a.standard) == std::vector<size_t>{1, 2});
  CHECK(dims(b.standard) == std::vector<size_t>{1, 1});
  for (const auto& e : qh_entries()) {
    auto s = make_stratified(e.data);
    for (size_t l = 0; l < s.size(); ++l) CHECK(is_isomorphic(s.standard[l], s.proper_standard[l]));
  }
}

TEST_CASE("standard and costandard structure on every stratified instance") {
  for (const auto& e : corpus(Q)) {
    auto s = make_stratified(e.data);
    if (!s.standardly_stratified) continue;
    for (size_t l = 0; l < s.size(); ++l) {
      std::vector<size_t> only_l(s.size(), 0);
      only_l[l] = 1;
      CHECK_MESSAGE(top_multiplicities(s, s.standard[l]) == only_l, e.name);
      auto soc = module_socle(s.proper_costandard[l], s.radical);
      auto factors = composition_factors(s, submodule(s.proper_costandard[l], soc).module);
      CHECK_MESSAGE(factors == only_l, e.name);
      for (size_t mu = 0; mu < s.size(); ++mu)
        if (s.above(mu, l)) CHECK(composition_multiplicity(s, s.standard[l], mu) == 0);
    }
  }
}

TEST_CASE("Ext^1 basics") {
  auto s = strat("path-a2");
  for (const auto& p : s.pims)
    for (const auto& n : s.simples) CHECK(ext1(s, p, n).dim == 0);
  size_t forward = ext1(s, s.simples[1], s.simples[0]).dim;
  size_t backward = ext1(s, s.simples[0], s.simples[1]).dim;
  CHECK(forward + backward == 1);
  CHECK(forward * backward == 0);
}

TEST_CASE("standard against proper costandard is Hom-orthonormal and Ext-orthogonal") {
  for (const auto& e : corpus(Q)) {
    auto s = make_stratified(e.data);
    if (!s.standardly_stratified) continue;
    for (size_t l = 0; l < s.size(); ++l)
      for (size_t mu = 0; mu < s.size(); ++mu) {
        CHECK_MESSAGE(ext1(s, s.standard[l], s.proper_costandard[mu]).dim == 0, e.name);
        CHECK_MESSAGE(hom_basis(s.standard[l], s.proper_costandard[mu]).size() == (l == mu ? 1u : 0u), e.name);
      }
  }
}

TEST_CASE("filtrations") {
  for (const auto& e : corpus(Q)) {
    auto s = make_stratified(e.data);
    if (!s.standardly_stratified) continue;
    CHECK_MESSAGE(has_delta_filtration(s, regular_module(s.algebra)), e.name);
    CHECK(delta_filtration_witness(s, regular_module(s.algebra)).has_value());
    for (size_t l = 0; l < s.size(); ++l)
      for (size_t mu = 0; mu < s.size(); ++mu)
        CHECK(has_delta_filtration(s, direct_sum({s.standard[l], s.standard[mu]})));
  }
  // With 0 < 1 the simple top of P(1) has no standard filtration.
  auto s = strat("path-a2");
  CHECK_FALSE(has_delta_filtration(s, s.simples[1]));
  CHECK(has_delta_filtration(s, s.simples[0]));
}

TEST_CASE("dualities") {
  for (const auto& e : corpus(Q)) {
    if (!e.data.star) continue;
    auto s = make_stratified(e.data);
    auto d = make_duality(s, *e.data.star);
    for (size_t l = 0; l < s.size(); ++l) {
      CHECK(is_isomorphic(dual_module(s.simples[l], d.star), s.simples[l]));
      auto dd = dual_module(dual_module(s.pims[l], d.star), d.star);
      CHECK(is_isomorphic(dd, s.pims[l]));
      CHECK_MESSAGE(is_isomorphic(dual_module(s.standard[l], d.star), s.costandard[l]), e.name);
      CHECK(is_isomorphic(dual_module(s.pims[l], d.star), s.injectives[l]));
    }
  }
}

TEST_CASE("indecomposable tilting modules") {
  auto ss = strat("field-x2");
  auto tl = tilting_modules(ss);
  for (size_t l = 0; l < ss.size(); ++l) CHECK(is_isomorphic(tl[l], ss.simples[l]));
  auto a = strat("path-a2");
  auto ta = tilting_modules(a);
  CHECK(ta[1].dim == 2);
  CHECK(composition_factors(a, ta[1]) == std::vector<size_t>{1, 1});
  for (const auto& e : qh_entries()) {
    auto s = make_stratified(e.data);
    auto ts = tilting_modules(s);
    for (size_t l = 0; l < s.size(); ++l) {
      CHECK(has_delta_filtration(s, ts[l]));
      CHECK(has_proper_nabla_filtration(s, ts[l]));
      CHECK(is_indecomposable(ts[l]));
      if (e.data.star) CHECK(is_isomorphic(dual_module(ts[l], make_duality(s, *e.data.star).star), ts[l]));
    }
  }
}

TEST_CASE("Ringel duals") {
  auto ss = strat("field-x3");
  auto rs = ringel_dual(ss, tilting_modules(ss));
  CHECK(rs.end.algebra->dim() == 3);
  for (const auto& e : qh_entries()) {
    auto s = make_stratified(e.data);
    auto ts = tilting_modules(s);
    auto r = ringel_dual(s, ts);
    auto c = check_ringel_dual(s, r);
    CHECK_MESSAGE(c.projectives_to_tiltings, e.name);
    CHECK_MESSAGE(c.characteristic_to_projective, e.name);
    CHECK_MESSAGE(c.recovers_algebra, e.name);
  }
}

TEST_CASE("minimal faithful tilting with the double centralizer property") {
  auto ss = strat("field-x2");
  auto ts = tilting_modules(ss);
  auto m = minimal_dcp_tilting(ss, ringel_dual(ss, ts), ts);
  CHECK(m.labels == std::vector<size_t>{0, 1});
  for (const auto& e : qh_entries()) {
    if (!e.data.star) continue;
    auto s = make_stratified(e.data);
    auto t = tilting_modules(s);
    auto mt = minimal_dcp_tilting(s, ringel_dual(s, t), t);
    auto oracle = minimal_dcp_tilting_oracle(t);
    REQUIRE(oracle.size() == 1);
    CHECK_MESSAGE(mt.labels == oracle.front(), e.name);
    CHECK(mt.dcp);
  }
}

TEST_CASE("embedding criterion and faithful tilting checkers") {
  for (const auto& e : qh_entries()) {
    auto s = make_stratified(e.data);
    auto ts = tilting_modules(s);
    auto full = tilting_sum(ts, std::vector<size_t>(ts.size(), 1));
    auto rep = check_embedding_criterion(s, full, full.dim, e.name);
    CHECK_MESSAGE(rep.pass, e.name);
    if (e.data.star) {
      auto f = check_faithful_tilting(s, make_duality(s, *e.data.star), full, e.name);
      CHECK_MESSAGE(f.pass, e.name);
    }
  }
  auto s = strat("path-a3");
  auto ts = tilting_modules(s);
  try {
    check_embedding_criterion(s, ts[0], 4, "path-a3 single summand");
    FAIL("expected HypothesisFailed");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::HypothesisFailed);
  }
}

TEST_CASE("saturated tilting modules") {
  auto s = strat("path-a3");
  auto ts = tilting_modules(s);
  auto full = tilting_sum(ts, {1, 1, 1});
  auto r = is_saturated_tilting(s, ts, full);
  CHECK(r.saturated);
  CHECK(r.faithful);
  CHECK(r.dcp.value_or(false));
  CHECK_FALSE(is_saturated_tilting(s, ts, ts[2]).saturated);
  auto ss = strat("field-x2");
  auto sst = tilting_modules(ss);
  CHECK(is_saturated_tilting(ss, sst, regular_module(ss.algebra)).saturated);
}

TEST_CASE("preorder ties use the strict part") {
  auto e = corpus_entry("field-x2", Q);
  e.data.preorder = {{0, 1}, {1, 0}};
  auto s = make_stratified(e.data);
  CHECK_FALSE(s.partial_order);
  CHECK_FALSE(s.quasi_hereditary);
  CHECK(s.standardly_stratified);
}

TEST_CASE("input validation") {
  auto e = corpus_entry("path-a2", Q);
  e.data.idempotents[0] = e.data.algebra->unit();
  CHECK_THROWS_AS(make_stratified(e.data), Error);
  auto ns = non_split_example();
  try {
    make_stratified(ns.data);
    FAIL("expected NotSplit");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotSplit);
  }
  auto k = strat("path-a2");
  CHECK_THROWS_AS(make_duality(k, Mat::identity(3, Q)), Error);
}
