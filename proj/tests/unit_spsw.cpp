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

#include <algorithm>
#include <cstdlib>
#include <random>

#include "centralizer/spsw.hpp"

using namespace cz;
using namespace cz::spsw;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long v) { return Scalar(Q, v); }

// Dense commutant dimension from the Kronecker system (I (x) G^T - G (x) I) vec X = 0.
size_t dense_commutant_dim(const std::vector<SpMat>& gens, size_t n, const FieldSpec& f) {
  if (gens.empty()) return n * n;
  std::vector<Mat> blocks;
  for (const auto& g : gens) {
    Mat d = g.to_dense();
    blocks.push_back(kron(Mat::identity(n, f), d.transpose()) - kron(d, Mat::identity(n, f)));
  }
  return kernel(Mat::vstack(blocks)).dim();
}

Vec basis_vec(const TensorSpace& t, std::vector<size_t> word, const FieldSpec& f = Q) {
  return unit_vec(t.dim(), t.index(word), f);
}

}  // namespace

TEST_CASE("symplectic form and dual bases") {
  for (int m = 1; m <= 3; ++m) {
    SymplecticSpace v(m);
    Mat g = v.form(Q);
    const size_t mm = static_cast<size_t>(m);
    for (size_t i = 0; i < mm; ++i)
      for (size_t j = 0; j < mm; ++j) {
        size_t jp = v.dual_index(j);
        CHECK(g(i, jp) == q(i == j ? 1 : 0));
        CHECK(g(jp, i) == q(i == j ? -1 : 0));
        CHECK(g(i, j) == q(0));
        CHECK(g(v.dual_index(i), jp) == q(0));
      }
    // <v_i, v_j^*> = delta_ij with v_j^* = sign_j v_{j'}.
    for (size_t i = 0; i < v.dim(); ++i)
      for (size_t j = 0; j < v.dim(); ++j)
        CHECK(g(i, v.dual_index(j)) * q(v.dual_sign(j)) == q(i == j ? 1 : 0));
  }
  SymplecticSpace v2(2);
  CHECK(v2.epsilon(0, 3) == 1);
  CHECK(v2.epsilon(3, 0) == -1);
  CHECK(v2.epsilon(0, 1) == 0);
  CHECK_THROWS_AS(SymplecticSpace(0), Error);
}

TEST_CASE("tensor indexing is mixed radix") {
  TensorSpace t(2, 3);
  CHECK(t.dim() == 64);
  for (size_t x = 0; x < t.dim(); ++x) CHECK(t.index(t.word(x)) == x);
  CHECK(t.index({0, 0, 1}) == 1);
  CHECK(t.index({1, 0, 0}) == 16);
}

TEST_CASE("generator actions on V (x) V, m = 1") {
  TensorSpace t(1, 2);
  auto s = action_matrix(brauer::Letter{'s', 1}, t, Q);
  auto e = action_matrix(brauer::Letter{'e', 1}, t, Q);
  Vec v01 = basis_vec(t, {0, 1});
  // s_1 is minus the swap.
  Vec expect_s = basis_vec(t, {1, 0});
  for (auto& x : expect_s) x = -x;
  CHECK(s * v01 == expect_s);
  // e_1: v_1^* (x) v_1 + v_2^* (x) v_2 = v_2 (x) v_1 - v_1 (x) v_2.
  Vec expect_e = basis_vec(t, {1, 0});
  expect_e[t.index({0, 1})] = q(-1);
  CHECK(e * v01 == expect_e);
  CHECK(image(e.to_dense()).dim() == 1);
  CHECK(e * e == e.scaled(q(-2)));
  TensorSpace t2(2, 2);
  auto e2 = action_matrix(brauer::Letter{'e', 1}, t2, Q);
  CHECK(e2 * e2 == e2.scaled(q(-4)));
  CHECK_THROWS_AS(action_matrix(brauer::Letter{'s', 2}, t, Q), Error);
}

TEST_CASE("defining relations hold on tensor space") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 2; n <= 3; ++n) {
      auto r = representation_is_homomorphism_check(m, n, Q);
      CHECK(r.ok());
      CHECK(r.checked == brauer::defining_relations(n).size());
      CHECK(factorization_agreement(m, n, Q));
    }
  CHECK(representation_is_homomorphism_check(1, 3, FieldSpec::prime(5)).ok());
}

TEST_CASE("diagram actions compose like diagrams") {
  const int m = 1, n = 3;
  TensorSpace t(m, n);
  auto ds = brauer::enumerate_diagrams(n);
  Scalar delta = brauer::delta_scalar(-2L * m, Q);
  for (const auto& a : ds)
    for (const auto& b : ds) {
      auto c = brauer::compose(a, b);
      SpMat lhs = action_matrix(b, t, Q) * action_matrix(a, t, Q);  // x (a b) = (x a) b
      SpMat rhs = action_matrix(c.diagram, t, Q);
      for (int k = 0; k < c.loops; ++k) rhs = rhs.scaled(delta);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Schur algebra dimensions against a dense oracle") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}) {
    auto s = schur_algebra(m, n, Q);
    CHECK(s.dim() == dense_commutant_dim(s.generators, s.space.dim(), Q));
  }
  CHECK(schur_algebra(1, 1, Q).dim() == 4);
  CHECK(schur_algebra(1, 2, Q).dim() == 10);
  CHECK(schur_algebra(2, 2, Q).dim() == 126);
  size_t d13 = schur_algebra(1, 3, Q).dim();
  CHECK(d13 == 20);
  CHECK(schur_algebra(1, 3, FieldSpec::prime(7)).dim() == d13);
  CHECK(schur_algebra(1, 3, FieldSpec::prime(11)).dim() == d13);
}

TEST_CASE("Schur algebra elements commute with every diagram") {
  std::mt19937_64 rng(2);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    auto s = schur_algebra(m, n, Q);
    std::vector<SpVec> flat;
    for (const auto& b : s.basis) flat.push_back(b.flatten());
    Subspace span = Subspace::span_sparse(flat, s.space.dim() * s.space.dim(), Q);
    CHECK(span.contains(Mat::identity(s.space.dim(), Q).flatten()));
    for (const auto& w : s.weights) CHECK(span.contains(w.to_dense().flatten()));
    auto ds = brauer::enumerate_diagrams(n);
    for (int k = 0; k < 20; ++k) {
      const auto& x = s.basis[rng() % s.basis.size()];
      const auto& y = s.basis[rng() % s.basis.size()];
      SpMat xy = x * y;
      SpMat d = action_matrix(ds[rng() % ds.size()], s.space, Q);
      CHECK(xy * d == d * xy);
    }
  }
}

TEST_CASE("structure-constant route for S^sy(1,2) on V (x) V") {
  auto s = schur_algebra(1, 2, Q);
  auto ma = s.as_matrix_algebra();
  auto alg = to_algebra(ma);
  CHECK(alg->dim() == 10);
  std::vector<Mat> act;
  for (const auto& b : s.basis) act.push_back(b.to_dense());
  LeftModule v = make_module(alg, act);
  CHECK(is_faithful(v));
  auto emb = embed_into_add(regular_module(alg), v);
  CHECK(emb.r >= 1);
  auto d = double_centralizer_map(v);
  CHECK(d.bijective);
  auto dd = dominant_dimension_at_least_2(v);
  CHECK(dd.holds);
  auto md = matrix_double_centralizer(ma);
  CHECK(md.bijective);
  CHECK(md.dim_a1 == d.dim_a1);
  CHECK(matrix_dominant_dimension(ma, md.a1_basis).holds);
}

TEST_CASE("Brauer image rank") {
  auto p22 = phi_injectivity_check(2, 2, Q);
  CHECK(p22.rank == 3);
  CHECK(p22.injective);
  auto p13 = phi_injectivity_check(1, 3, Q);
  CHECK(p13.rank < 15);
  CHECK_FALSE(p13.injective);
}

TEST_CASE("subquotients") {
  auto s0 = subquotient_spaces(1, 2, 0, Q);
  CHECK(s0.w.dim() == 4);
  CHECK(s0.q.dim() == 0);
  CHECK(s0.h_star.dim() == 0);
  auto s1 = subquotient_spaces(1, 2, 1, Q);
  CHECK(s1.w.dim() == 1);
  CHECK(s1.q.dim() == 3);
  CHECK(s1.h_star.dim() == 3);
  CHECK(s1.harmonic.dim() == 1);
  CHECK_THROWS_AS(subquotient_spaces(1, 2, 2, Q), Error);
}

TEST_CASE("dimensions of Q_f, HT_f and W_f/W_f+1 do not depend on the characteristic") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}})
    for (int f = 0; f <= n / 2; ++f) {
      auto a = subquotient_spaces(m, n, f, Q);
      size_t layer = layer_dimension(m, n, f, Q);
      for (uint64_t p : {5u, 7u, 11u}) {
        if (p <= static_cast<uint64_t>(n)) continue;
        auto fp = FieldSpec::prime(p);
        auto b = subquotient_spaces(m, n, f, fp);
        CHECK(a.q.dim() == b.q.dim());
        CHECK(a.harmonic.dim() == b.harmonic.dim());
        CHECK(layer == layer_dimension(m, n, f, fp));
      }
    }
}

TEST_CASE("direct sum decomposition") {
  for (auto [m, n, f] : std::vector<std::tuple<int, int, int>>{{1, 2, 1}, {1, 3, 1}, {2, 2, 1}, {2, 3, 1}, {1, 2, 0}}) {
    auto d = check_direct_sum_decomposition(m, n, f, Q);
    CHECK(d.holds);
    CHECK(d.dim_intersection == 0);
    CHECK(d.dim_w + d.dim_h == d.total);
  }
  auto d = check_direct_sum_decomposition(1, 2, 1, Q);
  CHECK(d.dim_w == 1);
  CHECK(d.dim_h == 3);
  try {
    check_direct_sum_decomposition(1, 3, 1, FieldSpec::prime(3));
    FAIL("expected CharTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CharTooSmall);
  }
  CHECK(check_direct_sum_decomposition(1, 3, 1, FieldSpec::prime(5)).holds);
}

TEST_CASE("restriction to Q_f is onto the commutant") {
  for (auto [m, n, f] : std::vector<std::tuple<int, int, int>>{{1, 2, 1}, {1, 3, 1}}) {
    auto r = check_quotient_duality(m, n, f, Q);
    CHECK(r.image_in_commutant);
    CHECK(r.surjective);
    CHECK(r.dcp.bijective);
    CHECK(r.domdim.holds);
    CHECK(r.pass);
  }
  auto r = check_quotient_duality(1, 2, 1, Q);
  CHECK(r.dim_q == 3);
  CHECK(r.dim_image == 9);
  CHECK_THROWS_AS(check_quotient_duality(1, 2, 0, Q), Error);
  CHECK_THROWS_AS(check_quotient_duality(1, 3, 1, FieldSpec::prime(2)), Error);
}

TEST_CASE("S_f^sy(1,3) on Q_1 through structure constants") {
  auto s = schur_algebra(1, 3, Q);
  auto sq = subquotient_spaces(1, 3, 1, Q);
  std::vector<Vec> flat;
  for (const auto& b : s.basis) flat.push_back(sq.q.induced(b.to_dense()).flatten());
  Subspace img = Subspace::span(flat, sq.q.dim() * sq.q.dim(), Q);
  std::vector<Mat> basis;
  for (const auto& v : img.basis_vectors()) basis.push_back(Mat::unflatten(v, sq.q.dim(), sq.q.dim(), Q));
  auto alg = Algebra::from_matrices(basis);
  LeftModule qf = make_module(alg, basis);
  CHECK(dominant_dimension_at_least_2(qf).holds);
  CHECK(double_centralizer_map(qf).bijective);
}

TEST_CASE("dimension cap") {
  CHECK(dimension_cap() == 4096);
  setenv("CENTRALIZER_LAB_DIM_CAP", "10", 1);
  CHECK(dimension_cap() == 10);
  try {
    schur_algebra(1, 4, Q);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  unsetenv("CENTRALIZER_LAB_DIM_CAP");
  CHECK_THROWS_AS(schur_algebra(4, 5, Q), Error);
}

TEST_CASE("weights") {
  CHECK(dominance_leq({0, 0}, {2, 0}));
  CHECK_FALSE(dominance_leq({2, 0}, {0, 0}));
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
  CHECK_FALSE(dominance_leq({1, 0}, {2, 0}));
  CHECK_THROWS_AS(dominance_leq({1}, {1, 0}), Error);
  CHECK(lambda_f_plus(1, 2, 1) == std::vector<Weight>{{0}});
  CHECK(lambda_f_complement(1, 2, 1) == std::vector<Weight>{{2}});
  CHECK(partitions_with_parts(4, 2) == std::vector<Weight>{{4, 0}, {3, 1}, {2, 2}});
  CHECK(rho(3) == Weight{3, 2, 1});
  CHECK(positive_roots(2).size() == 4);
  Root b{Root::Kind::Difference, 0, 1};
  Weight mu{3, 1};
  // <mu + rho, b^vee> = (3 + 2) - (1 + 1) = 3.
  CHECK(dot_action(mu, b, 0, 5) == Weight{0, 4});
  CHECK(dot_action(mu, b, 1, 5) == Weight{5, -1});
  Root l{Root::Kind::Long, 0, 0};
  CHECK(coroot_pairing(Weight{3, 1}, l) == 3);
  CHECK(dot_action(Weight{0}, Root{Root::Kind::Long, 0, 0}, 0, 5) == Weight{-2});
}

TEST_CASE("dominance is a partial order on dominant weights") {
  for (int m = 1; m <= 3; ++m) {
    auto ws = dominant_weights(m, 6);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : ws)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
  }
}

TEST_CASE("larger weights never lie below smaller sizes") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) CHECK(size_order_check(m, n).violations == 0);
  CHECK(size_order_check(2, 4).pairs > 0);
}

// Single-step increasing reflections from Lambda_f^+ into Lambda_f^c, with
// the roots restricted to the given kinds.
std::vector<std::pair<Weight, Weight>> linked_exits(int m, int n, int f, long p, bool with_sum_roots) {
  std::vector<std::pair<Weight, Weight>> out;
  auto comp = lambda_f_complement(m, n, f);
  for (const auto& mu : lambda_f_plus(m, n, f))
    for (const auto& b : positive_roots(m)) {
      if (b.kind == Root::Kind::Sum && !with_sum_roots) continue;
      for (long k = -4L * n; k <= 4L * n; ++k) {
        Weight nu = dot_action(mu, b, k, p);
        if (nu != mu && std::find(comp.begin(), comp.end(), nu) != comp.end() && dominance_leq(mu, nu))
          out.push_back({mu, nu});
      }
    }
  return out;
}

TEST_CASE("cross-block separation") {
  CHECK(cross_block_separation_check(1, 2, 1, 5).separated);
  CHECK(cross_block_separation_check(2, 3, 1, 7).separated);
  auto neg = cross_block_separation_check(2, 4, 1, 3);
  CHECK_FALSE(neg.separated);
  REQUIRE(neg.violation.has_value());
  CHECK(dominance_leq(neg.violation->first, neg.violation->second));
  CHECK_THROWS_AS(cross_block_separation_check(1, 2, 1, 4), Error);
  for (int m = 1; m <= 2; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int f = 1; f <= n / 2; ++f)
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
          auto r = cross_block_separation_check(m, n, f, p);
          CHECK(r.separated == linked_exits(m, n, f, p, true).empty());
          // Above the bound, reflections in 2e_i and e_i - e_j never exit.
          if (p > n - f + m) CHECK(linked_exits(m, n, f, p, false).empty());
        }
}

TEST_CASE("separation fails above the bound through e_i + e_j reflections") {
  // Found by the exhaustive search; each exit is a reflection in e_1 + e_2.
  const std::vector<std::tuple<int, int, int, long, Weight, Weight>> cases{
      {2, 3, 1, 5, {1, 0}, {2, 1}}, {2, 4, 2, 5, {0, 0}, {2, 2}}, {2, 5, 1, 7, {3, 0}, {4, 1}}};
  Root sum{Root::Kind::Sum, 0, 1};
  for (const auto& [m, n, f, p, mu, nu] : cases) {
    auto r = cross_block_separation_check(m, n, f, p);
    CHECK_FALSE(r.separated);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->first == mu);
    CHECK(r.violation->second == nu);
    CHECK(dot_action(mu, sum, 1, p) == nu);
  }
}
