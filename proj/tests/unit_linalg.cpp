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

#include <random>

#include "centralizer/linalg.hpp"

using namespace cz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Mat random_mat(std::mt19937_64& rng, size_t r, size_t c, const FieldSpec& f, int density = 2) {
  Mat m(r, c, f);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng() % density == 0) m(i, j) = Scalar(f, static_cast<long>(rng() % 7) - 3);
  return m;
}

// Low-rank product so kernels and images are nontrivial.
Mat random_low_rank(std::mt19937_64& rng, size_t r, size_t c, size_t k, const FieldSpec& f) {
  return random_mat(rng, r, k, f, 1) * random_mat(rng, k, c, f, 1);
}

// e_1 on V (x) V for dim V = 2, basis v0 (x) v0, v0 (x) v1, v1 (x) v0, v1 (x) v1.
Mat e1_matrix() { return Mat::from_ints(Q, 4, 4, {0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0}); }

}  // namespace

TEST_CASE("rref examples") {
  auto id = Mat::identity(3, Q);
  auto r = rref(id);
  CHECK(r.r == id);
  CHECK(r.rank == 3);
  CHECK(rref(Mat(2, 2, Q)).rank == 0);
  auto d = rref(Mat::from_ints(Q, 2, 2, {1, 2, 2, 4}));
  CHECK(d.rank == 1);
  CHECK(d.r == Mat::from_ints(Q, 1, 2, {1, 2}));
  CHECK(d.pivots == std::vector<size_t>{0});
}

TEST_CASE("kernel, image and solve") {
  CHECK(kernel(Mat::identity(3, Q)).dim() == 0);
  CHECK(image(e1_matrix()).dim() == 1);
  auto z = solve(Mat::identity(3, Q), zero_vec(3, Q));
  REQUIRE(z);
  CHECK(is_zero(*z));
  Mat m = Mat::from_ints(Q, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(solve(m, Vec{Scalar(Q, 1L), Scalar(Q, 0L)}));
  auto x = solve(m, Vec{Scalar(Q, 3L), Scalar(Q, 6L)});
  REQUIRE(x);
  CHECK(m * *x == Vec{Scalar(Q, 3L), Scalar(Q, 6L)});
  CHECK_THROWS_AS(solve(m, zero_vec(3, Q)), Error);
}

TEST_CASE("rank-nullity, transpose rank and kernel vectors on random matrices") {
  std::mt19937_64 rng(11);
  for (auto f : {Q, FieldSpec::prime(7)}) {
    for (int t = 0; t < 40; ++t) {
      size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Mat m = t % 2 ? random_mat(rng, r, c, f) : random_low_rank(rng, r, c, 1 + rng() % 3, f);
      auto k = kernel(m);
      CHECK(k.dim() + image(m).dim() == c);
      CHECK(rank(m) == rank(m.transpose()));
      for (const auto& v : k.basis_vectors()) CHECK(is_zero(m * v));
    }
  }
}

TEST_CASE("subspace sum and intersection") {
  std::mt19937_64 rng(5);
  Subspace zero(4, Q);
  auto e = e1_matrix();
  Subspace im = image(e), ker = kernel(e);
  CHECK(intersect(im, im) == im);
  CHECK(sum(im, zero) == im);
  CHECK(intersect(im, ker).dim() == 0);
  CHECK_THROWS_AS(sum(im, Subspace(3, Q)), Error);
  for (int t = 0; t < 30; ++t) {
    Subspace u = image(random_low_rank(rng, 6, 3, 2, Q));
    Subspace w = image(random_mat(rng, 6, 3, Q));
    CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
    CHECK(sum(u, w).contains(u));
    CHECK(u.contains(intersect(u, w)));
  }
}

TEST_CASE("subspace equality is basis equality") {
  Subspace a = Subspace::span({Vec{Scalar(Q, 2L), Scalar(Q, 4L)}}, 2, Q);
  Subspace b = Subspace::span({Vec{Scalar(Q, -1L), Scalar(Q, -2L)}}, 2, Q);
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("kron") {
  std::mt19937_64 rng(3);
  CHECK(kron(Mat::identity(2, Q), Mat::identity(2, Q)) == Mat::identity(4, Q));
  Mat a = random_mat(rng, 2, 2, Q, 1);
  CHECK(kron(a, Mat(2, 2, Q)).is_zero());
  for (int t = 0; t < 20; ++t) {
    Mat a1 = random_mat(rng, 2, 2, Q, 1), b1 = random_mat(rng, 2, 2, Q, 1);
    Mat c1 = random_mat(rng, 2, 2, Q, 1), d1 = random_mat(rng, 2, 2, Q, 1);
    CHECK(kron(a1, b1) * kron(c1, d1) == kron(a1 * c1, b1 * d1));
    CHECK(kron(SpMat::from_dense(a1), SpMat::from_dense(b1)).to_dense() == kron(a1, b1));
  }
}

TEST_CASE("quotient space") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    Subspace w = image(random_low_rank(rng, 5, 4, 2, Q));
    QuotientSpace q(w);
    CHECK(q.dim() == 5 - w.dim());
    for (size_t i = 0; i < q.dim(); ++i) {
      Vec u = unit_vec(q.dim(), i, Q);
      CHECK(q.project(q.lift(u)) == u);
    }
    for (const auto& v : w.basis_vectors()) CHECK(is_zero(q.project(v)));
    CHECK(q.projection_matrix() * q.section_matrix() == Mat::identity(q.dim(), Q));
  }
}

TEST_CASE("sparse nullspace agrees with dense kernel") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(rng, 5, 8, Q, 3);
    std::vector<SpVec> eqs;
    for (size_t i = 0; i < m.rows(); ++i) eqs.push_back(to_sparse(m.row(i)));
    std::vector<Vec> dense;
    for (const auto& v : nullspace_sparse(8, eqs, Q)) dense.push_back(to_dense(v, 8, Q));
    CHECK(Subspace::span(dense, 8, Q) == kernel(m));
    std::vector<SpVec> rows;
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
    CHECK(Subspace::span_sparse(rows, 8, Q) == Subspace::row_space(m));
  }
}

TEST_CASE("commutant agrees with a dense Kronecker solve") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const size_t n = 4;
    std::vector<Mat> gens{random_mat(rng, n, n, Q, 3), random_mat(rng, n, n, Q, 3)};
    // X G = G X with row-major vec(X): (I (x) G^T - G (x) I) vec(X) = 0.
    std::vector<Mat> blocks;
    for (const auto& g : gens) blocks.push_back(kron(Mat::identity(n, Q), g.transpose()) - kron(g, Mat::identity(n, Q)));
    Subspace oracle = kernel(Mat::vstack(blocks));
    std::vector<SpMat> sp;
    for (const auto& g : gens) sp.push_back(SpMat::from_dense(g));
    auto c = commutant(sp, n, Q);
    std::vector<Vec> flat;
    for (const auto& x : c) {
      flat.push_back(x.to_dense().flatten());
      for (const auto& g : gens) CHECK(x.to_dense() * g == g * x.to_dense());
    }
    CHECK(Subspace::span(flat, n * n, Q) == oracle);
    CHECK(c.size() == oracle.dim());
  }
}

TEST_CASE("matrix JSON round trip") {
  Mat m = Mat::from_ints(FieldSpec::prime(5), 2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(mat_from_json(mat_to_json(m)) == m);
  Mat r(1, 2, Q);
  r(0, 0) = Scalar::parse("-3/7", Q);
  CHECK(mat_from_json(mat_to_json(r)) == r);
  CHECK_THROWS_AS(mat_from_json("{\"rows\":1}"), Error);
}
