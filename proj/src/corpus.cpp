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

#include "centralizer/corpus.hpp"

#include <functional>

namespace cz {

namespace {

Mat unit_mat(size_t n, size_t i, size_t j, const FieldSpec& f) {
  Mat m(n, n, f);
  m(i, j) = Scalar::one(f);
  return m;
}

Mat flip(size_t n, const FieldSpec& f) {
  Mat m(n, n, f);
  for (size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Scalar::one(f);
  return m;
}

using StarFn = std::function<Mat(const Mat&)>;

// Builds an entry from concrete matrices. `order` lists generating pairs
// (i, j) meaning label i <= label j; `labels` defaults to "1", "2", ...
CorpusEntry build(std::string name, std::vector<Mat> basis, const std::vector<Mat>& idempotents,
                  std::vector<std::pair<size_t, size_t>> order, const StarFn& star,
                  bool semisimple) {
  const FieldSpec f = basis.at(0).field();
  const size_t n = basis[0].rows();
  CorpusEntry e;
  e.name = name;
  e.semisimple = semisimple;
  e.data.algebra = Algebra::from_matrices(basis, name);
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flatten());
  Coordinatizer coords(flat, n * n, f);
  auto coords_of = [&](const Mat& m) {
    auto c = coords.coordinates(m.flatten());
    if (!c) throw Error(Errc::InvalidInput, "corpus matrix outside the algebra: " + name);
    return *c;
  };
  for (size_t i = 0; i < idempotents.size(); ++i) {
    e.data.idempotents.push_back(coords_of(idempotents[i]));
    e.data.labels.push_back(std::to_string(i + 1));
  }
  e.data.preorder = std::move(order);
  if (star) {
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(coords_of(star(b)));
    e.data.star = Mat::from_cols(cols, basis.size(), f);
  }
  e.matrices = std::move(basis);
  return e;
}

std::vector<Mat> diagonal_units(size_t n, const FieldSpec& f) {
  std::vector<Mat> out;
  for (size_t i = 0; i < n; ++i) out.push_back(unit_mat(n, i, i, f));
  return out;
}

std::vector<Mat> upper_triangular(size_t n, const FieldSpec& f) {
  std::vector<Mat> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) out.push_back(unit_mat(n, i, j, f));
  return out;
}

// Powers 1, N, ..., N^(k-1) of the nilpotent shift on K^k.
std::vector<Mat> truncated_polynomials(size_t k, const FieldSpec& f) {
  Mat shift(k, k, f);
  for (size_t i = 0; i + 1 < k; ++i) shift(i + 1, i) = Scalar::one(f);
  std::vector<Mat> out{Mat::identity(k, f)};
  for (size_t i = 1; i < k; ++i) out.push_back(out.back() * shift);
  return out;
}

// Block sizes 1..k of the Jordan-type operator.
std::vector<size_t> auslander_blocks(int k) {
  std::vector<size_t> out;
  for (int i = 1; i <= k; ++i) out.push_back(static_cast<size_t>(i));
  return out;
}

Mat block_projection(const std::vector<size_t>& blocks, size_t which, const FieldSpec& f) {
  size_t n = 0, start = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i == which) start = n;
    n += blocks[i];
  }
  Mat p(n, n, f);
  for (size_t i = 0; i < blocks[which]; ++i) p(start + i, start + i) = Scalar::one(f);
  return p;
}

CorpusEntry auslander_entry(int k, const FieldSpec& f) {
  auto blocks = auslander_blocks(k);
  std::vector<Mat> flips, idem;
  for (size_t i = 0; i < blocks.size(); ++i) {
    flips.push_back(flip(blocks[i], f));
    idem.push_back(block_projection(blocks, i, f));
  }
  // The block anti-diagonal form makes the shift self-adjoint, so
  // phi -> G phi^T G preserves the commutant and fixes each block projection.
  Mat g = Mat::direct_sum(flips, f);
  std::vector<std::pair<size_t, size_t>> order;
  for (size_t i = 0; i + 1 < blocks.size(); ++i) order.emplace_back(i + 1, i);
  return build("auslander-x" + std::to_string(k), auslander_matrices(k, f), idem, order,
               [g](const Mat& m) { return g * m.transpose() * g; }, false);
}

}  // namespace

std::vector<Mat> auslander_matrices(int k, const FieldSpec& f) {
  auto blocks = auslander_blocks(k);
  std::vector<Mat> shifts;
  for (size_t b : blocks) {
    Mat s(b, b, f);
    for (size_t i = 0; i + 1 < b; ++i) s(i + 1, i) = Scalar::one(f);
    shifts.push_back(s);
  }
  Mat x = Mat::direct_sum(shifts, f);
  std::vector<Mat> out;
  for (const auto& c : commutant({SpMat::from_dense(x)}, x.rows(), f)) out.push_back(c.to_dense());
  return out;
}

std::vector<CorpusEntry> corpus(const FieldSpec& f) {
  std::vector<CorpusEntry> out;
  auto identity_star = [](const Mat& m) { return m; };
  auto transpose_star = [](const Mat& m) { return m.transpose(); };

  out.push_back(build("field", {Mat::identity(1, f)}, {Mat::identity(1, f)}, {}, identity_star, true));
  out.push_back(build("field-x2", diagonal_units(2, f), diagonal_units(2, f), {{0, 1}}, identity_star, true));
  out.push_back(
      build("field-x3", diagonal_units(3, f), diagonal_units(3, f), {{0, 1}, {1, 2}}, identity_star, true));
  {
    std::vector<Mat> basis;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) basis.push_back(unit_mat(2, i, j, f));
    out.push_back(build("mat2", basis, {unit_mat(2, 0, 0, f)}, {}, transpose_star, true));
  }
  // Upper triangular 2x2: P(1) = K is simple projective, P(2) has length 2.
  out.push_back(build("path-a2", upper_triangular(2, f), diagonal_units(2, f), {{0, 1}}, nullptr, false));
  out.push_back(build("path-a2-rev", upper_triangular(2, f), diagonal_units(2, f), {{1, 0}}, nullptr, false));
  out.push_back(build("path-a3", upper_triangular(3, f), diagonal_units(3, f), {{0, 1}, {1, 2}}, nullptr, false));
  out.push_back(build("dual-numbers", truncated_polynomials(2, f), {Mat::identity(2, f)}, {}, identity_star, false));
  out.push_back(build("truncated-x3", truncated_polynomials(3, f), {Mat::identity(3, f)}, {}, identity_star, false));
  {
    // Kronecker quiver as [[x, y, z], [0, w, 0], [0, 0, w]].
    Mat e2 = unit_mat(3, 1, 1, f) + unit_mat(3, 2, 2, f);
    std::vector<Mat> basis{unit_mat(3, 0, 0, f), e2, unit_mat(3, 0, 1, f), unit_mat(3, 0, 2, f)};
    out.push_back(build("kronecker", basis, {unit_mat(3, 0, 0, f), e2}, {{0, 1}}, nullptr, false));
  }
  out.push_back(auslander_entry(2, f));
  out.push_back(auslander_entry(3, f));
  return out;
}

CorpusEntry non_split_example() {
  FieldSpec q = FieldSpec::rationals();
  Mat j(2, 2, q);
  j(0, 1) = Scalar(q, -1);
  j(1, 0) = Scalar::one(q);
  return build("gaussian", {Mat::identity(2, q), j}, {Mat::identity(2, q)}, {},
               [](const Mat& m) { return m; }, true);
}

CorpusEntry corpus_entry(const std::string& name, const FieldSpec& f) {
  for (auto& e : corpus(f))
    if (e.name == name) return e;
  if (name == "gaussian") return non_split_example();
  throw Error(Errc::InvalidInput, "unknown corpus entry " + name);
}

}  // namespace cz
