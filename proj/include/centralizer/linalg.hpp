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

// Exact dense and sparse linear algebra over a FieldSpec.
//
// Vectors are columns. Subspaces keep a canonical reduced row echelon basis,
// so two subspaces are equal exactly when their basis matrices are equal.

#ifndef CENTRALIZER_LINALG_HPP_
#define CENTRALIZER_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centralizer/scalar.hpp"

namespace cz {

using Vec = std::vector<Scalar>;

Vec zero_vec(size_t n, const FieldSpec& f);
Vec unit_vec(size_t n, size_t i, const FieldSpec& f);
bool is_zero(const Vec& v);

class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, const FieldSpec& f);
  static Mat identity(size_t n, const FieldSpec& f);
  static Mat from_ints(const FieldSpec& f, size_t rows, size_t cols, const std::vector<long>& v);
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols, const FieldSpec& f);
  static Mat from_cols(const std::vector<Vec>& cols, size_t rows, const FieldSpec& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return a_; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  Mat transpose() const;
  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  bool is_zero() const;
  size_t nnz() const;

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat scaled(const Scalar& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Mat& b) const;
  bool operator!=(const Mat& b) const { return !(*this == b); }

  // Row-major flattening, the coordinate convention used for matrix spaces.
  Vec flatten() const { return a_; }
  static Mat unflatten(const Vec& v, size_t rows, size_t cols, const FieldSpec& f);

  static Mat hstack(const std::vector<Mat>& blocks);
  static Mat vstack(const std::vector<Mat>& blocks);
  static Mat direct_sum(const std::vector<Mat>& blocks, const FieldSpec& f);

 private:
  size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

// Sparse vector: (index, nonzero value) sorted by index.
using SpVec = std::vector<std::pair<uint32_t, Scalar>>;

SpVec to_sparse(const Vec& v);
Vec to_dense(const SpVec& v, size_t n, const FieldSpec& f);

// Sparse matrix in sorted (row, col) triplet form without explicit zeros.
class SpMat {
 public:
  struct Entry {
    uint32_t r, c;
    Scalar v;
  };
  SpMat() = default;
  SpMat(size_t rows, size_t cols, const FieldSpec& f) : rows_(rows), cols_(cols), field_(f) {}
  static SpMat from_dense(const Mat& m);
  // Entries may be unsorted and repeated; they are summed.
  static SpMat from_triplets(size_t rows, size_t cols, const FieldSpec& f, std::vector<Entry> e);
  static SpMat identity(size_t n, const FieldSpec& f);
  static SpMat unflatten(const SpVec& v, size_t rows, size_t cols, const FieldSpec& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Entry>& entries() const { return e_; }
  size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }

  Mat to_dense() const;
  SpVec flatten() const;
  SpMat transpose() const;
  SpMat operator*(const SpMat& b) const;
  SpMat operator+(const SpMat& b) const;
  SpMat operator-(const SpMat& b) const;
  SpMat scaled(const Scalar& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const SpMat& b) const;
  bool operator!=(const SpMat& b) const { return !(*this == b); }
  Scalar at(size_t i, size_t j) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Entry> e_;
};

SpMat linear_combination(const std::vector<SpMat>& mats, const Vec& coeffs);

struct Rref {
  Mat r;  // nonzero rows only, rank x cols
  std::vector<size_t> pivots;
  size_t rank = 0;
};

// Canonical reduced row echelon form. Over Q rows are kept as primitive
// integer vectors during elimination and normalized at the end.
Rref rref(const Mat& m);
size_t rank(const Mat& m);

class Subspace {
 public:
  Subspace() = default;
  Subspace(size_t ambient, const FieldSpec& f);  // zero subspace
  static Subspace span(const std::vector<Vec>& vectors, size_t ambient, const FieldSpec& f);
  static Subspace row_space(const Mat& m);
  static Subspace whole(size_t ambient, const FieldSpec& f);
  // Span of sparse vectors; independent coordinate blocks are reduced separately.
  static Subspace span_sparse(const std::vector<SpVec>& vectors, size_t ambient,
                              const FieldSpec& f);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return field_; }
  const Mat& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& w) const;
  // Coordinates of v in the basis; nullopt when v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  // v minus its component along the pivot coordinates (zero iff v is inside).
  Vec reduce(const Vec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  size_t ambient_ = 0;
  FieldSpec field_;
  Mat basis_;
  std::vector<size_t> pivots_;
};

// {x : M x = 0}.
Subspace kernel(const Mat& m);
// Column space of M.
Subspace image(const Mat& m);
// Some x with M x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
Mat kron(const Mat& a, const Mat& b);
SpMat kron(const SpMat& a, const SpMat& b);

// V / sub, with the non-pivot coordinates of sub as the section.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(const Subspace& sub);

  size_t ambient_dim() const { return sub_.ambient_dim(); }
  size_t dim() const { return section_.size(); }
  const Subspace& sub() const { return sub_; }
  const std::vector<size_t>& section() const { return section_; }

  // Quotient coordinates of v.
  Vec project(const Vec& v) const;
  // Ambient vector with the given quotient coordinates on the section.
  Vec lift(const Vec& q) const;
  Mat projection_matrix() const;
  Mat section_matrix() const;
  // Matrix of the map induced by M on the quotient; requires M(sub) in sub.
  Mat induced(const Mat& m) const;
  SpMat induced(const SpMat& m) const;

 private:
  Subspace sub_;
  std::vector<size_t> section_;
  std::vector<long> pivot_row_;  // ambient coordinate -> basis row, or -1
};

// Basis of {x : A x = 0} for sparse equations over num_vars unknowns.
// Single-variable equations are propagated first; the remaining coupled
// unknowns are split into connected components solved independently.
// Coordinates with respect to a fixed, linearly independent list of vectors.
class Coordinatizer {
 public:
  Coordinatizer() = default;
  // Throws InvalidInput when the vectors are dependent.
  Coordinatizer(const std::vector<Vec>& vectors, size_t ambient, const FieldSpec& f);
  size_t size() const { return count_; }
  const Subspace& span() const { return span_; }
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  size_t count_ = 0;
  Subspace span_;
  Mat transform_;  // row r of the RREF basis = sum_i transform_(r, i) * vectors[i]
};

std::vector<SpVec> nullspace_sparse(size_t num_vars, const std::vector<SpVec>& equations,
                                    const FieldSpec& f);

// Basis of {X : X src[i] = dst[i] X for all i}, X of shape dst_dim x src_dim.
// The first `seed` pairs are solved jointly; the remaining ones refine that
// solution space one at a time. seed = 0 means all pairs jointly.
std::vector<SpMat> intertwiners(const std::vector<SpMat>& src, const std::vector<SpMat>& dst,
                                size_t src_dim, size_t dst_dim, const FieldSpec& f,
                                size_t seed = 0);
std::vector<SpMat> commutant(const std::vector<SpMat>& gens, size_t dim, const FieldSpec& f,
                             size_t seed = 0);

// JSON text {"rows","cols","field","entries":[...]}.
std::string mat_to_json(const Mat& m);
Mat mat_from_json(const std::string& text);

}  // namespace cz

#endif  // CENTRALIZER_LINALG_HPP_
