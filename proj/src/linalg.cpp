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

#include "centralizer/linalg.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "kernels.hpp"

namespace cz {

Vec zero_vec(size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(size_t n, size_t i, const FieldSpec& f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Mat

Mat::Mat(size_t rows, size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(size_t n, const FieldSpec& f) {
  Mat m(n, n, f);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_ints(const FieldSpec& f, size_t rows, size_t cols, const std::vector<long>& v) {
  if (v.size() != rows * cols) throw Error(Errc::ShapeMismatch, "from_ints: wrong entry count");
  Mat m(rows, cols, f);
  for (size_t i = 0; i < v.size(); ++i) m.a_[i] = Scalar(f, v[i]);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols, const FieldSpec& f) {
  Mat m(rows.size(), cols, f);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::ShapeMismatch, "from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + i * cols);
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, size_t rows, const FieldSpec& f) {
  Mat m(rows, cols.size(), f);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(Errc::ShapeMismatch, "from_cols: ragged columns");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Mat::col(size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::ShapeMismatch, "block out of range");
  Mat b(nr, nc, field_);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool Mat::is_zero() const { return cz::is_zero(a_); }

size_t Mat::nnz() const {
  return std::count_if(a_.begin(), a_.end(), [](const Scalar& s) { return !s.is_zero(); });
}

Mat Mat::operator*(const Mat& b) const {
  if (cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product");
  if (!(field_ == b.field_)) throw Error(Errc::FieldMismatch, "matrix product");
  Mat c(rows_, b.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Mat Mat::operator+(const Mat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix sum");
  Mat c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Mat Mat::operator-(const Mat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix difference");
  Mat c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat c = *this;
  for (auto& x : c.a_) x *= s;
  return c;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw Error(Errc::ShapeMismatch, "matrix-vector product");
  Vec out = zero_vec(rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
    }
  return out;
}

bool Mat::operator==(const Mat& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && field_ == b.field_ && a_ == b.a_;
}

Mat Mat::unflatten(const Vec& v, size_t rows, size_t cols, const FieldSpec& f) {
  if (v.size() != rows * cols) throw Error(Errc::ShapeMismatch, "unflatten");
  Mat m(rows, cols, f);
  m.a_ = v;
  return m;
}

Mat Mat::hstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(Errc::ShapeMismatch, "hstack");
    cols += b.cols();
  }
  Mat m(rows, cols, blocks[0].field());
  size_t c0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < b.cols(); ++j) m(i, c0 + j) = b(i, j);
    c0 += b.cols();
  }
  return m;
}

Mat Mat::vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(Errc::ShapeMismatch, "vstack");
    rows += b.rows();
  }
  Mat m(rows, cols, blocks[0].field());
  size_t r0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

Mat Mat::direct_sum(const std::vector<Mat>& blocks, const FieldSpec& f) {
  size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat m(rows, cols, f);
  size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

// ---------------------------------------------------------------- sparse

SpVec to_sparse(const Vec& v) {
  SpVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<uint32_t>(i), v[i]);
  return s;
}

Vec to_dense(const SpVec& v, size_t n, const FieldSpec& f) {
  Vec d = zero_vec(n, f);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

SpMat SpMat::from_dense(const Mat& m) {
  SpMat s(m.rows(), m.cols(), m.field());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        s.e_.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), m(i, j)});
  return s;
}

SpMat SpMat::from_triplets(size_t rows, size_t cols, const FieldSpec& f, std::vector<Entry> e) {
  std::sort(e.begin(), e.end(),
            [](const Entry& a, const Entry& b) { return a.r != b.r ? a.r < b.r : a.c < b.c; });
  SpMat s(rows, cols, f);
  for (auto& x : e) {
    if (x.r >= rows || x.c >= cols) throw Error(Errc::IndexOutOfRange, "sparse entry");
    if (!s.e_.empty() && s.e_.back().r == x.r && s.e_.back().c == x.c) {
      s.e_.back().v += x.v;
    } else {
      s.e_.push_back(std::move(x));
    }
  }
  s.e_.erase(std::remove_if(s.e_.begin(), s.e_.end(), [](const Entry& x) { return x.v.is_zero(); }),
             s.e_.end());
  return s;
}

SpMat SpMat::identity(size_t n, const FieldSpec& f) {
  SpMat s(n, n, f);
  for (uint32_t i = 0; i < n; ++i) s.e_.push_back({i, i, Scalar::one(f)});
  return s;
}

SpMat SpMat::unflatten(const SpVec& v, size_t rows, size_t cols, const FieldSpec& f) {
  SpMat s(rows, cols, f);
  for (const auto& [k, x] : v) {
    if (k >= rows * cols) throw Error(Errc::IndexOutOfRange, "unflatten");
    s.e_.push_back({static_cast<uint32_t>(k / cols), static_cast<uint32_t>(k % cols), x});
  }
  return s;
}

Mat SpMat::to_dense() const {
  Mat m(rows_, cols_, field_);
  for (const auto& x : e_) m(x.r, x.c) = x.v;
  return m;
}

SpVec SpMat::flatten() const {
  SpVec v;
  v.reserve(e_.size());
  for (const auto& x : e_) v.emplace_back(static_cast<uint32_t>(x.r * cols_ + x.c), x.v);
  return v;
}

SpMat SpMat::transpose() const {
  std::vector<Entry> t;
  t.reserve(e_.size());
  for (const auto& x : e_) t.push_back({x.c, x.r, x.v});
  return from_triplets(cols_, rows_, field_, std::move(t));
}

SpMat SpMat::operator*(const SpMat& b) const {
  if (cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "sparse product");
  if (!(field_ == b.field_)) throw Error(Errc::FieldMismatch, "sparse product");
  // Row start offsets of b.
  std::vector<size_t> start(b.rows_ + 1, 0);
  for (const auto& x : b.e_) ++start[x.r + 1];
  for (size_t i = 0; i < b.rows_; ++i) start[i + 1] += start[i];
  SpMat c(rows_, b.cols_, field_);
  std::map<uint32_t, Scalar> acc;
  size_t k = 0;
  while (k < e_.size()) {
    uint32_t r = e_[k].r;
    acc.clear();
    for (; k < e_.size() && e_[k].r == r; ++k) {
      const auto& x = e_[k];
      for (size_t t = start[x.c]; t < start[x.c + 1]; ++t) {
        auto [it, fresh] = acc.try_emplace(b.e_[t].c, Scalar::zero(field_));
        it->second += x.v * b.e_[t].v;
      }
    }
    for (auto& [col, v] : acc)
      if (!v.is_zero()) c.e_.push_back({r, col, v});
  }
  return c;
}

static SpMat merge(const SpMat& a, const SpMat& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "sparse sum");
  std::vector<SpMat::Entry> e = a.entries();
  for (const auto& x : b.entries()) e.push_back({x.r, x.c, subtract ? -x.v : x.v});
  return SpMat::from_triplets(a.rows(), a.cols(), a.field(), std::move(e));
}

SpMat SpMat::operator+(const SpMat& b) const { return merge(*this, b, false); }
SpMat SpMat::operator-(const SpMat& b) const { return merge(*this, b, true); }

SpMat SpMat::scaled(const Scalar& s) const {
  if (s.is_zero()) return SpMat(rows_, cols_, field_);
  SpMat c = *this;
  for (auto& x : c.e_) x.v *= s;
  return c;
}

Vec SpMat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw Error(Errc::ShapeMismatch, "sparse matrix-vector product");
  Vec out = zero_vec(rows_, field_);
  for (const auto& x : e_)
    if (!v[x.c].is_zero()) out[x.r] += x.v * v[x.c];
  return out;
}

bool SpMat::operator==(const SpMat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_ || !(field_ == b.field_) || e_.size() != b.e_.size())
    return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i].r != b.e_[i].r || e_[i].c != b.e_[i].c || e_[i].v != b.e_[i].v) return false;
  return true;
}

Scalar SpMat::at(size_t i, size_t j) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(i, j),
                             [](const Entry& x, const std::pair<size_t, size_t>& k) {
                               return x.r != k.first ? x.r < k.first : x.c < k.second;
                             });
  if (it != e_.end() && it->r == i && it->c == j) return it->v;
  return Scalar::zero(field_);
}

SpMat linear_combination(const std::vector<SpMat>& mats, const Vec& coeffs) {
  if (mats.empty() || mats.size() != coeffs.size())
    throw Error(Errc::ShapeMismatch, "linear_combination");
  std::vector<SpMat::Entry> e;
  for (size_t i = 0; i < mats.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (const auto& x : mats[i].entries()) e.push_back({x.r, x.c, x.v * coeffs[i]});
  }
  return SpMat::from_triplets(mats[0].rows(), mats[0].cols(), mats[0].field(), std::move(e));
}

// ---------------------------------------------------------------- kernels

namespace detail {

static void make_primitive(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : row)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void rref_rational(std::vector<std::vector<mpq_class>>& rows, size_t cols,
                   std::vector<size_t>& pivots) {
  const size_t n = rows.size();
  std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& x : rows[i])
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (size_t j = 0; j < cols; ++j)
      if (sgn(rows[i][j]) != 0) z[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
    make_primitive(z[i]);
  }
  pivots.clear();
  size_t rank = 0;
  mpz_class g, a, b;
  for (size_t c = 0; c < cols && rank < n; ++c) {
    size_t best = n;
    size_t best_size = 0;
    for (size_t r = rank; r < n; ++r) {
      if (sgn(z[r][c]) == 0) continue;
      size_t s = mpz_sizeinbase(z[r][c].get_mpz_t(), 2);
      if (best == n || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best == n) continue;
    std::swap(z[rank], z[best]);
    const auto& prow = z[rank];
    for (size_t s = 0; s < n; ++s) {
      if (s == rank || sgn(z[s][c]) == 0) continue;
      auto& row = z[s];
      mpz_gcd(g.get_mpz_t(), prow[c].get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), prow[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      bool scale = a != 1;
      for (size_t j = 0; j < cols; ++j) {
        if (scale && sgn(row[j]) != 0) row[j] *= a;
        if (j >= c && sgn(prow[j]) != 0) mpz_submul(row[j].get_mpz_t(), b.get_mpz_t(), prow[j].get_mpz_t());
      }
      make_primitive(row);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.assign(rank, std::vector<mpq_class>(cols));
  for (size_t i = 0; i < rank; ++i) {
    const mpz_class& d = z[i][pivots[i]];
    for (size_t j = 0; j < cols; ++j) {
      if (sgn(z[i][j]) == 0) continue;
      rows[i][j] = mpq_class(z[i][j], d);
      rows[i][j].canonicalize();
    }
  }
}

void rref_modp(std::vector<std::vector<uint32_t>>& rows, size_t cols, uint32_t p,
               std::vector<size_t>& pivots) {
  const size_t n = rows.size();
  pivots.clear();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < n; ++c) {
    size_t best = n;
    for (size_t r = rank; r < n; ++r)
      if (rows[r][c] != 0) {
        best = r;
        break;
      }
    if (best == n) continue;
    std::swap(rows[rank], rows[best]);
    auto& prow = rows[rank];
    uint32_t inv = mod_inv(prow[c], p);
    for (size_t j = c; j < cols; ++j)
      if (prow[j]) prow[j] = mod_mul(prow[j], inv, p);
    for (size_t s = 0; s < n; ++s) {
      if (s == rank || rows[s][c] == 0) continue;
      auto& row = rows[s];
      uint32_t factor = row[c];
      for (size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = mod_sub(row[j], mod_mul(factor, prow[j], p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
}

std::vector<Vec> rref_rows(std::vector<Vec> rows, size_t cols, const FieldSpec& f,
                           std::vector<size_t>& pivots) {
  std::vector<Vec> out;
  if (f.is_rational()) {
    std::vector<std::vector<mpq_class>> q(rows.size(), std::vector<mpq_class>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols; ++j) q[i][j] = rows[i][j].q();
    rows.clear();
    rref_rational(q, cols, pivots);
    out.reserve(q.size());
    for (auto& r : q) {
      Vec v;
      v.reserve(cols);
      for (auto& x : r) v.emplace_back(f, x);
      out.push_back(std::move(v));
    }
  } else {
    std::vector<std::vector<uint32_t>> a(rows.size(), std::vector<uint32_t>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols; ++j) a[i][j] = rows[i][j].residue();
    rows.clear();
    rref_modp(a, cols, f.p, pivots);
    out.reserve(a.size());
    for (auto& r : a) {
      Vec v;
      v.reserve(cols);
      for (auto x : r) v.push_back(Scalar::from_residue(f.p, x));
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec> nullspace_from_rref(const std::vector<Vec>& r, const std::vector<size_t>& pivots,
                                     size_t cols, const FieldSpec& f) {
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(cols, f);
    v[fc] = Scalar::one(f);
    for (size_t i = 0; i < pivots.size(); ++i)
      if (!r[i][fc].is_zero()) v[pivots[i]] = -r[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

Rref rref(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  Rref out;
  auto r = detail::rref_rows(std::move(rows), m.cols(), m.field(), out.pivots);
  out.rank = r.size();
  out.r = Mat::from_rows(r, m.cols(), m.field());
  return out;
}

size_t rank(const Mat& m) { return rref(m).rank; }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(size_t ambient, const FieldSpec& f)
    : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, size_t ambient, const FieldSpec& f) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw Error(Errc::AmbientMismatch, "span: vector length");
  Subspace s(ambient, f);
  if (vectors.empty()) return s;
  auto r = detail::rref_rows(vectors, ambient, f, s.pivots_);
  s.basis_ = Mat::from_rows(r, ambient, f);
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return span(rows, m.cols(), m.field());
}

Subspace Subspace::whole(size_t ambient, const FieldSpec& f) {
  Subspace s(ambient, f);
  s.basis_ = Mat::identity(ambient, f);
  for (size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span_sparse(const std::vector<SpVec>& vectors, size_t ambient,
                               const FieldSpec& f) {
  detail::UnionFind uf(ambient);
  for (const auto& v : vectors)
    for (size_t k = 1; k < v.size(); ++k) uf.unite(v[0].first, v[k].first);
  std::map<size_t, std::vector<const SpVec*>> groups;
  for (const auto& v : vectors)
    if (!v.empty()) groups[uf.find(v[0].first)].push_back(&v);
  std::vector<std::pair<size_t, Vec>> rows;  // (pivot, row)
  for (auto& [root, vecs] : groups) {
    std::vector<uint32_t> coords;
    for (const auto* v : vecs)
      for (const auto& e : *v) coords.push_back(e.first);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    std::vector<Vec> local;
    for (const auto* v : vecs) {
      Vec d = zero_vec(coords.size(), f);
      for (const auto& [i, x] : *v)
        d[std::lower_bound(coords.begin(), coords.end(), i) - coords.begin()] = x;
      local.push_back(std::move(d));
    }
    std::vector<size_t> piv;
    auto r = detail::rref_rows(std::move(local), coords.size(), f, piv);
    for (size_t i = 0; i < r.size(); ++i) {
      Vec g = zero_vec(ambient, f);
      for (size_t j = 0; j < coords.size(); ++j) g[coords[j]] = r[i][j];
      rows.emplace_back(coords[piv[i]], std::move(g));
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Subspace s(ambient, f);
  std::vector<Vec> r;
  for (auto& [p, v] : rows) {
    s.pivots_.push_back(p);
    r.push_back(std::move(v));
  }
  s.basis_ = Mat::from_rows(r, ambient, f);
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "reduce: vector length");
  Vec w = v;
  for (size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (size_t j = pivots_[i]; j < ambient_; ++j) {
      const Scalar& b = basis_(i, j);
      if (!b.is_zero()) w[j] -= c * b;
    }
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return cz::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw Error(Errc::AmbientMismatch, "contains");
  for (size_t i = 0; i < w.dim(); ++i)
    if (!contains(w.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  for (size_t p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Coordinatizer::Coordinatizer(const std::vector<Vec>& vectors, size_t ambient, const FieldSpec& f)
    : count_(vectors.size()) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error(Errc::ShapeMismatch, "Coordinatizer");
    Vec r = vectors[i];
    r.resize(ambient + count_, Scalar::zero(f));
    r[ambient + i] = Scalar::one(f);
    rows.push_back(std::move(r));
  }
  std::vector<size_t> piv;
  auto red = detail::rref_rows(std::move(rows), ambient + count_, f, piv);
  std::vector<Vec> left;
  transform_ = Mat(red.size(), count_, f);
  for (size_t r = 0; r < red.size(); ++r) {
    if (piv[r] >= ambient) throw Error(Errc::InvalidInput, "Coordinatizer: dependent vectors");
    left.emplace_back(red[r].begin(), red[r].begin() + ambient);
    for (size_t i = 0; i < count_; ++i) transform_(r, i) = red[r][ambient + i];
  }
  span_ = Subspace::span(left, ambient, f);
}

std::optional<Vec> Coordinatizer::coordinates(const Vec& v) const {
  auto c = span_.coordinates(v);
  if (!c) return std::nullopt;
  Vec out = zero_vec(count_, span_.field());
  for (size_t r = 0; r < c->size(); ++r) {
    if ((*c)[r].is_zero()) continue;
    for (size_t i = 0; i < count_; ++i)
      if (!transform_(r, i).is_zero()) out[i] += (*c)[r] * transform_(r, i);
  }
  return out;
}

Subspace kernel(const Mat& m) {
  Rref r = rref(m);
  std::vector<Vec> rows;
  for (size_t i = 0; i < r.rank; ++i) rows.push_back(r.r.row(i));
  auto null = detail::nullspace_from_rref(rows, r.pivots, m.cols(), m.field());
  return Subspace::span(null, m.cols(), m.field());
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(Errc::ShapeMismatch, "solve: right-hand side");
  Mat aug = Mat::hstack({m, Mat::from_cols({b}, m.rows(), m.field())});
  Rref r = rref(aug);
  Vec x = zero_vec(m.cols(), m.field());
  for (size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;
    x[r.pivots[i]] = r.r(i, m.cols());
  }
  return x;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::AmbientMismatch, "sum");
  auto vs = u.basis_vectors();
  auto ws = w.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return Subspace::span(vs, u.ambient_dim(), u.field());
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::AmbientMismatch, "intersect");
  const FieldSpec& f = u.field();
  if (u.dim() == 0 || w.dim() == 0) return Subspace(u.ambient_dim(), f);
  // Columns u_1..u_k, -w_1..-w_l; a kernel vector (a, b) gives sum a_i u_i.
  Mat m = Mat::hstack({u.basis().transpose(), w.basis().transpose().scaled(-Scalar::one(f))});
  Subspace k = kernel(m);
  std::vector<Vec> vs;
  for (size_t i = 0; i < k.dim(); ++i) {
    Vec row = k.basis().row(i);
    Vec a(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(u.dim()));
    vs.push_back(u.basis().transpose() * a);
  }
  return Subspace::span(vs, u.ambient_dim(), f);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

SpMat kron(const SpMat& a, const SpMat& b) {
  std::vector<SpMat::Entry> e;
  for (const auto& x : a.entries())
    for (const auto& y : b.entries())
      e.push_back({static_cast<uint32_t>(x.r * b.rows() + y.r),
                   static_cast<uint32_t>(x.c * b.cols() + y.c), x.v * y.v});
  return SpMat::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), a.field(), std::move(e));
}

// ---------------------------------------------------------------- quotient

QuotientSpace::QuotientSpace(const Subspace& sub) : sub_(sub), pivot_row_(sub.ambient_dim(), -1) {
  for (size_t i = 0; i < sub.pivots().size(); ++i) pivot_row_[sub.pivots()[i]] = static_cast<long>(i);
  for (size_t j = 0; j < sub.ambient_dim(); ++j)
    if (pivot_row_[j] < 0) section_.push_back(j);
}

Vec QuotientSpace::project(const Vec& v) const {
  Vec w = sub_.reduce(v);
  Vec q;
  q.reserve(section_.size());
  for (size_t j : section_) q.push_back(w[j]);
  return q;
}

Vec QuotientSpace::lift(const Vec& q) const {
  if (q.size() != section_.size()) throw Error(Errc::ShapeMismatch, "lift");
  Vec v = zero_vec(ambient_dim(), sub_.field());
  for (size_t i = 0; i < section_.size(); ++i) v[section_[i]] = q[i];
  return v;
}

Mat QuotientSpace::projection_matrix() const {
  std::vector<Vec> cols;
  for (size_t j = 0; j < ambient_dim(); ++j)
    cols.push_back(project(unit_vec(ambient_dim(), j, sub_.field())));
  return Mat::from_cols(cols, dim(), sub_.field());
}

Mat QuotientSpace::section_matrix() const {
  Mat s(ambient_dim(), dim(), sub_.field());
  for (size_t i = 0; i < section_.size(); ++i) s(section_[i], i) = Scalar::one(sub_.field());
  return s;
}

Mat QuotientSpace::induced(const Mat& m) const {
  if (m.rows() != ambient_dim() || m.cols() != ambient_dim())
    throw Error(Errc::ShapeMismatch, "induced: matrix size");
  std::vector<Vec> cols;
  for (size_t j : section_) cols.push_back(project(m.col(j)));
  return Mat::from_cols(cols, dim(), sub_.field());
}

SpMat QuotientSpace::induced(const SpMat& m) const {
  if (m.rows() != ambient_dim() || m.cols() != ambient_dim())
    throw Error(Errc::ShapeMismatch, "induced: matrix size");
  const FieldSpec& f = sub_.field();
  std::vector<Vec> cols(section_.size(), zero_vec(ambient_dim(), f));
  std::vector<long> section_pos(ambient_dim(), -1);
  for (size_t i = 0; i < section_.size(); ++i) section_pos[section_[i]] = static_cast<long>(i);
  for (const auto& x : m.entries())
    if (section_pos[x.c] >= 0) cols[section_pos[x.c]][x.r] = x.v;
  std::vector<SpMat::Entry> e;
  for (size_t j = 0; j < cols.size(); ++j) {
    Vec q = project(cols[j]);
    for (size_t i = 0; i < q.size(); ++i)
      if (!q[i].is_zero()) e.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), q[i]});
  }
  return SpMat::from_triplets(dim(), dim(), f, std::move(e));
}

// ---------------------------------------------------------------- JSON

std::string mat_to_json(const Mat& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["field"] = m.field().name();
  auto entries = nlohmann::json::array();
  for (const auto& x : m.data()) entries.push_back(x.is_zero() ? "0" : x.str());
  j["entries"] = entries;
  return j.dump();
}

Mat mat_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    FieldSpec f = FieldSpec::parse(j.at("field").get<std::string>());
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw Error(Errc::ShapeMismatch, "entries length");
    Mat m(rows, cols, f);
    for (size_t i = 0; i < rows; ++i)
      for (size_t c = 0; c < cols; ++c) {
        const auto& e = entries[i * cols + c];
        m(i, c) = e.is_string() ? Scalar::parse(e.get<std::string>(), f)
                                : Scalar(f, e.get<long>());
      }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace cz
