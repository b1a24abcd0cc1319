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

// Module constructions, Hom spaces and summand bookkeeping.

#include <random>

#include "centralizer/fdalg.hpp"
#include "internal.hpp"

namespace cz {

Mat LeftModule::act(const Vec& a) const {
  Mat out(dim, dim, field());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out = out + action[i].scaled(a[i]);
  return out;
}

bool LeftModule::is_valid() const {
  const Algebra& a = *algebra;
  if (action.size() != a.dim()) return false;
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim) return false;
  if (act(a.unit()) != Mat::identity(dim, field())) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (action[i] * action[j] != act(a.product(i, j))) return false;
  return true;
}

LeftModule regular_module(const AlgebraPtr& a) {
  LeftModule m;
  m.algebra = a;
  m.dim = a->dim();
  for (size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->left_mult(i));
  return m;
}

LeftModule zero_module(const AlgebraPtr& a) {
  LeftModule m;
  m.algebra = a;
  m.action.assign(a->dim(), Mat(0, 0, a->field()));
  return m;
}

LeftModule make_module(const AlgebraPtr& a, std::vector<Mat> action) {
  LeftModule m;
  m.algebra = a;
  m.dim = action.empty() ? 0 : action[0].rows();
  m.action = std::move(action);
  if (!m.is_valid()) throw Error(Errc::InvalidInput, "action matrices do not define a module");
  return m;
}

LeftModule direct_sum(const std::vector<LeftModule>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidInput, "direct_sum of nothing");
  LeftModule m;
  m.algebra = parts[0].algebra;
  for (const auto& p : parts) {
    detail::require_same_algebra(*m.algebra, *p.algebra);
    m.dim += p.dim;
    if (p.blocks.empty()) {
      if (p.dim) m.blocks.push_back(p.dim);
    } else {
      m.blocks.insert(m.blocks.end(), p.blocks.begin(), p.blocks.end());
    }
  }
  for (size_t i = 0; i < m.algebra->dim(); ++i) {
    std::vector<Mat> bs;
    for (const auto& p : parts) bs.push_back(p.action[i]);
    m.action.push_back(Mat::direct_sum(bs, m.field()));
  }
  return m;
}

LeftModule power(const LeftModule& m, size_t r) {
  if (r == 0) return zero_module(m.algebra);
  return direct_sum(std::vector<LeftModule>(r, m));
}

bool is_submodule(const LeftModule& m, const Subspace& s) {
  for (const auto& b : s.basis_vectors())
    for (const auto& x : m.action)
      if (!s.contains(x * b)) return false;
  return true;
}

SubmoduleResult submodule(const LeftModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim) throw Error(Errc::AmbientMismatch, "submodule");
  auto basis = s.basis_vectors();
  SubmoduleResult out;
  out.inclusion = Mat::from_cols(basis, m.dim, m.field());
  out.module.algebra = m.algebra;
  out.module.dim = s.dim();
  for (const auto& x : m.action) {
    std::vector<Vec> cols;
    for (const auto& b : basis) {
      auto c = s.coordinates(x * b);
      if (!c) throw Error(Errc::InvalidInput, "subspace is not a submodule");
      cols.push_back(*c);
    }
    out.module.action.push_back(Mat::from_cols(cols, s.dim(), m.field()));
  }
  return out;
}

QuotientResult quotient(const LeftModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim) throw Error(Errc::AmbientMismatch, "quotient");
  if (!is_submodule(m, s)) throw Error(Errc::InvalidInput, "quotient by a non-submodule");
  QuotientResult out;
  out.space = QuotientSpace(s);
  out.projection = out.space.projection_matrix();
  out.module.algebra = m.algebra;
  out.module.dim = out.space.dim();
  for (const auto& x : m.action) out.module.action.push_back(out.space.induced(x));
  return out;
}

Subspace generated_submodule(const LeftModule& m, const std::vector<Vec>& vs) {
  std::vector<Vec> span;
  for (const auto& v : vs)
    for (const auto& x : m.action) span.push_back(x * v);
  return Subspace::span(span, m.dim, m.field());
}

Subspace module_radical(const LeftModule& m, const Subspace& alg_radical) {
  std::vector<Vec> span;
  for (const auto& j : alg_radical.basis_vectors()) {
    Mat a = m.act(j);
    for (size_t c = 0; c < m.dim; ++c) span.push_back(a.col(c));
  }
  return Subspace::span(span, m.dim, m.field());
}

Subspace module_socle(const LeftModule& m, const Subspace& alg_radical) {
  std::vector<Mat> blocks;
  for (const auto& j : alg_radical.basis_vectors()) blocks.push_back(m.act(j));
  if (blocks.empty()) return Subspace::whole(m.dim, m.field());
  return kernel(Mat::vstack(blocks));
}

LeftModule dual_module(const LeftModule& m, const AntiInvolution& star) {
  detail::require_same_algebra(*m.algebra, *star.algebra);
  LeftModule d;
  d.algebra = m.algebra;
  d.dim = m.dim;
  for (size_t i = 0; i < m.algebra->dim(); ++i)
    d.action.push_back(m.act(star.matrix.col(i)).transpose());
  return d;
}

std::vector<Mat> hom_basis(const LeftModule& m, const LeftModule& n) {
  detail::require_same_algebra(*m.algebra, *n.algebra);
  if (m.dim == 0 || n.dim == 0) return {};
  auto src = detail::to_sparse_all(m.action);
  auto dst = detail::to_sparse_all(n.action);
  std::vector<Mat> out;
  for (const auto& x : intertwiners(src, dst, m.dim, n.dim, m.field())) out.push_back(x.to_dense());
  return out;
}

std::vector<ModMap> hom_space(const LeftModule& m, const LeftModule& n) {
  auto ms = std::make_shared<const LeftModule>(m);
  auto ns = std::make_shared<const LeftModule>(n);
  std::vector<ModMap> out;
  for (auto& f : hom_basis(m, n)) out.push_back({ms, ns, std::move(f)});
  return out;
}

bool is_module_map(const LeftModule& m, const LeftModule& n, const Mat& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (size_t i = 0; i < m.action.size(); ++i)
    if (f * m.action[i] != n.action[i] * f) return false;
  return true;
}

Subspace trace_submodule(const LeftModule& m, const LeftModule& n) {
  std::vector<Vec> span;
  for (const auto& f : hom_basis(m, n))
    for (size_t c = 0; c < f.cols(); ++c) span.push_back(f.col(c));
  return Subspace::span(span, n.dim, n.field());
}

std::optional<Mat> find_isomorphism(const LeftModule& m, const LeftModule& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Mat(0, 0, m.field());
  auto basis = hom_basis(m, n);
  if (basis.empty()) return std::nullopt;
  std::mt19937 rng(20260415);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Mat f(n.dim, m.dim, m.field());
    for (const auto& b : basis) f = f + b.scaled(Scalar(m.field(), coeff(rng)));
    if (rank(f) == m.dim) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const LeftModule& m, const LeftModule& n) {
  return find_isomorphism(m, n).has_value();
}

namespace {

// Kernel of the trace form (x, y) -> tr(xy) on a list of matrices, which is
// the radical of the algebra they span when the representation is faithful
// and char K is 0 or exceeds the matrix size.
size_t matrix_radical_dim(const std::vector<Mat>& basis, size_t n, const FieldSpec& f) {
  if (f.characteristic() != 0 && f.characteristic() <= n)
    throw Error(Errc::CharTooSmall, "trace-form radical needs char 0 or char > module dimension");
  Mat g(basis.size(), basis.size(), f);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a; b < basis.size(); ++b) {
      Scalar t = Scalar::zero(f);
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
          if (!basis[a](i, k).is_zero() && !basis[b](k, i).is_zero())
            t += basis[a](i, k) * basis[b](k, i);
      g(a, b) = t;
      g(b, a) = t;
    }
  return basis.size() - rank(g);
}

Scalar trace(const Mat& m) {
  Scalar t = Scalar::zero(m.field());
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

size_t endomorphism_top_dim(const LeftModule& m) {
  auto basis = hom_basis(m, m);
  return basis.size() - matrix_radical_dim(basis, m.dim, m.field());
}

bool is_indecomposable(const LeftModule& m) { return m.dim > 0 && endomorphism_top_dim(m) == 1; }

size_t summand_multiplicity(const LeftModule& m, const LeftModule& x) {
  const FieldSpec& f = m.field();
  if (x.dim == 0) throw Error(Errc::InvalidInput, "multiplicity of the zero module");
  Scalar dx(f, static_cast<long>(x.dim));
  if (dx.is_zero()) throw Error(Errc::CharTooSmall, "char divides the summand dimension");
  auto into = hom_basis(x, m);
  auto out = hom_basis(m, x);
  if (into.empty() || out.empty()) return 0;
  Mat pairing(into.size(), out.size(), f);
  for (size_t a = 0; a < into.size(); ++a)
    for (size_t b = 0; b < out.size(); ++b) pairing(a, b) = trace(out[b] * into[a]) / dx;
  return rank(pairing);
}

EndomorphismAlgebra endomorphism_algebra(const LeftModule& m) {
  EndomorphismAlgebra e;
  e.basis = hom_basis(m, m);
  e.algebra = Algebra::from_matrices(e.basis, "End");
  e.module.algebra = e.algebra;
  e.module.dim = m.dim;
  e.module.action = e.basis;
  return e;
}

bool is_faithful(const LeftModule& m) {
  if (m.dim == 0) return m.algebra->dim() == 0;
  std::vector<Vec> rows;
  for (const auto& x : m.action) rows.push_back(x.flatten());
  return Subspace::span(rows, m.dim * m.dim, m.field()).dim() == m.algebra->dim();
}

}  // namespace cz
