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

#include "centralizer/fdalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "internal.hpp"

namespace cz {

// ------------------------------------------------------------ algebras

AlgebraPtr Algebra::make(const FieldSpec& f, std::vector<std::vector<Vec>> mult, Vec unit,
                         std::string name) {
  const size_t d = mult.size();
  if (d == 0) throw Error(Errc::InvalidInput, "algebra of dimension 0");
  if (unit.size() != d) throw Error(Errc::ShapeMismatch, "unit vector length");
  std::shared_ptr<Algebra> a(new Algebra());
  a->dim_ = d;
  a->field_ = f;
  a->unit_ = std::move(unit);
  a->name_ = std::move(name);
  for (size_t i = 0; i < d; ++i) {
    if (mult[i].size() != d) throw Error(Errc::ShapeMismatch, "structure constants");
    for (const auto& v : mult[i])
      if (v.size() != d) throw Error(Errc::ShapeMismatch, "structure constants");
    a->left_.push_back(Mat::from_cols(mult[i], d, f));
  }
  // Associativity: L_i L_j = L_{e_i e_j}.
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (a->left_[i] * a->left_[j] != a->left_mult(a->product(i, j)))
        throw Error(Errc::InvalidInput, "structure constants are not associative");
  Mat id = Mat::identity(d, f);
  if (a->left_mult(a->unit_) != id || a->right_mult(a->unit_) != id)
    throw Error(Errc::InvalidInput, "unit is not a two-sided identity");
  return a;
}

AlgebraPtr Algebra::from_matrices(const std::vector<Mat>& basis, std::string name) {
  if (basis.empty()) throw Error(Errc::InvalidInput, "empty matrix basis");
  const FieldSpec f = basis[0].field();
  const size_t n = basis[0].rows();
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flatten());
  Coordinatizer coords(flat, n * n, f);
  auto coord = [&](const Mat& m) {
    auto c = coords.coordinates(m.flatten());
    if (!c) throw Error(Errc::InvalidInput, "matrix basis not closed under products");
    return *c;
  };
  std::shared_ptr<Algebra> a(new Algebra());
  a->dim_ = basis.size();
  a->field_ = f;
  a->name_ = std::move(name);
  a->unit_ = coord(Mat::identity(n, f));
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<Vec> cols;
    for (size_t j = 0; j < basis.size(); ++j) cols.push_back(coord(basis[i] * basis[j]));
    a->left_.push_back(Mat::from_cols(cols, basis.size(), f));
  }
  return a;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const { return left_mult(x) * y; }

Mat Algebra::left_mult(const Vec& x) const {
  Mat out(dim_, dim_, field_);
  for (size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) out = out + left_[i].scaled(x[i]);
  return out;
}

Mat Algebra::right_mult(const Vec& x) const {
  // Column j is e_j x = sum_i x_i e_j e_i.
  Mat out(dim_, dim_, field_);
  for (size_t j = 0; j < dim_; ++j) {
    Vec col = zero_vec(dim_, field_);
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t k = 0; k < dim_; ++k) col[k] += x[i] * left_[j](k, i);
    }
    for (size_t k = 0; k < dim_; ++k) out(k, j) = col[k];
  }
  return out;
}

AlgebraPtr opposite(const Algebra& a) {
  std::vector<std::vector<Vec>> mult(a.dim(), std::vector<Vec>(a.dim()));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) mult[i][j] = a.product(j, i);
  return Algebra::make(a.field(), std::move(mult), a.unit(), a.name() + "^op");
}

Subspace radical(const Algebra& a) {
  const FieldSpec& f = a.field();
  if (f.characteristic() != 0 && f.characteristic() <= a.dim())
    throw Error(Errc::CharTooSmall, "trace-form radical needs char 0 or char > dim A");
  Vec t = zero_vec(a.dim(), f);
  for (size_t k = 0; k < a.dim(); ++k)
    for (size_t i = 0; i < a.dim(); ++i) t[k] += a.left_mult(k)(i, i);
  // tr(L_{e_i e_j}) = sum_k c_ij^k tr(L_k).
  Mat g(a.dim(), a.dim(), f);
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Vec p = a.product(i, j);
      Scalar s = Scalar::zero(f);
      for (size_t k = 0; k < a.dim(); ++k)
        if (!p[k].is_zero()) s += p[k] * t[k];
      g(i, j) = s;
    }
  return kernel(g);
}

bool AntiInvolution::is_valid() const {
  const Algebra& a = *algebra;
  if (matrix.rows() != a.dim() || matrix.cols() != a.dim()) return false;
  if (matrix * matrix != Mat::identity(a.dim(), a.field())) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (matrix * a.product(i, j) != a.mul(matrix.col(j), matrix.col(i))) return false;
  return true;
}

// ------------------------------------------------------------ centralizers

namespace {

// Coordinate projections onto the recorded summands, when the action is
// block diagonal with respect to them.
std::vector<SpMat> block_projections(const LeftModule& t) {
  if (t.blocks.size() < 2) return {};
  std::vector<size_t> owner;
  for (size_t b = 0; b < t.blocks.size(); ++b) owner.insert(owner.end(), t.blocks[b], b);
  for (const auto& x : t.action)
    for (size_t i = 0; i < t.dim; ++i)
      for (size_t j = 0; j < t.dim; ++j)
        if (owner[i] != owner[j] && !x(i, j).is_zero()) return {};
  std::vector<SpMat> out;
  size_t off = 0;
  for (size_t b : t.blocks) {
    std::vector<SpMat::Entry> e;
    for (size_t i = off; i < off + b; ++i)
      e.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(i), Scalar::one(t.field())});
    out.push_back(SpMat::from_triplets(t.dim, t.dim, t.field(), std::move(e)));
    off += b;
  }
  return out;
}

}  // namespace

DcpResult double_centralizer_map(const LeftModule& t) {
  const FieldSpec& f = t.field();
  DcpResult r;
  r.dim_a = t.algebra->dim();
  r.a1_basis = hom_basis(t, t);
  r.dim_a1 = r.a1_basis.size();
  std::vector<SpMat> gens = block_projections(t);
  size_t seed = gens.size();
  for (const auto& x : r.a1_basis) gens.push_back(SpMat::from_dense(x));
  if (seed == 0) seed = gens.size();
  for (const auto& x : commutant(gens, t.dim, f, seed)) r.a2_basis.push_back(x.to_dense());
  r.dim_a2 = r.a2_basis.size();

  std::vector<Vec> flat;
  for (const auto& b : r.a2_basis) flat.push_back(b.flatten());
  Coordinatizer coords(flat, t.dim * t.dim, f);
  r.map.matrix = Mat(r.dim_a2, r.dim_a, f);
  for (size_t i = 0; i < r.dim_a; ++i) {
    auto c = coords.coordinates(t.action[i].flatten());
    if (!c) throw Error(Errc::AssertionFailed, "image of A not inside A''");
    for (size_t k = 0; k < r.dim_a2; ++k) r.map.matrix(k, i) = (*c)[k];
  }
  r.map.source = t.algebra;
  r.rank = rank(r.map.matrix);
  r.injective = r.rank == r.dim_a;
  r.surjective = r.rank == r.dim_a2;
  r.bijective = r.injective && r.surjective;
  return r;
}

AlgebraPtr target_algebra(const DcpResult& r) { return Algebra::from_matrices(r.a2_basis, "A''"); }

bool is_left_approximation(const Mat& f, const LeftModule& m, const LeftModule& c,
                           const LeftModule& t) {
  if (!is_module_map(m, c, f)) throw Error(Errc::InvalidInput, "approximation candidate is not a module map");
  size_t target = hom_basis(m, t).size();
  std::vector<Vec> comp;
  for (const auto& g : hom_basis(c, t)) comp.push_back((g * f).flatten());
  return Subspace::span(comp, t.dim * m.dim, m.field()).dim() == target;
}

namespace {

// k stacked components, each a fixed pseudo-random combination of `homs`.
Mat combine(const std::vector<Mat>& homs, size_t k, std::mt19937_64& rng) {
  const FieldSpec& f = homs.front().field();
  std::vector<Mat> comps;
  for (size_t i = 0; i < k; ++i) {
    Mat c(homs.front().rows(), homs.front().cols(), f);
    for (const auto& h : homs) c = c + h.scaled(Scalar(f, static_cast<long>(rng() % 7) - 3));
    comps.push_back(c);
  }
  return Mat::vstack(comps);
}

// Smallest k < `limit` for which one of a few combinations satisfies `ok`.
std::optional<std::pair<size_t, Mat>> shrink(const std::vector<Mat>& homs, size_t limit,
                                             const std::function<bool(const Mat&, size_t)>& ok) {
  std::mt19937_64 rng(0x5eed);
  for (size_t k = 1; k < limit; ++k)
    for (int attempt = 0; attempt < 4; ++attempt) {
      Mat d = combine(homs, k, rng);
      if (ok(d, k)) return std::make_pair(k, d);
    }
  return std::nullopt;
}

}  // namespace

Embedding embed_into_add(const LeftModule& m, const LeftModule& t) {
  auto homs = hom_basis(m, t);
  Embedding e;
  if (m.dim == 0) {
    e.map = Mat(0, 0, m.field());
    e.target = zero_module(m.algebra);
    return e;
  }
  // Forward selection: keep a map only if it is nonzero on the common kernel
  // of the maps kept so far.
  std::vector<Mat> keep;
  Subspace common = Subspace::whole(m.dim, m.field());
  for (const auto& g : homs) {
    if (common.dim() == 0) break;
    Mat basis = Mat::from_cols(common.basis_vectors(), m.dim, m.field());
    Mat restricted = g * basis;
    if (restricted.is_zero()) continue;
    keep.push_back(g);
    std::vector<Vec> ker;
    for (const auto& c : kernel(restricted).basis_vectors()) ker.push_back(basis * c);
    common = Subspace::span(ker, m.dim, m.field());
  }
  if (common.dim() != 0) throw Error(Errc::NotEmbeddable, "common kernel of Hom(M, T) is nonzero");
  e.r = keep.size();
  e.map = Mat::vstack(keep);
  if (auto s = shrink(homs, e.r, [&](const Mat& d, size_t) { return rank(d) == m.dim; })) {
    e.r = s->first;
    e.map = s->second;
  }
  e.target = power(t, e.r);
  return e;
}

DomDimResult dominant_dimension_at_least_2(const LeftModule& t) {
  const FieldSpec& f = t.field();
  DomDimResult r;
  LeftModule reg = regular_module(t.algebra);
  r.dim_a = reg.dim;
  auto homs = hom_basis(reg, t);
  r.r = homs.size();
  if (homs.empty()) {
    r.failed_stage = 1;
    return r;
  }
  r.delta = Mat::vstack(homs);
  r.delta_injective = rank(r.delta) == reg.dim;
  LeftModule tr = power(t, r.r);
  r.delta_is_approximation = is_left_approximation(r.delta, reg, tr, t);
  if (!r.delta_injective || !r.delta_is_approximation) {
    r.failed_stage = 1;
    return r;
  }
  if (auto s = shrink(homs, r.r, [&](const Mat& d, size_t k) {
        return rank(d) == reg.dim && is_left_approximation(d, reg, power(t, k), t);
      })) {
    r.r = s->first;
    r.delta = s->second;
    tr = power(t, r.r);
  }
  QuotientResult coker = quotient(tr, image(r.delta));
  Embedding emb;
  try {
    emb = embed_into_add(coker.module, t);
  } catch (const Error& e) {
    if (e.code() != Errc::NotEmbeddable) throw;
    r.failed_stage = 2;
    return r;
  }
  r.s = emb.r;
  r.epsilon = coker.module.dim == 0 ? Mat(0, tr.dim, f) : emb.map * coker.projection;
  r.composite_zero = (r.epsilon * r.delta).is_zero();
  r.dim_kernel_eps = r.epsilon.rows() == 0 ? tr.dim : kernel(r.epsilon).dim();
  r.exact = r.composite_zero && r.dim_kernel_eps == r.dim_a;
  r.holds = r.exact;
  if (!r.holds) r.failed_stage = 2;
  return r;
}

// ------------------------------------------------------------ matrix route

MatrixDcpResult matrix_double_centralizer(const MatrixAlgebra& a) {
  MatrixDcpResult r;
  r.dim_a = a.basis.size();
  std::vector<SpMat> gens = a.seed;
  gens.insert(gens.end(), a.basis.begin(), a.basis.end());
  size_t seed = a.seed.empty() ? gens.size() : a.seed.size();
  r.a1_basis = commutant(gens, a.n, a.field, seed);
  r.dim_a1 = r.a1_basis.size();
  r.dim_a2 = commutant(r.a1_basis, a.n, a.field).size();
  r.bijective = r.dim_a2 == r.dim_a;
  return r;
}

MatrixDomDimResult matrix_dominant_dimension(const MatrixAlgebra& a,
                                             const std::vector<SpMat>& a1_basis) {
  const FieldSpec& f = a.field;
  const size_t n = a.n;
  const size_t na1 = a1_basis.size();
  MatrixDomDimResult r;
  r.dim_a = a.basis.size();
  r.r = n;
  // Phi: coefficients c_{j,k} (variable j * na1 + k) with
  // sum_j sum_k c_{j,k} a1_k e_j = 0, one equation per output coordinate.
  std::vector<std::map<uint32_t, Scalar>> rows(n);
  for (size_t k = 0; k < na1; ++k)
    for (const auto& e : a1_basis[k].entries())
      rows[e.r].emplace(static_cast<uint32_t>(e.c * na1 + k), e.v);
  std::vector<SpVec> eqs;
  for (auto& row : rows)
    if (!row.empty()) eqs.emplace_back(row.begin(), row.end());
  auto phi = nullspace_sparse(n * na1, eqs, f);
  r.s = phi.size();

  // epsilon(X)_p = sum_j phi_j X e_j with X[w][j] as variable w * n + j.
  std::vector<std::vector<std::pair<uint32_t, Scalar>>> by_row(na1);
  std::vector<std::vector<SpMat::Entry>> ent(na1);
  for (size_t k = 0; k < na1; ++k) ent[k] = a1_basis[k].entries();
  std::vector<SpVec> eps_eqs;
  for (const auto& p : phi) {
    std::map<uint32_t, std::map<uint32_t, Scalar>> acc;  // output row -> variable -> coeff
    for (const auto& [var, c] : p) {
      size_t j = var / na1, k = var % na1;
      for (const auto& e : ent[k]) {
        auto& slot = acc[e.r];
        auto [it, fresh] = slot.try_emplace(static_cast<uint32_t>(e.c * n + j), Scalar::zero(f));
        it->second += c * e.v;
      }
    }
    for (auto& [u, vars] : acc) {
      SpVec eq;
      for (auto& [v, x] : vars)
        if (!x.is_zero()) eq.emplace_back(v, x);
      if (!eq.empty()) eps_eqs.push_back(std::move(eq));
    }
  }
  r.dim_kernel_eps = nullspace_sparse(n * n, eps_eqs, f).size();

  // epsilon(delta(b)) = (sum_j phi_j b e_j) for every basis element b.
  r.composite_zero = true;
  for (const auto& b : a.basis) {
    // cols[k][j] = column j of a1_k b.
    std::vector<std::vector<SpVec>> cols(na1, std::vector<SpVec>(n));
    for (size_t k = 0; k < na1; ++k) {
      SpMat prod = a1_basis[k] * b;
      for (const auto& e : prod.entries()) cols[k][e.c].emplace_back(e.r, e.v);
    }
    for (const auto& p : phi) {
      Vec out = zero_vec(n, f);
      for (const auto& [var, c] : p)
        for (const auto& [row, x] : cols[var % na1][var / na1]) out[row] += c * x;
      if (!is_zero(out)) r.composite_zero = false;
    }
  }
  r.holds = r.composite_zero && r.dim_kernel_eps == r.dim_a;
  return r;
}

AlgebraPtr to_algebra(const MatrixAlgebra& a) {
  std::vector<Mat> dense;
  for (const auto& b : a.basis) dense.push_back(b.to_dense());
  return Algebra::from_matrices(dense);
}

// ------------------------------------------------------------ projectives

namespace {

LeftModule left_ideal_module(const AlgebraPtr& a, const Vec& e) {
  LeftModule reg = regular_module(a);
  return submodule(reg, image(a->right_mult(e))).module;
}

}  // namespace

FullyFaithfulResult fully_faithful_on_projectives(const AntiInvolution& star,
                                                  const std::vector<Vec>& idempotents) {
  const AlgebraPtr& a = star.algebra;
  const FieldSpec& f = a->field();
  if (!star.is_valid()) throw Error(Errc::InvalidInput, "star is not an anti-involution");
  if (idempotents.empty()) throw Error(Errc::BadIdempotent, "no idempotents");
  std::vector<LeftModule> parts;
  for (const auto& e : idempotents) {
    if (is_zero(e) || a->mul(e, e) != e) throw Error(Errc::BadIdempotent, "not a nonzero idempotent");
    if (star.apply(e) != e) throw Error(Errc::StarNotFixing, "idempotent not fixed by star");
    parts.push_back(left_ideal_module(a, e));
  }
  LeftModule m = direct_sum(parts);
  FullyFaithfulResult res;
  res.faithful = is_faithful(m);
  res.dcp = double_centralizer_map(m).surjective;

  LeftModule reg = regular_module(a);
  auto h = hom_basis(m, reg);     // Hom_A(M, A)
  auto e = hom_basis(m, m);       // End_A(M), acting on h by precomposition
  auto endo_a = hom_basis(reg, reg);
  std::vector<Vec> flat;
  for (const auto& x : h) flat.push_back(x.flatten());
  Coordinatizer coords(flat, a->dim() * m.dim, f);
  auto as_matrix = [&](auto&& op) {
    std::vector<Vec> cols;
    for (const auto& x : h) {
      auto c = coords.coordinates(op(x).flatten());
      if (!c) throw Error(Errc::AssertionFailed, "composition left Hom_A(M, A)");
      cols.push_back(*c);
    }
    return Mat::from_cols(cols, h.size(), f);
  };
  std::vector<SpMat> right_action;
  for (const auto& y : e) right_action.push_back(SpMat::from_dense(as_matrix([&](const Mat& x) { return x * y; })));
  size_t hom_e_dim = h.empty() ? 0 : commutant(right_action, h.size(), f).size();
  std::vector<Vec> theta;
  for (const auto& g : endo_a) theta.push_back(as_matrix([&](const Mat& x) { return g * x; }).flatten());
  size_t theta_rank = Subspace::span(theta, h.size() * h.size(), f).dim();
  res.fully_faithful = theta_rank == endo_a.size() && theta_rank == hom_e_dim;
  res.agree = !res.faithful || res.dcp == res.fully_faithful;
  return res;
}

// ------------------------------------------------------------ splitness

SplitnessReport check_split(const AlgebraPtr& a, const std::vector<Vec>& idempotents) {
  SplitnessReport rep;
  Subspace j = radical(*a);
  rep.radical_dim = j.dim();
  if (idempotents.empty()) {
    rep.detail = "no idempotents supplied; splitness not verified";
    return rep;
  }
  rep.checked = true;
  std::vector<LeftModule> tops;
  for (const auto& e : idempotents) {
    if (is_zero(e) || a->mul(e, e) != e) throw Error(Errc::BadIdempotent, "not a nonzero idempotent");
    LeftModule p = left_ideal_module(a, e);
    tops.push_back(quotient(p, module_radical(p, j)).module);
  }
  size_t total = 0;
  rep.split = true;
  for (size_t i = 0; i < tops.size(); ++i) {
    rep.simple_dims.push_back(tops[i].dim);
    total += tops[i].dim * tops[i].dim;
    if (hom_basis(tops[i], tops[i]).size() != 1) {
      rep.split = false;
      rep.detail = "End of top " + std::to_string(i) + " is not K";
    }
    for (size_t k = 0; k < i; ++k)
      if (!hom_basis(tops[k], tops[i]).empty()) {
        rep.split = false;
        rep.detail = "tops " + std::to_string(k) + " and " + std::to_string(i) + " are isomorphic";
      }
  }
  if (rep.split && total != a->dim() - j.dim()) {
    rep.split = false;
    rep.detail = "simple tops do not exhaust A / rad A";
  }
  return rep;
}

}  // namespace cz
