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

// Standard-type modules, Ext^1 and filtration tests.

#include "centralizer/strat.hpp"

#include "internal.hpp"

namespace cz {

namespace {

// Largest submodule U of M with (e A) U = 0 for every e in `es`; these are
// the modules without composition factors L(l) for the listed e_l.
Subspace annihilated_part(const LeftModule& m, const std::vector<Vec>& es) {
  if (es.empty() || m.dim == 0) return Subspace::whole(m.dim, m.field());
  std::vector<Mat> rows;
  for (const auto& e : es) {
    Mat ea = m.act(e);
    for (const auto& x : m.action) rows.push_back(ea * x);
  }
  return kernel(Mat::vstack(rows));
}

// I(l) = D(e A) with a acting by the transpose of right multiplication.
LeftModule injective_hull(const AlgebraPtr& a, const Vec& e) {
  Subspace w = image(a->left_mult(e));
  auto basis = w.basis_vectors();
  std::vector<Mat> action;
  for (size_t i = 0; i < a->dim(); ++i) {
    Mat r = a->right_mult(a->basis_vec(i));
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(*w.coordinates(r * b));
    action.push_back(Mat::from_cols(cols, w.dim(), a->field()).transpose());
  }
  return make_module(a, std::move(action));
}

std::vector<std::vector<bool>> closure(size_t n, const std::vector<std::pair<size_t, size_t>>& pairs) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(Errc::IndexOutOfRange, "preorder pair refers to a missing label");
    leq[x][y] = true;
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

bool standardly_stratified(const StratifiedAlgebra& s) {
  for (size_t l = 0; l < s.size(); ++l) {
    // Kernel of P(l) -> Delta(l) filtered by Delta(mu), mu > l.
    std::vector<Vec> higher;
    for (size_t mu = 0; mu < s.size(); ++mu)
      if (s.above(mu, l)) higher.push_back(s.idempotents[mu]);
    std::vector<Vec> span;
    for (const auto& e : higher)
      for (const auto& v : trace_of_projective(s.pims[l], e).basis_vectors()) span.push_back(v);
    Subspace k = Subspace::span(span, s.pims[l].dim, s.field());
    auto witness = delta_filtration_witness(s, submodule(s.pims[l], k).module);
    if (!witness) return false;
    for (const auto& layer : *witness)
      if (!s.above(layer.label, l)) return false;
    // Kernel of Delta(l) -> L(l) has factors L(mu), mu <= l.
    auto factors = composition_factors(s, s.standard[l]);
    for (size_t mu = 0; mu < s.size(); ++mu) {
      size_t extra = factors[mu] - (mu == l ? 1 : 0);
      if (extra > 0 && !s.leq[mu][l]) return false;
    }
  }
  return true;
}

}  // namespace

Subspace trace_of_projective(const LeftModule& n, const Vec& e) {
  Mat ea = n.act(e);
  std::vector<Vec> gens;
  for (size_t c = 0; c < n.dim; ++c) gens.push_back(ea.col(c));
  return generated_submodule(n, gens);
}

size_t composition_multiplicity(const StratifiedAlgebra& s, const LeftModule& m, size_t l) {
  if (m.dim == 0) return 0;
  return rank(m.act(s.idempotents.at(l)));
}

std::vector<size_t> composition_factors(const StratifiedAlgebra& s, const LeftModule& m) {
  std::vector<size_t> out;
  for (size_t l = 0; l < s.size(); ++l) out.push_back(composition_multiplicity(s, m, l));
  return out;
}

std::vector<size_t> top_multiplicities(const StratifiedAlgebra& s, const LeftModule& m) {
  if (m.dim == 0) return std::vector<size_t>(s.size(), 0);
  return composition_factors(s, quotient(m, module_radical(m, s.radical)).module);
}

StratifiedAlgebra make_stratified(const AlgebraData& d) {
  StratifiedAlgebra s;
  s.algebra = d.algebra;
  const Algebra& a = *d.algebra;
  const FieldSpec& f = a.field();
  if (d.idempotents.empty()) throw Error(Errc::InvalidInput, "stratified structure needs idempotents");
  s.idempotents = d.idempotents;
  s.labels = d.labels;
  if (s.labels.empty())
    for (size_t i = 0; i < s.idempotents.size(); ++i) s.labels.push_back(std::to_string(i + 1));
  if (s.labels.size() != s.idempotents.size())
    throw Error(Errc::InvalidInput, "one idempotent per label required");
  for (const auto& e : s.idempotents)
    if (e.size() != a.dim() || a.mul(e, e) != e || is_zero(e))
      throw Error(Errc::BadIdempotent, "label idempotent is not a nonzero idempotent");
  auto split = check_split(d.algebra, s.idempotents);
  if (!split.split) throw Error(Errc::NotSplit, split.detail);

  const size_t n = s.size();
  s.leq = closure(n, d.preorder);
  s.partial_order = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && s.leq[i][j] && s.leq[j][i]) s.partial_order = false;
  s.radical = radical(a);

  LeftModule reg = regular_module(d.algebra);
  for (size_t l = 0; l < n; ++l) {
    const Vec& e = s.idempotents[l];
    Subspace ae = image(a.right_mult(e));
    auto sub = submodule(reg, ae);
    s.pims.push_back(sub.module);
    s.pim_inclusions.push_back(sub.inclusion);
    s.pim_generators.push_back(*ae.coordinates(e));
    auto top = quotient(sub.module, module_radical(sub.module, s.radical));
    s.simples.push_back(top.module);
    s.pim_to_top.push_back(top.projection);
    s.injectives.push_back(injective_hull(d.algebra, e));
  }

  for (size_t l = 0; l < n; ++l) {
    std::vector<Vec> strictly_higher, at_least;
    for (size_t mu = 0; mu < n; ++mu) {
      if (s.above(mu, l)) strictly_higher.push_back(s.idempotents[mu]);
      if (s.at_least(mu, l)) at_least.push_back(s.idempotents[mu]);
    }
    const LeftModule& p = s.pims[l];
    // Delta(l) = P(l) / sum_{mu > l} A e_mu P(l).
    std::vector<Vec> span;
    for (const auto& e : strictly_higher)
      for (const auto& v : trace_of_projective(p, e).basis_vectors()) span.push_back(v);
    s.standard.push_back(quotient(p, Subspace::span(span, p.dim, f)).module);
    // Proper standard: P(l) / sum_{mu >= l} A e_mu rad P(l).
    Subspace rad = module_radical(p, s.radical);
    span.clear();
    for (const auto& e : at_least) {
      Mat ea = p.act(e);
      std::vector<Vec> gens;
      for (const auto& v : rad.basis_vectors()) gens.push_back(ea * v);
      for (const auto& v : generated_submodule(p, gens).basis_vectors()) span.push_back(v);
    }
    s.proper_standard.push_back(quotient(p, Subspace::span(span, p.dim, f)).module);
    // Costandard: largest submodule of I(l) without factors mu > l.
    const LeftModule& inj = s.injectives[l];
    s.costandard.push_back(submodule(inj, annihilated_part(inj, strictly_higher)).module);
    // Proper costandard: preimage of the largest submodule of I/soc without
    // factors mu >= l.
    auto top = quotient(inj, module_socle(inj, s.radical));
    std::vector<Vec> pre = top.space.sub().basis_vectors();
    for (const auto& y : annihilated_part(top.module, at_least).basis_vectors())
      pre.push_back(top.space.lift(y));
    s.proper_costandard.push_back(submodule(inj, Subspace::span(pre, inj.dim, f)).module);
  }

  s.standardly_stratified = standardly_stratified(s);
  if (s.standardly_stratified) {
    s.properly_stratified = true;
    for (size_t l = 0; l < n && s.properly_stratified; ++l)
      for (size_t mu = 0; mu < n; ++mu)
        if (ext1(s, s.standard[l], s.costandard[mu]).dim != 0) {
          s.properly_stratified = false;
          break;
        }
    s.quasi_hereditary = s.partial_order;
    for (size_t l = 0; l < n; ++l)
      if (s.standard[l].dim != s.proper_standard[l].dim) s.quasi_hereditary = false;
  }
  return s;
}

// ------------------------------------------------------------ Ext^1

ProjectiveCover projective_cover(const StratifiedAlgebra& s, const LeftModule& m) {
  detail::require_same_algebra(*s.algebra, *m.algebra);
  const FieldSpec& f = s.field();
  ProjectiveCover pc;
  std::vector<Vec> generators;
  Subspace covered = module_radical(m, s.radical);
  for (size_t l = 0; l < s.size(); ++l) {
    for (const auto& v : image(m.act(s.idempotents[l])).basis_vectors()) {
      if (covered.contains(v)) continue;
      covered = sum(covered, Subspace::span({v}, m.dim, f));
      pc.summands.push_back(l);
      generators.push_back(v);
    }
  }
  if (pc.summands.empty()) {
    pc.cover = zero_module(s.algebra);
    pc.map = Mat(m.dim, 0, f);
    pc.syzygy = zero_module(s.algebra);
    pc.syzygy_inclusion = Mat(0, 0, f);
    return pc;
  }
  std::vector<LeftModule> parts;
  std::vector<Mat> blocks;
  for (size_t i = 0; i < pc.summands.size(); ++i) {
    size_t l = pc.summands[i];
    parts.push_back(s.pims[l]);
    const Mat& inc = s.pim_inclusions[l];
    std::vector<Vec> cols;
    for (size_t c = 0; c < inc.cols(); ++c) cols.push_back(m.act(inc.col(c)) * generators[i]);
    blocks.push_back(Mat::from_cols(cols, m.dim, f));
  }
  pc.cover = direct_sum(parts);
  pc.map = Mat::hstack(blocks);
  auto syz = submodule(pc.cover, kernel(pc.map));
  pc.syzygy = syz.module;
  pc.syzygy_inclusion = syz.inclusion;
  return pc;
}

Ext1Result ext1(const StratifiedAlgebra& s, const LeftModule& m, const LeftModule& n) {
  Ext1Result r;
  detail::require_same_algebra(*m.algebra, *n.algebra);
  if (m.dim == 0 || n.dim == 0) return r;
  const FieldSpec& f = s.field();
  r.presentation = projective_cover(s, m);
  const ProjectiveCover& pc = r.presentation;
  if (pc.syzygy.dim == 0) return r;
  auto homs = hom_basis(pc.syzygy, n);
  if (homs.empty()) return r;
  std::vector<Vec> flat;
  for (const auto& h : homs) flat.push_back(h.flatten());
  Coordinatizer coords(flat, n.dim * pc.syzygy.dim, f);

  // Restrictions of maps P_0 -> N: on the summand P(l) the map a -> a v for
  // v in e_l N.
  std::vector<Vec> restricted;
  size_t offset = 0;
  for (size_t i = 0; i < pc.summands.size(); ++i) {
    size_t l = pc.summands[i];
    const Mat& inc = s.pim_inclusions[l];
    for (const auto& v : image(n.act(s.idempotents[l])).basis_vectors()) {
      Mat g(n.dim, pc.cover.dim, f);
      for (size_t c = 0; c < inc.cols(); ++c) {
        Vec col = n.act(inc.col(c)) * v;
        for (size_t row = 0; row < n.dim; ++row) g(row, offset + c) = col[row];
      }
      restricted.push_back(*coords.coordinates((g * pc.syzygy_inclusion).flatten()));
    }
    offset += inc.cols();
  }
  Subspace boundaries = Subspace::span(restricted, homs.size(), f);
  r.dim = homs.size() - boundaries.dim();
  QuotientSpace q(boundaries);
  for (size_t j : q.section()) r.cocycles.push_back(homs[j]);
  return r;
}

LeftModule universal_extension(const StratifiedAlgebra& s, const LeftModule& n, const LeftModule& m) {
  auto e = ext1(s, m, n);
  if (e.dim == 0) return n;
  const FieldSpec& f = s.field();
  const ProjectiveCover& pc = e.presentation;
  std::vector<LeftModule> parts{n};
  for (size_t i = 0; i < e.dim; ++i) parts.push_back(pc.cover);
  LeftModule big = direct_sum(parts);
  std::vector<Vec> rel;
  for (size_t i = 0; i < e.dim; ++i)
    for (size_t w = 0; w < pc.syzygy.dim; ++w) {
      Vec v = zero_vec(big.dim, f);
      Vec cw = e.cocycles[i].col(w);
      Vec iw = pc.syzygy_inclusion.col(w);
      for (size_t r = 0; r < n.dim; ++r) v[r] = cw[r];
      size_t base = n.dim + i * pc.cover.dim;
      for (size_t r = 0; r < pc.cover.dim; ++r) v[base + r] = -iw[r];
      rel.push_back(std::move(v));
    }
  LeftModule out = quotient(big, Subspace::span(rel, big.dim, f)).module;
  out.blocks.clear();
  return out;
}

// ------------------------------------------------------------ filtrations

bool has_delta_filtration(const StratifiedAlgebra& s, const LeftModule& m) {
  for (const auto& nb : s.proper_costandard)
    if (ext1(s, m, nb).dim != 0) return false;
  return true;
}

bool has_proper_nabla_filtration(const StratifiedAlgebra& s, const LeftModule& m) {
  for (const auto& d : s.standard)
    if (ext1(s, d, m).dim != 0) return false;
  return true;
}

bool is_tilting(const StratifiedAlgebra& s, const LeftModule& m) {
  return has_delta_filtration(s, m) && has_proper_nabla_filtration(s, m);
}

std::optional<std::vector<FiltrationLayer>> delta_filtration_witness(const StratifiedAlgebra& s,
                                                                     const LeftModule& m) {
  std::vector<FiltrationLayer> layers;
  LeftModule x = m;
  while (x.dim > 0) {
    auto factors = composition_factors(s, x);
    size_t pick = s.size();
    for (size_t mu = 0; mu < s.size() && pick == s.size(); ++mu) {
      if (factors[mu] == 0) continue;
      bool maximal = true;
      for (size_t nu = 0; nu < s.size(); ++nu)
        if (factors[nu] > 0 && s.above(nu, mu)) maximal = false;
      if (maximal) pick = mu;
    }
    if (pick == s.size()) return std::nullopt;
    const LeftModule& d = s.standard[pick];
    size_t per = composition_multiplicity(s, d, pick);
    if (factors[pick] % per != 0) return std::nullopt;
    size_t k = factors[pick] / per;
    Subspace tr = trace_of_projective(x, s.idempotents[pick]);
    // The trace is a quotient of Delta(mu)^t, t = number of top copies; it
    // is Delta(mu)^k exactly when t = k and the dimensions match.
    auto sub = submodule(x, tr);
    if (tr.dim() != k * d.dim || top_multiplicities(s, sub.module)[pick] != k) return std::nullopt;
    layers.push_back({pick, k});
    x = quotient(x, tr).module;
  }
  return layers;
}

// ------------------------------------------------------------ duality

Duality make_duality(const StratifiedAlgebra& s, const Mat& star) {
  Duality d{AntiInvolution{s.algebra, star}};
  if (star.rows() != s.algebra->dim() || star.cols() != s.algebra->dim() || !d.star.is_valid())
    throw Error(Errc::InvalidInput, "matrix is not an anti-involution");
  for (const auto& e : s.idempotents)
    if (d.star.apply(e) != e) throw Error(Errc::StarNotFixing, "anti-involution moves a label idempotent");
  return d;
}

}  // namespace cz
