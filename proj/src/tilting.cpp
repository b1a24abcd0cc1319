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

// Tilting modules, the Ringel dual, the minimal faithful tilting module and
// the theorem checkers.

#include <json.hpp>
#include <random>

#include "centralizer/strat.hpp"
#include "internal.hpp"

namespace cz {

namespace {

Mat random_combination(const std::vector<Mat>& basis, std::mt19937& rng, const FieldSpec& f) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  Mat out(basis[0].rows(), basis[0].cols(), f);
  for (const auto& b : basis) out = out + b.scaled(Scalar(f, coeff(rng)));
  return out;
}

// Is there an injective map M -> T^r? Forward selection gives an upper
// bound on the least r; random combinations cover the remaining cases.
bool embeds_in_power(const LeftModule& m, const LeftModule& t, size_t r) {
  if (m.dim == 0) return true;
  if (r == 0) return false;
  Embedding e;
  try {
    e = embed_into_add(m, t);
  } catch (const Error& err) {
    if (err.code() != Errc::NotEmbeddable) throw;
    return false;
  }
  if (e.r <= r) return true;
  auto homs = hom_basis(m, t);
  std::mt19937 rng(20260415);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Mat> parts;
    for (size_t i = 0; i < r; ++i) parts.push_back(random_combination(homs, rng, m.field()));
    if (rank(Mat::vstack(parts)) == m.dim) return true;
  }
  return false;
}

// Is there a surjective map T^r -> N?
bool surjects_from_power(const LeftModule& t, const LeftModule& n, size_t r) {
  if (n.dim == 0) return true;
  if (r == 0) return false;
  auto homs = hom_basis(t, n);
  std::vector<Mat> keep;
  Subspace covered(n.dim, n.field());
  for (const auto& g : homs) {
    Subspace next = sum(covered, image(g));
    if (next.dim() > covered.dim()) {
      keep.push_back(g);
      covered = next;
    }
  }
  if (covered.dim() != n.dim) return false;
  if (keep.size() <= r) return true;
  std::mt19937 rng(20260415);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Mat> parts;
    for (size_t i = 0; i < r; ++i) parts.push_back(random_combination(homs, rng, n.field()));
    if (rank(Mat::hstack(parts)) == n.dim) return true;
  }
  return false;
}

Mat block_identity(size_t total, size_t start, size_t len, const FieldSpec& f) {
  Mat p(total, total, f);
  for (size_t i = 0; i < len; ++i) p(start + i, start + i) = Scalar::one(f);
  return p;
}

bool all_ok(const std::vector<CheckItem>& items) {
  for (const auto& i : items)
    if (!i.ok) return false;
  return true;
}

}  // namespace

// ------------------------------------------------------------ tilting

LeftModule tilting_indecomposable(const StratifiedAlgebra& s, size_t l, size_t max_steps) {
  if (!s.quasi_hereditary) throw Error(Errc::InvalidInput, "tilting construction needs a quasi-hereditary algebra");
  if (max_steps == 0) max_steps = 4 * s.size() + 4;
  LeftModule m = s.standard.at(l);
  for (size_t step = 0;; ++step) {
    std::vector<bool> nonzero(s.size(), false);
    for (size_t mu = 0; mu < s.size(); ++mu) nonzero[mu] = ext1(s, s.standard[mu], m).dim != 0;
    size_t pick = s.size();
    for (size_t mu = 0; mu < s.size() && pick == s.size(); ++mu) {
      if (!nonzero[mu]) continue;
      bool maximal = true;
      for (size_t nu = 0; nu < s.size(); ++nu)
        if (nonzero[nu] && s.above(nu, mu)) maximal = false;
      if (maximal) pick = mu;
    }
    if (pick == s.size()) break;
    if (step >= max_steps) throw Error(Errc::NonTermination, "universal extensions do not stabilise");
    m = universal_extension(s, m, s.standard[pick]);
  }
  if (!has_delta_filtration(s, m)) throw Error(Errc::AssertionFailed, "tilting candidate lacks a Delta-filtration");
  if (!is_indecomposable(m)) throw Error(Errc::AssertionFailed, "tilting candidate is decomposable");
  return m;
}

std::vector<LeftModule> tilting_modules(const StratifiedAlgebra& s) {
  std::vector<LeftModule> out;
  for (size_t l = 0; l < s.size(); ++l) out.push_back(tilting_indecomposable(s, l));
  return out;
}

LeftModule tilting_sum(const std::vector<LeftModule>& tiltings, const std::vector<size_t>& mult) {
  if (tiltings.empty()) throw Error(Errc::InvalidInput, "no tilting modules");
  std::vector<LeftModule> parts;
  for (size_t l = 0; l < tiltings.size() && l < mult.size(); ++l)
    for (size_t k = 0; k < mult[l]; ++k) parts.push_back(tiltings[l]);
  if (parts.empty()) return zero_module(tiltings[0].algebra);
  return direct_sum(parts);
}

std::vector<size_t> tilting_multiplicities(const std::vector<LeftModule>& tiltings, const LeftModule& m) {
  std::vector<size_t> out;
  for (const auto& t : tiltings) out.push_back(m.dim == 0 ? 0 : summand_multiplicity(m, t));
  return out;
}

// ------------------------------------------------------------ Ringel dual

RingelDual ringel_dual(const StratifiedAlgebra& s, const std::vector<LeftModule>& tiltings) {
  RingelDual r;
  size_t offset = 0;
  for (const auto& t : tiltings) {
    r.offsets.push_back(offset);
    offset += t.dim;
  }
  r.characteristic = direct_sum(tiltings);
  r.end = endomorphism_algebra(r.characteristic);
  const FieldSpec& f = s.field();
  const size_t d = r.characteristic.dim;
  std::vector<Vec> flat;
  for (const auto& b : r.end.basis) flat.push_back(b.flatten());
  Coordinatizer coords(flat, d * d, f);
  AlgebraData data;
  data.algebra = r.end.algebra;
  data.labels = s.labels;
  for (size_t l = 0; l < tiltings.size(); ++l)
    data.idempotents.push_back(*coords.coordinates(block_identity(d, r.offsets[l], tiltings[l].dim, f).flatten()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      if (i != j && s.leq[i][j]) data.preorder.emplace_back(j, i);
  r.dual = make_stratified(data);
  return r;
}

LeftModule ringel_functor(const RingelDual& r, const LeftModule& m) {
  auto homs = hom_basis(m, r.characteristic);
  const AlgebraPtr& ra = r.end.algebra;
  if (homs.empty()) return zero_module(ra);
  std::vector<Vec> flat;
  for (const auto& h : homs) flat.push_back(h.flatten());
  Coordinatizer coords(flat, r.characteristic.dim * m.dim, m.field());
  std::vector<Mat> action;
  for (const auto& phi : r.end.basis) {
    std::vector<Vec> cols;
    for (const auto& h : homs) cols.push_back(*coords.coordinates((phi * h).flatten()));
    action.push_back(Mat::from_cols(cols, homs.size(), m.field()));
  }
  return make_module(ra, std::move(action));
}

DoubleRingelCheck check_ringel_dual(const StratifiedAlgebra& s, const RingelDual& r) {
  DoubleRingelCheck c;
  c.projectives_to_tiltings = true;
  for (const auto& p : s.pims)
    if (!is_tilting(r.dual, ringel_functor(r, p))) c.projectives_to_tiltings = false;
  c.characteristic_to_projective =
      is_isomorphic(ringel_functor(r, r.characteristic), regular_module(r.end.algebra));

  // X = Hom_A(A, T~); a acts by f -> f o (x -> x a).
  const Algebra& a = *s.algebra;
  const FieldSpec& f = s.field();
  LeftModule reg = regular_module(s.algebra);
  LeftModule x = ringel_functor(r, reg);
  auto homs = hom_basis(reg, r.characteristic);
  std::vector<Vec> flat;
  for (const auto& h : homs) flat.push_back(h.flatten());
  Coordinatizer coords(flat, r.characteristic.dim * a.dim(), f);
  std::vector<Mat> phi;
  for (size_t i = 0; i < a.dim(); ++i) {
    Mat ra = a.right_mult(a.basis_vec(i));
    std::vector<Vec> cols;
    for (const auto& h : homs) cols.push_back(*coords.coordinates((h * ra).flatten()));
    phi.push_back(Mat::from_cols(cols, homs.size(), f));
  }
  bool linear = true;
  for (const auto& p : phi)
    if (!is_module_map(x, x, p)) linear = false;
  bool multiplicative = true;
  for (size_t i = 0; i < a.dim() && multiplicative; ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Vec c = a.product(i, j);
      Mat lhs(x.dim, x.dim, f);
      for (size_t k = 0; k < a.dim(); ++k)
        if (!c[k].is_zero()) lhs = lhs + phi[k].scaled(c[k]);
      if (lhs != phi[i] * phi[j]) {
        multiplicative = false;
        break;
      }
    }
  std::vector<Vec> rows;
  for (const auto& p : phi) rows.push_back(p.flatten());
  size_t image_dim = Subspace::span(rows, x.dim * x.dim, f).dim();
  c.recovers_algebra = linear && multiplicative && image_dim == a.dim() &&
                       hom_basis(x, x).size() == a.dim();
  return c;
}

// ------------------------------------------------------------ minimal tilting

MinimalTilting minimal_dcp_tilting(const StratifiedAlgebra& s, const RingelDual& r,
                                   const std::vector<LeftModule>& tiltings) {
  MinimalTilting out;
  const LeftModule& t = r.end.module;
  Subspace rad = module_radical(t, radical(*r.end.algebra));
  LeftModule top = quotient(t, rad).module;
  std::vector<size_t> mult(s.size(), 0);
  for (size_t l = 0; l < s.size(); ++l)
    if (top.dim > 0 && rank(top.act(r.dual.idempotents[l])) > 0) {
      out.labels.push_back(l);
      mult[l] = 1;
    }
  out.module = tilting_sum(tiltings, mult);
  out.dcp = out.module.dim > 0 && double_centralizer_map(out.module).bijective;
  return out;
}

std::vector<std::vector<size_t>> minimal_dcp_tilting_oracle(const std::vector<LeftModule>& tiltings) {
  const size_t n = tiltings.size();
  std::vector<std::vector<size_t>> found;
  for (size_t k = 1; k <= n && found.empty(); ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<size_t> subset, mult(n, 0);
      for (size_t i = 0; i < n; ++i)
        if (pick[i]) {
          subset.push_back(i);
          mult[i] = 1;
        }
      LeftModule t = tilting_sum(tiltings, mult);
      if (is_faithful(t) && double_centralizer_map(t).bijective) found.push_back(subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return found;
}

// ------------------------------------------------------------ checkers

std::string TheoremReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["instance"] = instance;
  auto items = [](const std::vector<CheckItem>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& i : v) a.push_back({{"name", i.name}, {"ok", i.ok}});
    return a;
  };
  j["hypotheses"] = items(hypotheses);
  j["conclusions"] = items(conclusions);
  j["pass"] = pass;
  return j.dump(1);
}

TheoremReport check_embedding_criterion(const StratifiedAlgebra& s, const LeftModule& t, size_t r,
                                        const std::string& instance) {
  TheoremReport rep;
  rep.theorem = "embedding-criterion";
  rep.instance = instance;
  rep.hypotheses.push_back({"T is tilting", is_tilting(s, t)});
  for (size_t l = 0; l < s.size(); ++l) {
    rep.hypotheses.push_back({"Delta(" + s.labels[l] + ") embeds in T^r", embeds_in_power(s.standard[l], t, r)});
    rep.hypotheses.push_back(
        {"T^r maps onto proper costandard(" + s.labels[l] + ")", surjects_from_power(t, s.proper_costandard[l], r)});
  }
  for (const auto& h : rep.hypotheses)
    if (!h.ok) throw Error(Errc::HypothesisFailed, h.name);
  rep.conclusions.push_back({"T is faithful", is_faithful(t)});
  rep.conclusions.push_back({"double centralizer property", double_centralizer_map(t).bijective});
  rep.pass = all_ok(rep.conclusions);
  return rep;
}

TheoremReport check_faithful_tilting(const StratifiedAlgebra& s, const Duality& d, const LeftModule& t,
                                     const std::string& instance) {
  TheoremReport rep;
  rep.theorem = "faithful-tilting";
  rep.instance = instance;
  rep.hypotheses.push_back({"quasi-hereditary", s.quasi_hereditary});
  rep.hypotheses.push_back({"duality fixes idempotents", true});
  rep.hypotheses.push_back({"T is tilting", is_tilting(s, t)});
  rep.hypotheses.push_back({"T is faithful", is_faithful(t)});
  for (const auto& h : rep.hypotheses)
    if (!h.ok) throw Error(Errc::HypothesisFailed, h.name);
  (void)d;

  LeftModule reg = regular_module(s.algebra);
  Embedding emb = embed_into_add(reg, t);
  auto coker = quotient(emb.target, image(emb.map));
  rep.conclusions.push_back({"A embeds in T^r", rank(emb.map) == reg.dim});
  rep.conclusions.push_back({"T^r / A has a Delta-filtration", has_delta_filtration(s, coker.module)});
  for (size_t l = 0; l < s.size(); ++l) {
    size_t m = s.costandard[l].dim;
    rep.conclusions.push_back(
        {"T^m maps onto costandard(" + s.labels[l] + ")", surjects_from_power(t, s.costandard[l], m)});
    rep.conclusions.push_back({"Delta(" + s.labels[l] + ") embeds in T^m", embeds_in_power(s.standard[l], t, m)});
  }
  rep.conclusions.push_back(
      {"restriction Hom(T^r, T) -> Hom(A, T) is onto", is_left_approximation(emb.map, reg, emb.target, t)});
  rep.conclusions.push_back({"double centralizer property", double_centralizer_map(t).bijective});
  rep.pass = all_ok(rep.conclusions);
  return rep;
}

SaturationResult is_saturated_tilting(const StratifiedAlgebra& s, const std::vector<LeftModule>& tiltings,
                                      const LeftModule& t) {
  SaturationResult r;
  auto mult = tilting_multiplicities(tiltings, t);
  std::vector<bool> in(s.size(), false);
  for (size_t l = 0; l < s.size(); ++l)
    if (mult[l] > 0) {
      r.support.push_back(l);
      in[l] = true;
    }
  r.saturated = true;
  for (size_t l = 0; l < s.size(); ++l)
    for (size_t mu = 0; mu < s.size(); ++mu)
      if (in[l] && s.leq[mu][l] && !in[mu]) r.saturated = false;
  r.faithful = is_faithful(t);
  if (r.faithful) r.dcp = double_centralizer_map(t).bijective;
  return r;
}

}  // namespace cz
