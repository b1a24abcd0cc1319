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

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "centralizer/linalg.hpp"
#include "kernels.hpp"

namespace cz {

namespace {

// Solves one coupled block densely and appends its kernel basis.
void solve_component(const std::vector<const SpVec*>& eqs, const std::vector<uint32_t>& vars,
                     const std::vector<bool>& forced, const FieldSpec& f,
                     std::vector<SpVec>& out) {
  auto local = [&](uint32_t v) {
    return static_cast<size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  std::vector<Vec> rows;
  rows.reserve(eqs.size());
  for (const SpVec* e : eqs) {
    Vec r = zero_vec(vars.size(), f);
    for (const auto& [v, x] : *e)
      if (!forced[v]) r[local(v)] += x;
    rows.push_back(std::move(r));
  }
  std::vector<size_t> piv;
  auto r = detail::rref_rows(std::move(rows), vars.size(), f, piv);
  auto null = detail::nullspace_from_rref(r, piv, vars.size(), f);
  for (const auto& v : null) {
    SpVec s;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) s.emplace_back(vars[j], v[j]);
    out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<SpVec> nullspace_sparse(size_t num_vars, const std::vector<SpVec>& equations,
                                    const FieldSpec& f) {
  std::vector<std::vector<uint32_t>> occurs(num_vars);
  std::vector<size_t> live(equations.size(), 0);
  for (size_t e = 0; e < equations.size(); ++e)
    for (const auto& [v, x] : equations[e]) {
      if (v >= num_vars) throw Error(Errc::IndexOutOfRange, "nullspace_sparse: variable index");
      if (x.is_zero()) continue;
      occurs[v].push_back(static_cast<uint32_t>(e));
      ++live[e];
    }
  // A live equation in one unknown forces that unknown to zero.
  std::vector<bool> forced(num_vars, false);
  std::deque<size_t> queue;
  for (size_t e = 0; e < equations.size(); ++e)
    if (live[e] == 1) queue.push_back(e);
  while (!queue.empty()) {
    size_t e = queue.front();
    queue.pop_front();
    if (live[e] != 1) continue;
    for (const auto& [v, x] : equations[e]) {
      if (x.is_zero() || forced[v]) continue;
      forced[v] = true;
      for (uint32_t e2 : occurs[v])
        if (--live[e2] == 1) queue.push_back(e2);
      break;
    }
  }
  detail::UnionFind uf(num_vars);
  std::vector<bool> touched(num_vars, false);
  for (size_t e = 0; e < equations.size(); ++e) {
    if (live[e] == 0) continue;
    long first = -1;
    for (const auto& [v, x] : equations[e]) {
      if (x.is_zero() || forced[v]) continue;
      touched[v] = true;
      if (first < 0)
        first = v;
      else
        uf.unite(first, v);
    }
  }
  std::map<size_t, std::vector<const SpVec*>> comp_eqs;
  for (size_t e = 0; e < equations.size(); ++e) {
    if (live[e] == 0) continue;
    for (const auto& [v, x] : equations[e])
      if (!x.is_zero() && !forced[v]) {
        comp_eqs[uf.find(v)].push_back(&equations[e]);
        break;
      }
  }
  std::map<size_t, std::vector<uint32_t>> comp_vars;
  for (uint32_t v = 0; v < num_vars; ++v)
    if (touched[v]) comp_vars[uf.find(v)].push_back(v);

  std::vector<SpVec> out;
  for (uint32_t v = 0; v < num_vars; ++v)
    if (!touched[v] && !forced[v]) out.push_back({{v, Scalar::one(f)}});
  for (auto& [root, vars] : comp_vars) solve_component(comp_eqs[root], vars, forced, f, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const SpVec& a, const SpVec& b) { return a.front().first < b.front().first; });
  return out;
}

namespace {

std::vector<SpVec> intertwiner_equations(const SpMat& a, const SpMat& b, size_t src_dim,
                                         size_t dst_dim, const FieldSpec& f) {
  // Equation (u, v): sum_w X[u][w] a[w][v] - sum_w b[u][w] X[w][v].
  std::vector<std::vector<std::pair<uint32_t, Scalar>>> a_cols(src_dim), b_rows(dst_dim);
  for (const auto& x : a.entries()) a_cols[x.c].emplace_back(x.r, x.v);
  for (const auto& x : b.entries()) b_rows[x.r].emplace_back(x.c, x.v);
  std::vector<SpVec> eqs;
  std::map<uint32_t, Scalar> acc;
  for (size_t u = 0; u < dst_dim; ++u)
    for (size_t v = 0; v < src_dim; ++v) {
      if (a_cols[v].empty() && b_rows[u].empty()) continue;
      acc.clear();
      for (const auto& [w, x] : a_cols[v]) {
        auto [it, fresh] = acc.try_emplace(static_cast<uint32_t>(u * src_dim + w), Scalar::zero(f));
        it->second += x;
      }
      for (const auto& [w, x] : b_rows[u]) {
        auto [it, fresh] = acc.try_emplace(static_cast<uint32_t>(w * src_dim + v), Scalar::zero(f));
        it->second -= x;
      }
      SpVec e;
      for (auto& [k, x] : acc)
        if (!x.is_zero()) e.emplace_back(k, x);
      if (!e.empty()) eqs.push_back(std::move(e));
    }
  return eqs;
}

}  // namespace

std::vector<SpMat> intertwiners(const std::vector<SpMat>& src, const std::vector<SpMat>& dst,
                                size_t src_dim, size_t dst_dim, const FieldSpec& f, size_t seed) {
  if (src.size() != dst.size()) throw Error(Errc::AlgebraMismatch, "intertwiners: generator count");
  for (size_t i = 0; i < src.size(); ++i)
    if (src[i].rows() != src_dim || src[i].cols() != src_dim || dst[i].rows() != dst_dim ||
        dst[i].cols() != dst_dim)
      throw Error(Errc::ShapeMismatch, "intertwiners: generator shape");
  if (seed == 0 || seed > src.size()) seed = src.size();
  std::vector<SpVec> eqs;
  for (size_t i = 0; i < seed; ++i) {
    auto e = intertwiner_equations(src[i], dst[i], src_dim, dst_dim, f);
    eqs.insert(eqs.end(), std::make_move_iterator(e.begin()), std::make_move_iterator(e.end()));
  }
  std::vector<SpMat> basis;
  for (auto& v : nullspace_sparse(src_dim * dst_dim, eqs, f))
    basis.push_back(SpMat::unflatten(v, dst_dim, src_dim, f));
  for (size_t i = seed; i < src.size() && !basis.empty(); ++i) {
    // Coefficients c with sum_j c_j (Y_j a - b Y_j) = 0.
    std::unordered_map<uint64_t, SpVec> coord_eqs;
    for (size_t j = 0; j < basis.size(); ++j) {
      SpMat c = basis[j] * src[i] - dst[i] * basis[j];
      for (const auto& x : c.entries())
        coord_eqs[static_cast<uint64_t>(x.r) * src_dim + x.c].emplace_back(
            static_cast<uint32_t>(j), x.v);
    }
    if (coord_eqs.empty()) continue;
    std::vector<uint64_t> keys;
    for (const auto& kv : coord_eqs) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    std::vector<SpVec> ceqs;
    for (auto k : keys) ceqs.push_back(std::move(coord_eqs[k]));
    std::vector<SpMat> next;
    for (const auto& c : nullspace_sparse(basis.size(), ceqs, f)) {
      std::vector<SpMat> mats;
      Vec coeffs;
      for (const auto& [j, x] : c) {
        mats.push_back(basis[j]);
        coeffs.push_back(x);
      }
      next.push_back(linear_combination(mats, coeffs));
    }
    basis = std::move(next);
  }
  return basis;
}

std::vector<SpMat> commutant(const std::vector<SpMat>& gens, size_t dim, const FieldSpec& f,
                             size_t seed) {
  return intertwiners(gens, gens, dim, dim, f, seed);
}

}  // namespace cz
