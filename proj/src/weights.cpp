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

// Type C_m weights: dominance, the sets Lambda_f^+ and the dot action.

#include <cstdlib>

#include "centralizer/spsw.hpp"

namespace cz::spsw {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "weights of different rank");
}

long total(const Weight& w) {
  long s = 0;
  for (long x : w) s += x;
  return s;
}

void extend(long remaining, long cap, size_t slots, Weight& cur, std::vector<Weight>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (long x = std::min(remaining, cap); x >= 0; --x) {
    if (x * static_cast<long>(slots) < remaining) break;
    cur.push_back(x);
    extend(remaining - x, x, slots - 1, cur, out);
    cur.pop_back();
  }
}

// Sizes n - 2r for r in [lo, hi].
std::vector<Weight> weights_by_r(int m, int n, int lo, int hi) {
  std::vector<Weight> out;
  for (int r = lo; r <= hi; ++r)
    for (auto& w : partitions_with_parts(n - 2L * r, m)) out.push_back(std::move(w));
  return out;
}

bool in_lambda_f_complement(const Weight& w, int n, int f) {
  if (!is_dominant(w)) return false;
  long s = total(w);
  if (s > n || (n - s) % 2 != 0) return false;
  return (n - s) / 2 < f;
}

}  // namespace

bool is_dominant(const Weight& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
  }
  return true;
}

bool dominance_leq(const Weight& l, const Weight& mu) {
  require_same_rank(l, mu);
  const size_t m = l.size();
  if (m == 0) return true;
  // mu - l = sum_{i<m} c_i (e_i - e_{i+1}) + c_m 2 e_m gives
  // c_j = d_1 + ... + d_j for j < m and c_m = (d_1 + ... + d_m) / 2.
  long partial = 0;
  for (size_t j = 0; j + 1 < m; ++j) {
    partial += mu[j] - l[j];
    if (partial < 0) return false;
  }
  partial += mu[m - 1] - l[m - 1];
  return partial >= 0 && partial % 2 == 0;
}

std::vector<Weight> partitions_with_parts(long total_size, int m) {
  std::vector<Weight> out;
  if (total_size < 0 || m < 1) return out;
  Weight cur;
  extend(total_size, total_size, static_cast<size_t>(m), cur, out);
  return out;
}

std::vector<Weight> dominant_weights(int m, int n) { return weights_by_r(m, n, 0, n / 2); }

std::vector<Weight> lambda_f_plus(int m, int n, int f) { return weights_by_r(m, n, f, n / 2); }

std::vector<Weight> lambda_f_complement(int m, int n, int f) { return weights_by_r(m, n, 0, f - 1); }

Weight Root::vector(int m) const {
  Weight v(static_cast<size_t>(m), 0);
  switch (kind) {
    case Kind::Difference:
      v[i] = 1;
      v[j] = -1;
      break;
    case Kind::Sum:
      v[i] = 1;
      v[j] = 1;
      break;
    case Kind::Long:
      v[i] = 2;
      break;
  }
  return v;
}

std::string Root::str() const {
  std::string a = "e" + std::to_string(i + 1), b = "e" + std::to_string(j + 1);
  switch (kind) {
    case Kind::Difference:
      return a + "-" + b;
    case Kind::Sum:
      return a + "+" + b;
    case Kind::Long:
      break;
  }
  return "2" + a;
}

std::vector<Root> positive_roots(int m) {
  std::vector<Root> out;
  const size_t mm = static_cast<size_t>(m);
  for (size_t i = 0; i < mm; ++i)
    for (size_t j = i + 1; j < mm; ++j) out.push_back({Root::Kind::Difference, i, j});
  for (size_t i = 0; i < mm; ++i)
    for (size_t j = i + 1; j < mm; ++j) out.push_back({Root::Kind::Sum, i, j});
  for (size_t i = 0; i < mm; ++i) out.push_back({Root::Kind::Long, i, i});
  return out;
}

Weight rho(int m) {
  Weight r;
  for (int i = 1; i <= m; ++i) r.push_back(m - i + 1);
  return r;
}

long coroot_pairing(const Weight& w, const Root& beta) {
  switch (beta.kind) {
    case Root::Kind::Difference:
      return w.at(beta.i) - w.at(beta.j);
    case Root::Kind::Sum:
      return w.at(beta.i) + w.at(beta.j);
    case Root::Kind::Long:
      break;
  }
  return w.at(beta.i);
}

Weight dot_action(const Weight& mu, const Root& beta, long k, long p) {
  const int m = static_cast<int>(mu.size());
  Weight shifted = mu;
  Weight r = rho(m);
  for (size_t i = 0; i < mu.size(); ++i) shifted[i] += r[i];
  long coeff = -coroot_pairing(shifted, beta) + k * p;
  Weight b = beta.vector(m);
  Weight out = mu;
  for (size_t i = 0; i < mu.size(); ++i) out[i] += coeff * b[i];
  return out;
}

SeparationResult cross_block_separation_check(int m, int n, int f, long p) {
  if (p < 2) throw Error(Errc::InvalidInput, "p must be a prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(Errc::InvalidInput, "p must be a prime");
  SeparationResult r;
  Weight rh = rho(m);
  for (const auto& mu : lambda_f_plus(m, n, f)) {
    Weight shifted = mu;
    for (size_t i = 0; i < mu.size(); ++i) shifted[i] += rh[i];
    for (const auto& beta : positive_roots(m)) {
      long c = std::labs(coroot_pairing(shifted, beta));
      long bound = (c + static_cast<long>(n) * p + p - 1) / p;
      for (long k = -bound; k <= bound; ++k) {
        ++r.reflections_checked;
        Weight nu = dot_action(mu, beta, k, p);
        if (nu != mu && in_lambda_f_complement(nu, n, f) && dominance_leq(mu, nu)) {
          r.separated = false;
          if (!r.violation) r.violation = std::make_pair(mu, nu);
        }
      }
    }
  }
  return r;
}

OrderCheck size_order_check(int m, int n) {
  OrderCheck r;
  for (int a = 0; a <= n / 2; ++a)
    for (int b = a + 1; b <= n / 2; ++b)
      for (const auto& l : partitions_with_parts(n - 2L * a, m))
        for (const auto& mu : partitions_with_parts(n - 2L * b, m)) {
          ++r.pairs;
          if (dominance_leq(l, mu)) ++r.violations;
        }
  return r;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace cz::spsw
