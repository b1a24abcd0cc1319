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

// Brauer action on symplectic tensor space and the Schur algebra commutant.

#include "centralizer/spsw.hpp"

#include <cstdlib>
#include <json.hpp>
#include <map>

namespace cz::spsw {

namespace br = cz::brauer;

SymplecticSpace::SymplecticSpace(int m) : m_(m) {
  if (m < 1) throw Error(Errc::InvalidInput, "m must be positive");
}

int SymplecticSpace::epsilon(size_t i, size_t j) const {
  if (j != dual_index(i)) return 0;
  return i < j ? 1 : -1;
}

Mat SymplecticSpace::form(const FieldSpec& f) const {
  Mat g(dim(), dim(), f);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) g(i, j) = Scalar(f, static_cast<long>(epsilon(i, j)));
  return g;
}

TensorSpace::TensorSpace(int m, int n) : space_(m), n_(n), dim_(1) {
  if (n < 1) throw Error(Errc::InvalidInput, "n must be positive");
  for (int k = 0; k < n; ++k) {
    if (dim_ > (size_t{1} << 40) / space_.dim()) throw Error(Errc::CapExceeded, "tensor space too large");
    dim_ *= space_.dim();
  }
}

std::vector<size_t> TensorSpace::word(size_t index) const {
  std::vector<size_t> w(static_cast<size_t>(n_));
  for (size_t k = w.size(); k-- > 0;) {
    w[k] = index % space_.dim();
    index /= space_.dim();
  }
  return w;
}

size_t TensorSpace::index(const std::vector<size_t>& word) const {
  size_t x = 0;
  for (size_t letter : word) x = x * space_.dim() + letter;
  return x;
}

size_t dimension_cap() {
  if (const char* env = std::getenv("CENTRALIZER_LAB_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 4096;
}

void check_cap(const TensorSpace& t) {
  if (t.dim() > dimension_cap())
    throw Error(Errc::CapExceeded, "(2m)^n = " + std::to_string(t.dim()) + " exceeds the dimension cap " +
                                       std::to_string(dimension_cap()));
}

// ------------------------------------------------------------ action

SpMat action_matrix(const br::Letter& l, const TensorSpace& t, const FieldSpec& f) {
  if (l.i < 1 || l.i >= t.n()) throw Error(Errc::SizeMismatch, "generator index out of range for n");
  const SymplecticSpace& v = t.space();
  const size_t j = static_cast<size_t>(l.i - 1);
  std::vector<SpMat::Entry> entries;
  for (size_t x = 0; x < t.dim(); ++x) {
    auto w = t.word(x);
    if (l.kind == 's') {
      std::swap(w[j], w[j + 1]);
      entries.push_back({static_cast<uint32_t>(t.index(w)), static_cast<uint32_t>(x), Scalar(f, -1L)});
    } else {
      int eps = v.epsilon(w[j], w[j + 1]);
      if (eps == 0) continue;
      // eps * sum_k v_k^* (x) v_k in positions j, j+1.
      for (size_t k = 0; k < v.dim(); ++k) {
        w[j] = v.dual_index(k);
        w[j + 1] = k;
        entries.push_back({static_cast<uint32_t>(t.index(w)), static_cast<uint32_t>(x),
                           Scalar(f, static_cast<long>(eps * v.dual_sign(k)))});
      }
    }
  }
  return SpMat::from_triplets(t.dim(), t.dim(), f, std::move(entries));
}

namespace {

class ActionCache {
 public:
  ActionCache(const TensorSpace& t, const FieldSpec& f) : t_(t), f_(f) {
    for (int i = 1; i < t.n(); ++i) {
      s_.push_back(action_matrix(br::Letter{'s', i}, t, f));
      e_.push_back(action_matrix(br::Letter{'e', i}, t, f));
    }
  }
  SpMat word(const br::Word& w) const {
    SpMat out = SpMat::identity(t_.dim(), f_);
    for (const auto& l : w) {
      if (l.i < 1 || l.i >= t_.n()) throw Error(Errc::SizeMismatch, "generator index out of range for n");
      const SpMat& g = (l.kind == 's' ? s_ : e_)[static_cast<size_t>(l.i - 1)];
      out = g * out;
    }
    return out;
  }
  SpMat diagram(const br::Diagram& d, const std::map<br::Diagram, br::Word>& words) const {
    auto it = words.find(d);
    if (it == words.end()) throw Error(Errc::InvalidInput, "diagram without factorization");
    return word(it->second);
  }
  const std::vector<SpMat>& s() const { return s_; }
  const std::vector<SpMat>& e() const { return e_; }

 private:
  const TensorSpace& t_;
  FieldSpec f_;
  std::vector<SpMat> s_, e_;
};

std::vector<SpVec> columns(const SpMat& m) {
  std::vector<SpVec> cols(m.cols());
  for (const auto& e : m.entries()) cols[e.c].emplace_back(e.r, e.v);
  std::vector<SpVec> out;
  for (auto& c : cols)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

std::vector<SpVec> rows(const SpMat& m) {
  std::vector<SpVec> rs(m.rows());
  for (const auto& e : m.entries()) rs[e.r].emplace_back(e.c, e.v);
  std::vector<SpVec> out;
  for (auto& r : rs)
    if (!r.empty()) out.push_back(std::move(r));
  return out;
}

// Diagrams spanning B^(f) together with their action matrices.
std::vector<SpMat> ideal_matrices(const TensorSpace& t, int f, const FieldSpec& field) {
  ActionCache cache(t, field);
  auto words = br::factorizations(t.n(), true);
  auto ideal = br::ideal_Bf(t.n(), f, t.m(), field);
  std::vector<SpMat> out;
  for (const auto& d : ideal.diagrams) out.push_back(cache.diagram(d, words));
  return out;
}

Subspace ideal_image(const TensorSpace& t, int f, const FieldSpec& field) {
  if (f == 0) return Subspace::whole(t.dim(), field);
  std::vector<SpVec> span;
  for (const auto& m : ideal_matrices(t, f, field))
    for (auto& c : columns(m)) span.push_back(std::move(c));
  return Subspace::span_sparse(span, t.dim(), field);
}

// {x : x B^(f) = 0}; B^(f) = 0 past floor(n/2).
Subspace ideal_annihilator(const TensorSpace& t, int f, const FieldSpec& field) {
  if (f == 0) return Subspace(t.dim(), field);
  if (f > t.n() / 2) return Subspace::whole(t.dim(), field);
  std::vector<SpVec> eqs;
  for (const auto& m : ideal_matrices(t, f, field))
    for (auto& r : rows(m)) eqs.push_back(std::move(r));
  return Subspace::span_sparse(nullspace_sparse(t.dim(), eqs, field), t.dim(), field);
}

bool commutes(const SpMat& a, const SpMat& b) { return a * b == b * a; }

}  // namespace

SpMat action_matrix(const br::Word& w, const TensorSpace& t, const FieldSpec& f) {
  return ActionCache(t, f).word(w);
}

SpMat action_matrix(const br::Diagram& d, const TensorSpace& t, const FieldSpec& f, bool append_right) {
  if (d.n() != t.n()) throw Error(Errc::SizeMismatch, "diagram and tensor space disagree on n");
  return ActionCache(t, f).diagram(d, br::factorizations(t.n(), append_right));
}

std::vector<SpMat> generator_matrices(const TensorSpace& t, const FieldSpec& f) {
  ActionCache cache(t, f);
  std::vector<SpMat> out = cache.s();
  out.insert(out.end(), cache.e().begin(), cache.e().end());
  return out;
}

std::vector<SpMat> weight_projections(const TensorSpace& t, const FieldSpec& f) {
  const size_t m = static_cast<size_t>(t.m());
  std::map<std::vector<long>, std::vector<size_t>> spaces;
  for (size_t x = 0; x < t.dim(); ++x) {
    std::vector<long> wt(m, 0);
    for (size_t letter : t.word(x)) {
      if (letter < m) {
        ++wt[letter];
      } else {
        --wt[t.space().dual_index(letter)];
      }
    }
    spaces[wt].push_back(x);
  }
  std::vector<SpMat> out;
  for (const auto& [wt, idx] : spaces) {
    std::vector<SpMat::Entry> e;
    for (size_t x : idx) e.push_back({static_cast<uint32_t>(x), static_cast<uint32_t>(x), Scalar::one(f)});
    out.push_back(SpMat::from_triplets(t.dim(), t.dim(), f, std::move(e)));
  }
  return out;
}

RelationCheck representation_is_homomorphism_check(int m, int n, const FieldSpec& f) {
  TensorSpace t(m, n);
  check_cap(t);
  ActionCache cache(t, f);
  Scalar delta = br::delta_scalar(-2L * m, f);
  RelationCheck r;
  for (const auto& rel : br::defining_relations(n)) {
    SpMat rhs = cache.word(rel.rhs);
    for (int k = 0; k < rel.delta_power; ++k) rhs = rhs.scaled(delta);
    ++r.checked;
    if (cache.word(rel.lhs) != rhs) r.failures.push_back(rel.name + ": " + br::word_str(rel.lhs));
  }
  return r;
}

bool factorization_agreement(int m, int n, const FieldSpec& f) {
  TensorSpace t(m, n);
  check_cap(t);
  ActionCache cache(t, f);
  auto right = br::factorizations(n, true);
  auto left = br::factorizations(n, false);
  for (const auto& d : br::enumerate_diagrams(n))
    if (cache.diagram(d, right) != cache.diagram(d, left)) return false;
  return true;
}

// ------------------------------------------------------------ Schur algebra

MatrixAlgebra SchurAlgebra::as_matrix_algebra() const { return {space.dim(), field, basis, weights}; }

SchurAlgebra schur_algebra(int m, int n, const FieldSpec& f) {
  TensorSpace t(m, n);
  check_cap(t);
  SchurAlgebra s{t, f, generator_matrices(t, f), weight_projections(t, f), {}};
  s.basis = commutant(s.generators, t.dim(), f);
  return s;
}

PhiRank phi_injectivity_check(int m, int n, const FieldSpec& f) {
  TensorSpace t(m, n);
  check_cap(t);
  ActionCache cache(t, f);
  auto words = br::factorizations(n, true);
  std::vector<SpVec> flat;
  for (const auto& d : br::enumerate_diagrams(n)) flat.push_back(cache.diagram(d, words).flatten());
  PhiRank r;
  r.diagrams = flat.size();
  r.rank = Subspace::span_sparse(flat, t.dim() * t.dim(), f).dim();
  r.injective = r.rank == r.diagrams;
  return r;
}

// ------------------------------------------------------------ subquotients

Subquotients subquotient_spaces(int m, int n, int f, const FieldSpec& field) {
  if (f < 0 || f > n / 2) throw Error(Errc::InvalidInput, "f must lie in [0, floor(n/2)]");
  TensorSpace t(m, n);
  check_cap(t);
  Subquotients s;
  s.f = f;
  s.w = ideal_image(t, f, field);
  for (const auto& g : generator_matrices(t, field))
    for (const auto& v : s.w.basis_vectors())
      if (!s.w.contains(g * v)) throw Error(Errc::AssertionFailed, "W_f is not stable under the Brauer action");
  s.q = QuotientSpace(s.w);
  s.h_star = ideal_annihilator(t, f, field);
  s.harmonic = intersect(s.w, ideal_annihilator(t, f + 1, field));
  return s;
}

size_t layer_dimension(int m, int n, int f, const FieldSpec& field) {
  if (f < 0 || f > n / 2) throw Error(Errc::InvalidInput, "f must lie in [0, floor(n/2)]");
  TensorSpace t(m, n);
  check_cap(t);
  size_t next = f + 1 > n / 2 ? 0 : ideal_image(t, f + 1, field).dim();
  return ideal_image(t, f, field).dim() - next;
}

void require_char_bound(int m, int n, int f, const FieldSpec& field) {
  uint64_t p = field.characteristic();
  uint64_t bound = static_cast<uint64_t>(std::min(n - f + m, n));
  if (p != 0 && p <= bound)
    throw Error(Errc::CharTooSmall, "needs char K > min(n - f + m, n) = " + std::to_string(bound));
}

DirectSumCheck check_direct_sum_decomposition(int m, int n, int f, const FieldSpec& field) {
  require_char_bound(m, n, f, field);
  auto s = subquotient_spaces(m, n, f, field);
  DirectSumCheck r;
  r.dim_w = s.w.dim();
  r.dim_h = s.h_star.dim();
  r.dim_intersection = intersect(s.w, s.h_star).dim();
  r.total = s.w.ambient_dim();
  r.holds = r.dim_intersection == 0 && r.dim_w + r.dim_h == r.total;
  return r;
}

// ------------------------------------------------------------ quotient duality

std::string QuotientDualityReport::to_json() const {
  nlohmann::json j;
  j["m"] = m;
  j["n"] = n;
  j["f"] = f;
  j["field"] = field;
  j["dim_tensor_space"] = dim_tensor;
  j["dim_schur_algebra"] = dim_schur;
  j["dim_w_f"] = dim_w;
  j["dim_q_f"] = dim_q;
  j["dim_image"] = dim_image;
  j["dim_commutant"] = dim_commutant;
  j["image_in_commutant"] = image_in_commutant;
  j["surjective"] = surjective;
  j["double_centralizer"] = {{"dim_a", dcp.dim_a}, {"dim_a1", dcp.dim_a1}, {"dim_a2", dcp.dim_a2},
                             {"bijective", dcp.bijective}};
  j["dominant_dimension"] = {{"r", domdim.r}, {"s", domdim.s}, {"dim_kernel_epsilon", domdim.dim_kernel_eps},
                             {"composite_zero", domdim.composite_zero}, {"exact", domdim.holds}};
  j["pass"] = pass;
  return j.dump(1);
}

QuotientDualityReport check_quotient_duality(int m, int n, int f, const FieldSpec& field) {
  if (f < 1 || f > n / 2) throw Error(Errc::InvalidInput, "f must lie in [1, floor(n/2)]");
  require_char_bound(m, n, f, field);
  QuotientDualityReport r;
  r.m = m;
  r.n = n;
  r.f = f;
  r.field = field.name();
  SchurAlgebra s = schur_algebra(m, n, field);
  r.dim_tensor = s.space.dim();
  r.dim_schur = s.dim();
  Subspace w = ideal_image(s.space, f, field);
  QuotientSpace q(w);
  r.dim_w = w.dim();
  r.dim_q = q.dim();

  std::vector<SpMat> gens, weights;
  for (const auto& g : s.generators) gens.push_back(q.induced(g));
  for (const auto& p : s.weights) {
    SpMat x = q.induced(p);
    if (!x.is_zero()) weights.push_back(x);
  }
  std::vector<SpVec> image_flat;
  r.image_in_commutant = true;
  for (const auto& b : s.basis) {
    SpMat x = q.induced(b);
    image_flat.push_back(x.flatten());
    for (const auto& g : gens)
      if (!commutes(x, g)) r.image_in_commutant = false;
  }
  Subspace image = Subspace::span_sparse(image_flat, r.dim_q * r.dim_q, field);
  r.dim_image = image.dim();

  r.dim_commutant = commutant(gens, r.dim_q, field).size();
  r.surjective = r.image_in_commutant && r.dim_image == r.dim_commutant;

  MatrixAlgebra sf{r.dim_q, field, {}, weights};
  for (const auto& v : image.basis_vectors()) sf.basis.push_back(SpMat::unflatten(to_sparse(v), r.dim_q, r.dim_q, field));
  r.dcp = matrix_double_centralizer(sf);
  r.domdim = matrix_dominant_dimension(sf, r.dcp.a1_basis);
  r.pass = r.surjective && r.dcp.bijective && r.domdim.holds;
  return r;
}

}  // namespace cz::spsw
