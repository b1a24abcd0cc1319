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

// Symplectic tensor space V^{(x)n} with the right Brauer action, the
// symplectic Schur algebra as a commutant, partially harmonic tensors and
// type C weight combinatorics.
//
// Basis vectors v_0 .. v_{2m-1} are 0-based; i' = 2m-1-i, v_i^* = v_{i'} for
// i < m and -v_{i'} otherwise. A right action x -> x g is stored as the matrix
// G with G x = x g, so a word l_1 ... l_k acts by G_{l_k} ... G_{l_1}.

#ifndef CENTRALIZER_SPSW_HPP_
#define CENTRALIZER_SPSW_HPP_

#include <optional>
#include <string>
#include <vector>

#include "centralizer/brauer.hpp"
#include "centralizer/fdalg.hpp"

namespace cz::spsw {

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int m);
  int m() const { return m_; }
  size_t dim() const { return 2 * static_cast<size_t>(m_); }
  size_t dual_index(size_t i) const { return dim() - 1 - i; }
  int dual_sign(size_t i) const { return i < static_cast<size_t>(m_) ? 1 : -1; }
  // 1 if j = i' and i < j, -1 if j = i' and i > j, else 0.
  int epsilon(size_t i, size_t j) const;
  // Gram matrix <v_i, v_j> = epsilon(i, j).
  Mat form(const FieldSpec& f) const;

 private:
  int m_;
};

class TensorSpace {
 public:
  TensorSpace(int m, int n);
  const SymplecticSpace& space() const { return space_; }
  int m() const { return space_.m(); }
  int n() const { return n_; }
  size_t dim() const { return dim_; }
  // Mixed-radix encoding, first tensor factor most significant.
  std::vector<size_t> word(size_t index) const;
  size_t index(const std::vector<size_t>& word) const;

 private:
  SymplecticSpace space_;
  int n_;
  size_t dim_;
};

// Default 4096, overridden by CENTRALIZER_LAB_DIM_CAP.
size_t dimension_cap();
// Throws CapExceeded.
void check_cap(const TensorSpace& t);

SpMat action_matrix(const brauer::Letter& l, const TensorSpace& t, const FieldSpec& f);
SpMat action_matrix(const brauer::Word& w, const TensorSpace& t, const FieldSpec& f);
// Through the right (append_right) or left factorization of the diagram.
SpMat action_matrix(const brauer::Diagram& d, const TensorSpace& t, const FieldSpec& f,
                    bool append_right = true);
// s_1 .. s_{n-1} followed by e_1 .. e_{n-1}.
std::vector<SpMat> generator_matrices(const TensorSpace& t, const FieldSpec& f);
// Projections onto the torus weight spaces, ordered by weight.
std::vector<SpMat> weight_projections(const TensorSpace& t, const FieldSpec& f);

struct RelationCheck {
  size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// Every defining relation of B_n(-2m) on the action matrices.
RelationCheck representation_is_homomorphism_check(int m, int n, const FieldSpec& f);
// Left and right factorizations give the same matrix for every diagram.
bool factorization_agreement(int m, int n, const FieldSpec& f);

struct SchurAlgebra {
  TensorSpace space;
  FieldSpec field;
  std::vector<SpMat> generators;  // Brauer generators
  std::vector<SpMat> weights;     // weight projections; elements of the algebra
  std::vector<SpMat> basis;       // commutant basis
  size_t dim() const { return basis.size(); }
  MatrixAlgebra as_matrix_algebra() const;
};
// Commutant of the Brauer generators; throws CapExceeded.
SchurAlgebra schur_algebra(int m, int n, const FieldSpec& f);

struct PhiRank {
  size_t rank = 0;
  size_t diagrams = 0;
  bool injective = false;
};
// Rank of the linear map B_n -> End(V^{(x)n}) on the diagram basis.
PhiRank phi_injectivity_check(int m, int n, const FieldSpec& f);

struct Subquotients {
  int f = 0;
  Subspace w;         // V^{(x)n} B^(f)
  QuotientSpace q;    // V^{(x)n} / W_f
  Subspace h_star;    // {x : x B^(f) = 0}
  Subspace harmonic;  // W_f intersected with {x : x B^(f+1) = 0}
};
// 0 <= f <= floor(n/2); W_f is checked to be stable under the generators.
Subquotients subquotient_spaces(int m, int n, int f, const FieldSpec& field);

// dim W_f / W_{f+1}, with W_{floor(n/2)+1} = 0.
size_t layer_dimension(int m, int n, int f, const FieldSpec& field);

// char K = 0 or char K > min(n - f + m, n); otherwise CharTooSmall.
void require_char_bound(int m, int n, int f, const FieldSpec& field);

struct DirectSumCheck {
  bool holds = false;
  size_t dim_w = 0, dim_h = 0, dim_intersection = 0, total = 0;
};
// W_f and H_f^* intersect in 0 and their dimensions add to (2m)^n.
DirectSumCheck check_direct_sum_decomposition(int m, int n, int f, const FieldSpec& field);

struct QuotientDualityReport {
  int m = 0, n = 0, f = 0;
  std::string field;
  size_t dim_tensor = 0, dim_schur = 0, dim_w = 0, dim_q = 0;
  size_t dim_image = 0;      // pi_f(S^sy) inside End(Q_f)
  size_t dim_commutant = 0;  // End over the induced Brauer action
  bool image_in_commutant = false;
  bool surjective = false;   // image equals commutant
  MatrixDcpResult dcp;
  MatrixDomDimResult domdim;
  bool pass = false;
  std::string to_json() const;
};
// Restriction S^sy -> End(Q_f) hits the full commutant of the induced
// Brauer action, and 0 -> S_f -> Q_f^r -> Q_f^s is exact.
QuotientDualityReport check_quotient_duality(int m, int n, int f, const FieldSpec& field);

// ------------------------------------------------------------ weights

using Weight = std::vector<long>;

bool is_dominant(const Weight& w);
// l <= mu iff mu - l is a non-negative integer combination of
// e_i - e_{i+1} and 2 e_m.
bool dominance_leq(const Weight& l, const Weight& mu);
// Dominant weights with entries summing to `total`, largest first.
std::vector<Weight> partitions_with_parts(long total, int m);
// Lambda^+ for V^{(x)n}.
std::vector<Weight> dominant_weights(int m, int n);
// Dominant weights of size n - 2r with r >= f, and the rest.
std::vector<Weight> lambda_f_plus(int m, int n, int f);
std::vector<Weight> lambda_f_complement(int m, int n, int f);

struct Root {
  enum class Kind { Difference, Sum, Long } kind;  // e_i - e_j, e_i + e_j, 2 e_i
  size_t i = 0, j = 0;                             // 0-based, i < j
  Weight vector(int m) const;
  std::string str() const;
};
std::vector<Root> positive_roots(int m);
Weight rho(int m);
// <w, beta^vee>.
long coroot_pairing(const Weight& w, const Root& beta);
// mu - <mu + rho, beta^vee> beta + k p beta.
Weight dot_action(const Weight& mu, const Root& beta, long k, long p);

struct SeparationResult {
  bool separated = true;
  size_t reflections_checked = 0;
  // First violation: mu in Lambda_f^+, nu = s_{beta, kp} . mu in Lambda_f^c, mu < nu.
  std::optional<std::pair<Weight, Weight>> violation;
};
// Searches |k| <= ceil((|<mu + rho, beta^vee>| + n p) / p) for every mu in
// Lambda_f^+ and positive root beta.
SeparationResult cross_block_separation_check(int m, int n, int f, long p);

struct OrderCheck {
  size_t pairs = 0;
  size_t violations = 0;
};
// Every l of size n - 2a and mu of size n - 2b with a < b has l not <= mu.
OrderCheck size_order_check(int m, int n);

std::string weight_str(const Weight& w);

}  // namespace cz::spsw

#endif  // CENTRALIZER_SPSW_HPP_
