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

// Finite-dimensional algebras, left modules, homomorphism spaces, centralizers
// and the dominant-dimension test.
//
// Matrices act on column vectors. Module maps M -> N are dim N x dim M
// matrices. Endomorphism algebras act on the left of their module; the single
// place where an opposite ring appears is `opposite`.

#ifndef CENTRALIZER_FDALG_HPP_
#define CENTRALIZER_FDALG_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centralizer/linalg.hpp"

namespace cz {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  // mult[i][j] holds the coordinates of e_i e_j. Validates associativity and
  // the two-sided unit.
  static AlgebraPtr make(const FieldSpec& f, std::vector<std::vector<Vec>> mult, Vec unit,
                         std::string name = "");
  // Subalgebra of a matrix algebra given by a linearly independent basis
  // closed under products and containing the identity in its span.
  static AlgebraPtr from_matrices(const std::vector<Mat>& basis, std::string name = "");

  size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const Vec& unit() const { return unit_; }
  const std::string& name() const { return name_; }

  // Coordinates of e_i e_j.
  Vec product(size_t i, size_t j) const { return left_[i].col(j); }
  Vec mul(const Vec& x, const Vec& y) const;
  // Matrix of y -> e_i y.
  const Mat& left_mult(size_t i) const { return left_[i]; }
  Mat left_mult(const Vec& x) const;
  // Matrix of y -> y x.
  Mat right_mult(const Vec& x) const;
  Vec basis_vec(size_t i) const { return unit_vec(dim_, i, field_); }

  bool operator==(const Algebra& o) const { return field_ == o.field_ && left_ == o.left_ && unit_ == o.unit_; }

 private:
  Algebra() = default;
  size_t dim_ = 0;
  FieldSpec field_;
  std::vector<Mat> left_;
  Vec unit_;
  std::string name_;
};

// A^op with the same basis.
AlgebraPtr opposite(const Algebra& a);
// Largest nilpotent ideal, as the kernel of the trace form tr(L_x L_y).
// Needs char 0 or char > dim A.
Subspace radical(const Algebra& a);

struct LeftModule {
  AlgebraPtr algebra;
  size_t dim = 0;
  std::vector<Mat> action;     // rho(e_i), one per basis element
  std::vector<size_t> blocks;  // sizes of a known direct-sum decomposition, if any

  const FieldSpec& field() const { return algebra->field(); }
  Mat act(const Vec& a) const;
  // Checks rho(1) = I and rho(e_i) rho(e_j) = rho(e_i e_j).
  bool is_valid() const;
};

struct ModMap {
  std::shared_ptr<const LeftModule> source, target;
  Mat matrix;
};

struct AlgebraHom {
  AlgebraPtr source, target;
  Mat matrix;  // column i = coordinates of the image of e_i
};

struct AntiInvolution {
  AlgebraPtr algebra;
  Mat matrix;  // column i = coordinates of e_i^*
  Vec apply(const Vec& x) const { return matrix * x; }
  // (xy)^* = y^* x^* on basis pairs and ** = id.
  bool is_valid() const;
};

// ------------------------------------------------------------ modules

LeftModule regular_module(const AlgebraPtr& a);
LeftModule zero_module(const AlgebraPtr& a);
// A module given by action matrices; validated.
LeftModule make_module(const AlgebraPtr& a, std::vector<Mat> action);
LeftModule direct_sum(const std::vector<LeftModule>& parts);
LeftModule power(const LeftModule& m, size_t r);

struct SubmoduleResult {
  LeftModule module;
  Mat inclusion;  // dim M x dim S
};
struct QuotientResult {
  LeftModule module;
  Mat projection;  // dim Q x dim M
  QuotientSpace space;
};
// s must be stable under the action.
SubmoduleResult submodule(const LeftModule& m, const Subspace& s);
QuotientResult quotient(const LeftModule& m, const Subspace& s);
// A v_1 + ... + A v_k.
Subspace generated_submodule(const LeftModule& m, const std::vector<Vec>& vs);
bool is_submodule(const LeftModule& m, const Subspace& s);
// rad(A) M and the common kernel of rad(A).
Subspace module_radical(const LeftModule& m, const Subspace& alg_radical);
Subspace module_socle(const LeftModule& m, const Subspace& alg_radical);
// Linear dual with action rho(a^*)^T.
LeftModule dual_module(const LeftModule& m, const AntiInvolution& star);

// ------------------------------------------------------------ homs

std::vector<Mat> hom_basis(const LeftModule& m, const LeftModule& n);
std::vector<ModMap> hom_space(const LeftModule& m, const LeftModule& n);
bool is_module_map(const LeftModule& m, const LeftModule& n, const Mat& f);
// Sum of the images of all maps M -> N.
Subspace trace_submodule(const LeftModule& m, const LeftModule& n);
// Deterministic random combination of a Hom basis is invertible. A negative
// answer is correct with high probability only.
bool is_isomorphic(const LeftModule& m, const LeftModule& n);
std::optional<Mat> find_isomorphism(const LeftModule& m, const LeftModule& n);
// Number of copies of the indecomposable X in a decomposition of M: rank of
// the pairing (f, g) -> tr(g f) / dim X on Hom(X, M) x Hom(M, X).
size_t summand_multiplicity(const LeftModule& m, const LeftModule& x);
// Dimension of End(M) / rad End(M).
size_t endomorphism_top_dim(const LeftModule& m);
bool is_indecomposable(const LeftModule& m);

struct EndomorphismAlgebra {
  AlgebraPtr algebra;   // basis = `basis`
  std::vector<Mat> basis;
  LeftModule module;    // M as a left module over the endomorphism algebra
};
EndomorphismAlgebra endomorphism_algebra(const LeftModule& m);

bool is_faithful(const LeftModule& m);

// ------------------------------------------------------------ centralizers

struct DcpResult {
  size_t dim_a = 0, dim_a1 = 0, dim_a2 = 0, rank = 0;
  bool injective = false, surjective = false, bijective = false;
  std::vector<Mat> a1_basis, a2_basis;
  AlgebraHom map;  // target filled on request by `target_algebra`
};
// A'' = End_{A'}(T) with A' = End_A(T); the canonical map a -> rho_T(a).
DcpResult double_centralizer_map(const LeftModule& t);
AlgebraPtr target_algebra(const DcpResult& r);

// Hom(C, T) -> Hom(M, T), g -> g f, is surjective.
bool is_left_approximation(const Mat& f, const LeftModule& m, const LeftModule& c,
                           const LeftModule& t);

struct Embedding {
  size_t r = 0;
  Mat map;           // (r dim T) x dim M
  LeftModule target; // T^r
};
// Universal evaluation M -> T^{dim Hom(M,T)}, then greedily drops components
// while staying injective, then tries fewer combined components. Throws
// NotEmbeddable.
Embedding embed_into_add(const LeftModule& m, const LeftModule& t);

struct DomDimResult {
  bool holds = false;
  int failed_stage = 0;  // 1: no injective approximation, 2: cokernel does not embed
  size_t r = 0, s = 0;
  size_t dim_a = 0, dim_kernel_eps = 0;
  bool delta_injective = false, delta_is_approximation = false, composite_zero = false,
       exact = false;
  Mat delta, epsilon;
};
// 0 -> A -> T^r -> T^s exact with the first map an approximation. The
// universal evaluation map is replaced by fewer combined components when
// those still give an injective approximation.
DomDimResult dominant_dimension_at_least_2(const LeftModule& t);

// ------------------------------------------------------------ matrix algebras

// A subalgebra of End_K(K^n) given by a basis. `seed` lists elements of A
// (for example weight projections) that break commutant solves into blocks.
struct MatrixAlgebra {
  size_t n = 0;
  FieldSpec field;
  std::vector<SpMat> basis;
  std::vector<SpMat> seed;
};

struct MatrixDcpResult {
  size_t dim_a = 0, dim_a1 = 0, dim_a2 = 0;
  bool bijective = false;
  std::vector<SpMat> a1_basis;
};
// A' and A'' by sparse commutant solves; A is contained in A'' so the map is
// bijective iff the dimensions agree.
MatrixDcpResult matrix_double_centralizer(const MatrixAlgebra& a);

struct MatrixDomDimResult {
  bool holds = false;
  size_t r = 0, s = 0, dim_a = 0, dim_kernel_eps = 0;
  bool composite_zero = false;
};
// Dominant dimension test for A acting on its natural module T = K^n, with
// delta(a) = (a e_1, ..., a e_n) and epsilon built from
// {phi in (A')^n : sum_j phi_j e_j = 0}. Needs A' from matrix_double_centralizer.
MatrixDomDimResult matrix_dominant_dimension(const MatrixAlgebra& a,
                                             const std::vector<SpMat>& a1_basis);

// Converts a small matrix algebra to structure constants.
AlgebraPtr to_algebra(const MatrixAlgebra& a);

// ------------------------------------------------------------ projectives

struct FullyFaithfulResult {
  bool faithful = false;
  bool dcp = false;
  bool fully_faithful = false;
  bool agree = false;
};
// M = sum of A e_i. Compares DCP of M with full faithfulness of Hom_A(M, -)
// on projectives; the latter is tested on P1 = P2 = A, which suffices by
// additivity. Throws BadIdempotent and StarNotFixing.
FullyFaithfulResult fully_faithful_on_projectives(const AntiInvolution& star,
                                                  const std::vector<Vec>& idempotents);

// ------------------------------------------------------------ splitness

struct SplitnessReport {
  bool checked = false;  // false when no idempotents are available
  bool split = false;
  size_t radical_dim = 0;
  std::vector<size_t> simple_dims;
  std::string detail;
};
// With primitive idempotents supplied: End(L) = K for each top L = Ae/rad Ae,
// the tops are pairwise non-isomorphic and sum (dim L)^2 = dim A/rad A.
SplitnessReport check_split(const AlgebraPtr& a, const std::vector<Vec>& idempotents);

// ------------------------------------------------------------ I/O

// Algebra file with optional metadata.
struct AlgebraData {
  AlgebraPtr algebra;
  std::vector<Vec> idempotents;
  std::optional<Mat> star;
  std::vector<std::string> labels;
  std::vector<std::pair<size_t, size_t>> preorder;  // (i, j) means label i <= label j
};
AlgebraData algebra_from_json(const std::string& text);
std::string algebra_to_json(const AlgebraData& d);
LeftModule module_from_json(const AlgebraPtr& a, const std::string& text);
std::string module_to_json(const LeftModule& m);

}  // namespace cz

#endif  // CENTRALIZER_FDALG_HPP_
