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

// Standardly stratified and quasi-hereditary structure on an algebra given
// with primitive idempotents e_lambda and a preorder on the labels.
//
// P(l) = A e_l, L(l) = P(l) / rad P(l), I(l) = D(e_l A).
// "mu > l" always means the strict part of the preorder: l <= mu and not
// mu <= l.

#ifndef CENTRALIZER_STRAT_HPP_
#define CENTRALIZER_STRAT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "centralizer/fdalg.hpp"

namespace cz {

struct StratifiedAlgebra {
  AlgebraPtr algebra;
  std::vector<std::string> labels;
  std::vector<Vec> idempotents;
  std::vector<std::vector<bool>> leq;  // reflexive-transitive closure
  Subspace radical;

  std::vector<LeftModule> pims;
  std::vector<Mat> pim_inclusions;  // P(l) -> A
  std::vector<Vec> pim_generators;  // e_l in the coordinates of P(l)
  std::vector<Mat> pim_to_top;      // P(l) -> L(l)
  std::vector<LeftModule> simples;
  std::vector<LeftModule> injectives;

  std::vector<LeftModule> standard, proper_standard, costandard, proper_costandard;

  bool partial_order = false;
  bool standardly_stratified = false;
  bool properly_stratified = false;
  bool quasi_hereditary = false;

  size_t size() const { return labels.size(); }
  bool above(size_t mu, size_t l) const { return leq[l][mu] && !leq[mu][l]; }  // mu > l
  bool at_least(size_t mu, size_t l) const { return leq[l][mu]; }           // mu >= l
  const FieldSpec& field() const { return algebra->field(); }
};

// Validates the idempotents (BadIdempotent) and splitness (NotSplit), builds
// all standard-type modules and verifies the flags.
StratifiedAlgebra make_stratified(const AlgebraData& d);

// [M : L(l)] = dim e_l M for split A.
size_t composition_multiplicity(const StratifiedAlgebra& s, const LeftModule& m, size_t l);
std::vector<size_t> composition_factors(const StratifiedAlgebra& s, const LeftModule& m);
// Labels of the tops of M, with multiplicity.
std::vector<size_t> top_multiplicities(const StratifiedAlgebra& s, const LeftModule& m);

// Tr_{A e}(N) = A e N.
Subspace trace_of_projective(const LeftModule& n, const Vec& e);

// ------------------------------------------------------------ Ext^1

struct ProjectiveCover {
  LeftModule cover;             // sum of P(l_i)
  std::vector<size_t> summands; // l_i
  Mat map;                      // cover -> M
  LeftModule syzygy;            // kernel of `map`
  Mat syzygy_inclusion;         // syzygy -> cover
};
ProjectiveCover projective_cover(const StratifiedAlgebra& s, const LeftModule& m);

struct Ext1Result {
  size_t dim = 0;
  std::vector<Mat> cocycles;  // maps syzygy(M) -> N representing a basis
  ProjectiveCover presentation;
};
// Hom(Omega M, N) modulo restrictions of Hom(P_0, N).
Ext1Result ext1(const StratifiedAlgebra& s, const LeftModule& m, const LeftModule& n);

// 0 -> N -> E -> M^k -> 0 with k = dim Ext^1(M, N), built by pushout along
// the cocycle basis.
LeftModule universal_extension(const StratifiedAlgebra& s, const LeftModule& n,
                               const LeftModule& m);

// ------------------------------------------------------------ filtrations

// Ext^1(M, proper costandard) = 0 for all labels.
bool has_delta_filtration(const StratifiedAlgebra& s, const LeftModule& m);
// Ext^1(standard, M) = 0 for all labels.
bool has_proper_nabla_filtration(const StratifiedAlgebra& s, const LeftModule& m);
bool is_tilting(const StratifiedAlgebra& s, const LeftModule& m);

struct FiltrationLayer {
  size_t label;
  size_t multiplicity;
};
// Layers listed from the bottom up. Each step takes the trace of P(mu) for a
// maximal composition factor mu and requires it to be Delta(mu)^k.
std::optional<std::vector<FiltrationLayer>> delta_filtration_witness(const StratifiedAlgebra& s,
                                                                     const LeftModule& m);

// ------------------------------------------------------------ duality

struct Duality {
  AntiInvolution star;
};
// Requires a valid anti-involution fixing every e_l (StarNotFixing).
Duality make_duality(const StratifiedAlgebra& s, const Mat& star);

// ------------------------------------------------------------ tilting

// Iterated universal extensions starting from Delta(l). Throws
// NonTermination past `max_steps` and AssertionFailed when the result is not
// an indecomposable tilting module.
LeftModule tilting_indecomposable(const StratifiedAlgebra& s, size_t l, size_t max_steps = 0);
std::vector<LeftModule> tilting_modules(const StratifiedAlgebra& s);
LeftModule tilting_sum(const std::vector<LeftModule>& tiltings, const std::vector<size_t>& mult);

// Multiplicity of T(l) in a tilting module M.
std::vector<size_t> tilting_multiplicities(const std::vector<LeftModule>& tiltings,
                                           const LeftModule& m);

struct RingelDual {
  LeftModule characteristic;          // sum of T(l) in label order
  std::vector<size_t> offsets;        // start of T(l) inside `characteristic`
  EndomorphismAlgebra end;            // R(A) acting on the characteristic module
  StratifiedAlgebra dual;             // R(A) with the reversed order
};
RingelDual ringel_dual(const StratifiedAlgebra& s, const std::vector<LeftModule>& tiltings);
// Hom_A(M, T~) as a left R(A)-module by post-composition.
LeftModule ringel_functor(const RingelDual& r, const LeftModule& m);

struct DoubleRingelCheck {
  bool projectives_to_tiltings = false;  // R(P(l)) tilting over R(A)
  bool characteristic_to_projective = false;  // R(T~) is R(A) regular
  bool recovers_algebra = false;  // a -> R(- a) is an algebra iso A -> End_{R(A)}(R(A))
};
DoubleRingelCheck check_ringel_dual(const StratifiedAlgebra& s, const RingelDual& r);

struct MinimalTilting {
  std::vector<size_t> labels;  // l with T(l) a summand
  LeftModule module;
  bool dcp = false;
};
// Summands T(l) for which the top of T~ over R(A) involves e_l.
MinimalTilting minimal_dcp_tilting(const StratifiedAlgebra& s, const RingelDual& r,
                                   const std::vector<LeftModule>& tiltings);
// Subsets of labels by increasing size, then lexicographically; returns all
// subsets of minimal size whose sum is faithful with the double centralizer
// property.
std::vector<std::vector<size_t>> minimal_dcp_tilting_oracle(const std::vector<LeftModule>& tiltings);

// ------------------------------------------------------------ checkers

struct CheckItem {
  std::string name;
  bool ok = false;
};
struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::vector<CheckItem> hypotheses, conclusions;
  bool pass = false;
  std::string to_json() const;
};

// Hypotheses: T tilting, Delta(l) embeds in T^r, T^r maps onto the proper
// costandard modules. Conclusions: T faithful with the double centralizer
// property. Throws HypothesisFailed naming the label.
TheoremReport check_embedding_criterion(const StratifiedAlgebra& s, const LeftModule& t, size_t r,
                                        const std::string& instance = "");
// A with duality, T faithful tilting: A embeds in T^r with cokernel in
// F(Delta), T^{m_l} maps onto nabla(l) with m_l = dim nabla(l), restriction
// Hom(T^r, T) -> Hom(A, T) is onto, and the double centralizer property holds.
TheoremReport check_faithful_tilting(const StratifiedAlgebra& s, const Duality& d,
                                     const LeftModule& t, const std::string& instance = "");

struct SaturationResult {
  std::vector<size_t> support;  // labels with (T : T(l)) != 0
  bool saturated = false;
  bool faithful = false;
  std::optional<bool> dcp;      // computed when T is faithful
};
SaturationResult is_saturated_tilting(const StratifiedAlgebra& s,
                                      const std::vector<LeftModule>& tiltings, const LeftModule& t);

}  // namespace cz

#endif  // CENTRALIZER_STRAT_HPP_
