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

// Brauer diagram algebra with loop parameter -2m.
//
// Vertices are numbered 0..n-1 along the top row and n..2n-1 along the
// bottom row. In text form they are 1..n and 1'..n'. A product D1 * D2 puts
// D1 above D2.

#ifndef CENTRALIZER_BRAUER_HPP_
#define CENTRALIZER_BRAUER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centralizer/linalg.hpp"

namespace cz::brauer {

class Diagram {
 public:
  Diagram() = default;
  static Diagram identity(int n);
  // Pairs of 0-based vertices; every vertex must occur exactly once.
  static Diagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // "[(1,2),(1',2')]". n = -1 infers the strand count from the labels.
  static Diagram parse(std::string_view text, int n = -1);

  int n() const { return n_; }
  int partner(int v) const { return partner_[v]; }
  // Canonical form: (min, max) pairs sorted lexicographically.
  std::vector<std::pair<int, int>> pairs() const;
  // Number of top-row arcs; equals the number of bottom-row arcs.
  int arcs() const;
  std::string str() const;

  bool operator==(const Diagram& o) const { return n_ == o.n_ && partner_ == o.partner_; }
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  bool operator<(const Diagram& o) const {
    return n_ != o.n_ ? n_ < o.n_ : pairs() < o.pairs();
  }

 private:
  int n_ = 0;
  std::vector<uint8_t> partner_;
};

struct Composite {
  Diagram diagram;
  int loops = 0;
};

// Concatenation with a above b; loops are counted with union-find over 3n
// virtual vertices.
Composite compose(const Diagram& a, const Diagram& b);

// 1 <= i <= n-1.
Diagram generator_s(int i, int n);
Diagram generator_e(int i, int n);

// (2n-1)!!
uint64_t dimension(int n);
// Canonical order: the smallest free vertex is matched with each larger free
// vertex in increasing order.
std::vector<Diagram> enumerate_diagrams(int n);

// Basis of B_n with index lookup.
class DiagramBasis {
 public:
  explicit DiagramBasis(int n);
  int n() const { return n_; }
  size_t size() const { return diagrams_.size(); }
  const std::vector<Diagram>& diagrams() const { return diagrams_; }
  const Diagram& operator[](size_t i) const { return diagrams_[i]; }
  size_t index(const Diagram& d) const;

 private:
  int n_;
  std::vector<Diagram> diagrams_;
  std::map<std::vector<std::pair<int, int>>, size_t> index_;
};

// Formal linear combination of diagrams; delta is the integer -2m.
class BrauerElt {
 public:
  BrauerElt(int n, long delta, const FieldSpec& f) : n_(n), delta_(delta), field_(f) {}
  static BrauerElt of(const Diagram& d, long delta, const FieldSpec& f);
  static BrauerElt one(int n, long delta, const FieldSpec& f);

  int n() const { return n_; }
  long delta() const { return delta_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Diagram& d, const Scalar& c);
  Vec coordinates(const DiagramBasis& basis) const;

  BrauerElt operator+(const BrauerElt& o) const;
  BrauerElt operator-(const BrauerElt& o) const;
  BrauerElt operator*(const BrauerElt& o) const;
  BrauerElt scaled(const Scalar& s) const;
  bool operator==(const BrauerElt& o) const;
  std::string str() const;

 private:
  void check(const BrauerElt& o) const;
  int n_;
  long delta_;
  FieldSpec field_;
  std::map<Diagram, Scalar> terms_;
};

struct Letter {
  char kind;  // 's' or 'e'
  int i;      // 1-based
  bool operator==(const Letter& o) const { return kind == o.kind && i == o.i; }
};
using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string word_str(const Word& w);
Diagram letter_diagram(const Letter& l, int n);
BrauerElt evaluate_word(const Word& w, int n, long delta, const FieldSpec& f);

// One defining relation lhs = delta^power * rhs for specific indices.
struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
  int delta_power = 0;
};
// Every instance of the defining relations valid for n strands.
std::vector<Relation> defining_relations(int n);

// Loop-free generator words for every diagram. Right factorizations grow
// words by appending letters, left ones by prepending; the product of the
// word is the diagram itself with coefficient 1.
std::map<Diagram, Word> factorizations(int n, bool append_right);

// Delta as a field element.
Scalar delta_scalar(long delta, const FieldSpec& f);

// e_1 e_3 ... e_{2f-1} as a single diagram (f >= 1).
Diagram ideal_generator(int n, int f);

struct BrauerIdeal {
  int n = 0;
  int f = 0;
  Subspace span;                  // inside the (2n-1)!!-dimensional algebra
  std::vector<Diagram> diagrams;  // monomials spanning the ideal
};

// Two-sided ideal generated by e_1 e_3 ... e_{2f-1}, found by saturating under
// left and right multiplication by generators. f = floor(n/2)+1 gives 0.
BrauerIdeal ideal_Bf(int n, int f, int m, const FieldSpec& field);
// Span of the diagrams with at least f arcs per row.
Subspace arc_count_span(int n, int f, const FieldSpec& field);
// Closure of a subspace under left and right generator multiplication.
bool is_two_sided_ideal(const Subspace& s, int n, int m, const FieldSpec& field);

}  // namespace cz::brauer

#endif  // CENTRALIZER_BRAUER_HPP_
