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

#include "centralizer/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "kernels.hpp"

namespace cz::brauer {

Diagram Diagram::identity(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, n + i);
  return from_pairs(n, p);
}

Diagram Diagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1 || n > 100) throw Error(Errc::InvalidInput, "strand count out of range");
  if (static_cast<int>(pairs.size()) != n) throw Error(Errc::InvalidInput, "need n pairs");
  Diagram d;
  d.n_ = n;
  d.partner_.assign(2 * n, 0xff);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b || d.partner_[a] != 0xff ||
        d.partner_[b] != 0xff)
      throw Error(Errc::InvalidInput, "pairs do not form a perfect matching");
    d.partner_[a] = static_cast<uint8_t>(b);
    d.partner_[b] = static_cast<uint8_t>(a);
  }
  return d;
}

Diagram Diagram::parse(std::string_view text, int n) {
  // Tokens: integers optionally followed by a prime.
  std::vector<std::pair<int, bool>> labels;
  for (size_t k = 0; k < text.size();) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
        v = v * 10 + (text[k++] - '0');
      bool bottom = k < text.size() && text[k] == '\'';
      if (bottom) ++k;
      labels.emplace_back(v, bottom);
    } else if (c == '[' || c == ']' || c == '(' || c == ')' || c == ',' ||
               std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else {
      throw Error(Errc::ParseError, "unexpected character in diagram '" + std::string(text) + "'");
    }
  }
  if (labels.size() % 2) throw Error(Errc::ParseError, "odd number of vertices");
  int inferred = 0;
  for (auto [v, b] : labels) inferred = std::max(inferred, v);
  if (n < 0) n = inferred;
  if (inferred > n) throw Error(Errc::ParseError, "vertex label exceeds strand count");
  std::vector<std::pair<int, int>> pairs;
  for (size_t k = 0; k < labels.size(); k += 2) {
    auto id = [n](std::pair<int, bool> l) {
      if (l.first < 1) throw Error(Errc::ParseError, "vertex labels start at 1");
      return l.second ? n + l.first - 1 : l.first - 1;
    };
    pairs.emplace_back(id(labels[k]), id(labels[k + 1]));
  }
  return from_pairs(n, pairs);
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> p;
  for (int v = 0; v < 2 * n_; ++v)
    if (v < partner_[v]) p.emplace_back(v, partner_[v]);
  return p;
}

int Diagram::arcs() const {
  int a = 0;
  for (int v = 0; v < n_; ++v)
    if (partner_[v] < n_ && v < partner_[v]) ++a;
  return a;
}

std::string Diagram::str() const {
  auto label = [this](int v) {
    return v < n_ ? std::to_string(v + 1) : std::to_string(v - n_ + 1) + "'";
  };
  std::string s = "[";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) s += ",";
    first = false;
    s += "(" + label(a) + "," + label(b) + ")";
  }
  return s + "]";
}

Composite compose(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n()) throw Error(Errc::SizeMismatch, "diagrams on different strand counts");
  const int n = a.n();
  // 0..n-1 top of a, n..2n-1 middle row, 2n..3n-1 bottom of b.
  detail::UnionFind uf(3 * n);
  for (int v = 0; v < 2 * n; ++v) uf.unite(v, a.partner(v));
  for (int v = 0; v < 2 * n; ++v) uf.unite(n + v, n + b.partner(v));
  std::map<size_t, std::vector<int>> outer;
  std::set<size_t> middle_roots;
  for (int v = 0; v < 3 * n; ++v) {
    size_t r = uf.find(v);
    if (v < n || v >= 2 * n)
      outer[r].push_back(v < n ? v : v - n);
    else
      middle_roots.insert(r);
  }
  Composite c;
  std::vector<std::pair<int, int>> pairs;
  for (auto& [r, vs] : outer) pairs.emplace_back(vs[0], vs[1]);
  for (size_t r : middle_roots)
    if (!outer.count(r)) ++c.loops;
  c.diagram = Diagram::from_pairs(n, pairs);
  return c;
}

Diagram generator_s(int i, int n) {
  if (i < 1 || i > n - 1) throw Error(Errc::IndexOutOfRange, "s_" + std::to_string(i));
  std::vector<std::pair<int, int>> p;
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) p.emplace_back(j, n + j);
  p.emplace_back(i - 1, n + i);
  p.emplace_back(i, n + i - 1);
  return Diagram::from_pairs(n, p);
}

Diagram generator_e(int i, int n) {
  if (i < 1 || i > n - 1) throw Error(Errc::IndexOutOfRange, "e_" + std::to_string(i));
  std::vector<std::pair<int, int>> p;
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) p.emplace_back(j, n + j);
  p.emplace_back(i - 1, i);
  p.emplace_back(n + i - 1, n + i);
  return Diagram::from_pairs(n, p);
}

uint64_t dimension(int n) {
  uint64_t d = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) d *= k;
  return d;
}

std::vector<Diagram> enumerate_diagrams(int n) {
  std::vector<Diagram> out;
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&]() {
    int v = 0;
    while (v < 2 * n && partner[v] >= 0) ++v;
    if (v == 2 * n) {
      std::vector<std::pair<int, int>> p;
      for (int u = 0; u < 2 * n; ++u)
        if (u < partner[u]) p.emplace_back(u, partner[u]);
      out.push_back(Diagram::from_pairs(n, p));
      return;
    }
    for (int w = v + 1; w < 2 * n; ++w) {
      if (partner[w] >= 0) continue;
      partner[v] = w;
      partner[w] = v;
      rec();
      partner[v] = partner[w] = -1;
    }
  };
  rec();
  return out;
}

DiagramBasis::DiagramBasis(int n) : n_(n), diagrams_(enumerate_diagrams(n)) {
  for (size_t i = 0; i < diagrams_.size(); ++i) index_[diagrams_[i].pairs()] = i;
}

size_t DiagramBasis::index(const Diagram& d) const {
  auto it = index_.find(d.pairs());
  if (d.n() != n_ || it == index_.end()) throw Error(Errc::SizeMismatch, "diagram not in basis");
  return it->second;
}

// ---------------------------------------------------------------- elements

Scalar delta_scalar(long delta, const FieldSpec& f) { return Scalar(f, delta); }

BrauerElt BrauerElt::of(const Diagram& d, long delta, const FieldSpec& f) {
  BrauerElt e(d.n(), delta, f);
  e.add_term(d, Scalar::one(f));
  return e;
}

BrauerElt BrauerElt::one(int n, long delta, const FieldSpec& f) {
  return of(Diagram::identity(n), delta, f);
}

void BrauerElt::add_term(const Diagram& d, const Scalar& c) {
  if (d.n() != n_) throw Error(Errc::SizeMismatch, "diagram strand count");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vec BrauerElt::coordinates(const DiagramBasis& basis) const {
  Vec v = zero_vec(basis.size(), field_);
  for (const auto& [d, c] : terms_) v[basis.index(d)] = c;
  return v;
}

void BrauerElt::check(const BrauerElt& o) const {
  if (n_ != o.n_) throw Error(Errc::SizeMismatch, "Brauer elements on different strand counts");
  if (delta_ != o.delta_) throw Error(Errc::InvalidInput, "Brauer elements with different delta");
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "Brauer elements");
}

BrauerElt BrauerElt::operator+(const BrauerElt& o) const {
  check(o);
  BrauerElt r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

BrauerElt BrauerElt::operator-(const BrauerElt& o) const {
  check(o);
  BrauerElt r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

BrauerElt BrauerElt::operator*(const BrauerElt& o) const {
  check(o);
  BrauerElt r(n_, delta_, field_);
  Scalar delta = delta_scalar(delta_, field_);
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) {
      Composite c = compose(d1, d2);
      r.add_term(c.diagram, c1 * c2 * delta.pow(c.loops));
    }
  return r;
}

BrauerElt BrauerElt::scaled(const Scalar& s) const {
  BrauerElt r(n_, delta_, field_);
  for (const auto& [d, c] : terms_) r.add_term(d, c * s);
  return r;
}

bool BrauerElt::operator==(const BrauerElt& o) const {
  return n_ == o.n_ && delta_ == o.delta_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string BrauerElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + d.str();
  }
  return s;
}

// ---------------------------------------------------------------- words

Word parse_word(std::string_view text) {
  Word w;
  for (size_t k = 0; k < text.size();) {
    char c = text[k];
    if (c == 's' || c == 'e') {
      ++k;
      if (k < text.size() && text[k] == '_') ++k;
      int v = 0;
      size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
        v = v * 10 + (text[k++] - '0');
      if (k == start) throw Error(Errc::ParseError, "generator without index");
      w.push_back({c, v});
    } else if (c == '*' || c == ' ' || c == '.') {
      ++k;
    } else if (c == '1' && w.empty() && text.size() == 1) {
      ++k;
    } else {
      throw Error(Errc::ParseError, "bad word '" + std::string(text) + "'");
    }
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += l.kind + std::to_string(l.i);
  }
  return s;
}

Diagram letter_diagram(const Letter& l, int n) {
  return l.kind == 's' ? generator_s(l.i, n) : generator_e(l.i, n);
}

BrauerElt evaluate_word(const Word& w, int n, long delta, const FieldSpec& f) {
  BrauerElt r = BrauerElt::one(n, delta, f);
  for (const auto& l : w) r = r * BrauerElt::of(letter_diagram(l, n), delta, f);
  return r;
}

std::vector<Relation> defining_relations(int n) {
  std::vector<Relation> out;
  auto s = [](int i) { return Letter{'s', i}; };
  auto e = [](int i) { return Letter{'e', i}; };
  auto idx = [](int i) { return std::to_string(i); };
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({"s" + idx(i) + "^2=1", {s(i), s(i)}, {}, 0});
    out.push_back({"e" + idx(i) + "^2=(-2m)e" + idx(i), {e(i), e(i)}, {e(i)}, 1});
    out.push_back({"e" + idx(i) + "s" + idx(i) + "=e" + idx(i), {e(i), s(i)}, {e(i)}, 0});
    out.push_back({"s" + idx(i) + "e" + idx(i) + "=e" + idx(i), {s(i), e(i)}, {e(i)}, 0});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      std::string ij = idx(i) + "," + idx(j);
      out.push_back({"s" + idx(i) + "s" + idx(j) + "=s" + idx(j) + "s" + idx(i), {s(i), s(j)},
                     {s(j), s(i)}, 0});
      out.push_back({"s" + idx(i) + "e" + idx(j) + "=e" + idx(j) + "s" + idx(i), {s(i), e(j)},
                     {e(j), s(i)}, 0});
      out.push_back({"e" + idx(i) + "s" + idx(j) + "=s" + idx(j) + "e" + idx(i), {e(i), s(j)},
                     {s(j), e(i)}, 0});
      out.push_back({"e" + idx(i) + "e" + idx(j) + "=e" + idx(j) + "e" + idx(i), {e(i), e(j)},
                     {e(j), e(i)}, 0});
    }
  for (int i = 1; i <= n - 2; ++i) {
    std::string a = idx(i), b = idx(i + 1);
    out.push_back({"s" + a + "s" + b + "s" + a + "=s" + b + "s" + a + "s" + b,
                   {s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)}, 0});
    out.push_back({"e" + a + "e" + b + "e" + a + "=e" + a, {e(i), e(i + 1), e(i)}, {e(i)}, 0});
    out.push_back({"e" + b + "e" + a + "e" + b + "=e" + b, {e(i + 1), e(i), e(i + 1)},
                   {e(i + 1)}, 0});
    out.push_back({"s" + a + "e" + b + "e" + a + "=s" + b + "e" + a, {s(i), e(i + 1), e(i)},
                   {s(i + 1), e(i)}, 0});
    out.push_back({"e" + b + "e" + a + "s" + b + "=e" + b + "s" + a, {e(i + 1), e(i), s(i + 1)},
                   {e(i + 1), s(i)}, 0});
  }
  return out;
}

std::map<Diagram, Word> factorizations(int n, bool append_right) {
  std::map<Diagram, Word> words;
  Diagram id = Diagram::identity(n);
  words[id] = {};
  std::deque<Diagram> queue{id};
  std::vector<Letter> letters;
  for (int i = 1; i <= n - 1; ++i) letters.push_back({'s', i});
  for (int i = 1; i <= n - 1; ++i) letters.push_back({'e', i});
  while (!queue.empty()) {
    Diagram d = queue.front();
    queue.pop_front();
    for (const auto& l : letters) {
      Diagram g = letter_diagram(l, n);
      Composite c = append_right ? compose(d, g) : compose(g, d);
      if (c.loops != 0 || words.count(c.diagram)) continue;
      Word w = words[d];
      if (append_right)
        w.push_back(l);
      else
        w.insert(w.begin(), l);
      words[c.diagram] = std::move(w);
      queue.push_back(c.diagram);
    }
  }
  return words;
}

// ---------------------------------------------------------------- ideals

Diagram ideal_generator(int n, int f) {
  if (f < 1 || 2 * f > n) throw Error(Errc::IndexOutOfRange, "ideal generator needs 1 <= f <= n/2");
  Diagram d = Diagram::identity(n);
  for (int k = 0; k < f; ++k) {
    Composite c = compose(d, generator_e(2 * k + 1, n));
    d = c.diagram;
  }
  return d;
}

BrauerIdeal ideal_Bf(int n, int f, int m, const FieldSpec& field) {
  if (f < 0 || f > n / 2 + 1) throw Error(Errc::IndexOutOfRange, "f out of range");
  DiagramBasis basis(n);
  BrauerIdeal ideal;
  ideal.n = n;
  ideal.f = f;
  if (f == n / 2 + 1) {
    ideal.span = Subspace(basis.size(), field);
    return ideal;
  }
  std::set<Diagram> seen;
  std::deque<Diagram> queue;
  Diagram start = f == 0 ? Diagram::identity(n) : ideal_generator(n, f);
  seen.insert(start);
  queue.push_back(start);
  Scalar delta = delta_scalar(-2L * m, field);
  std::vector<Diagram> gens;
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(generator_s(i, n));
    gens.push_back(generator_e(i, n));
  }
  while (!queue.empty()) {
    Diagram d = queue.front();
    queue.pop_front();
    for (const auto& g : gens)
      for (int side = 0; side < 2; ++side) {
        Composite c = side == 0 ? compose(g, d) : compose(d, g);
        if (delta.pow(c.loops).is_zero()) continue;
        if (seen.insert(c.diagram).second) queue.push_back(c.diagram);
      }
  }
  ideal.diagrams.assign(seen.begin(), seen.end());
  std::vector<SpVec> vs;
  for (const auto& d : ideal.diagrams)
    vs.push_back({{static_cast<uint32_t>(basis.index(d)), Scalar::one(field)}});
  ideal.span = Subspace::span_sparse(vs, basis.size(), field);
  return ideal;
}

Subspace arc_count_span(int n, int f, const FieldSpec& field) {
  DiagramBasis basis(n);
  std::vector<Vec> vs;
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].arcs() >= f) vs.push_back(unit_vec(basis.size(), i, field));
  return Subspace::span(vs, basis.size(), field);
}

bool is_two_sided_ideal(const Subspace& s, int n, int m, const FieldSpec& field) {
  DiagramBasis basis(n);
  if (s.ambient_dim() != basis.size()) throw Error(Errc::AmbientMismatch, "ideal ambient");
  const long delta = -2L * m;
  std::vector<BrauerElt> gens;
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(BrauerElt::of(generator_s(i, n), delta, field));
    gens.push_back(BrauerElt::of(generator_e(i, n), delta, field));
  }
  for (size_t r = 0; r < s.dim(); ++r) {
    BrauerElt x(n, delta, field);
    for (size_t j = 0; j < basis.size(); ++j) x.add_term(basis[j], s.basis()(r, j));
    for (const auto& g : gens) {
      if (!s.contains((g * x).coordinates(basis))) return false;
      if (!s.contains((x * g).coordinates(basis))) return false;
    }
  }
  return true;
}

}  // namespace cz::brauer
