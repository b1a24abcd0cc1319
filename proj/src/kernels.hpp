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

// Typed elimination kernels shared by the dense and sparse front ends.

#ifndef CENTRALIZER_SRC_KERNELS_HPP_
#define CENTRALIZER_SRC_KERNELS_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "centralizer/linalg.hpp"

namespace cz::detail {

// In-place Gauss-Jordan over Q. On return `rows` holds the nonzero RREF rows.
void rref_rational(std::vector<std::vector<mpq_class>>& rows, size_t cols,
                   std::vector<size_t>& pivots);
// Same over F_p with residues in [0, p).
void rref_modp(std::vector<std::vector<uint32_t>>& rows, size_t cols, uint32_t p,
               std::vector<size_t>& pivots);

// Field-dispatching RREF of dense Scalar rows; returns nonzero rows.
std::vector<Vec> rref_rows(std::vector<Vec> rows, size_t cols, const FieldSpec& f,
                           std::vector<size_t>& pivots);

// Standard nullspace basis of an RREF: one vector per free column.
std::vector<Vec> nullspace_from_rref(const std::vector<Vec>& r, const std::vector<size_t>& pivots,
                                     size_t cols, const FieldSpec& f);

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace cz::detail

#endif  // CENTRALIZER_SRC_KERNELS_HPP_
