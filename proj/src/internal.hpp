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

// Small helpers shared by the algebra and module sources.

#ifndef CENTRALIZER_SRC_INTERNAL_HPP_
#define CENTRALIZER_SRC_INTERNAL_HPP_

#include <vector>

#include "centralizer/fdalg.hpp"

namespace cz::detail {

inline void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (&a != &b && !(a == b)) throw Error(Errc::AlgebraMismatch, "modules over different algebras");
}

inline std::vector<SpMat> to_sparse_all(const std::vector<Mat>& ms) {
  std::vector<SpMat> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(SpMat::from_dense(m));
  return out;
}

}  // namespace cz::detail

#endif  // CENTRALIZER_SRC_INTERNAL_HPP_
