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

// A fixed corpus of small algebras with primitive idempotents, label orders
// and, where available, an anti-involution fixing the idempotents.

#ifndef CENTRALIZER_CORPUS_HPP_
#define CENTRALIZER_CORPUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "centralizer/fdalg.hpp"

namespace cz {

struct CorpusEntry {
  std::string name;
  AlgebraData data;
  // Concrete matrices the algebra was built from; basis element i of the
  // algebra is matrices[i].
  std::vector<Mat> matrices;
  bool semisimple = false;
};

// All split entries. The same algebra may appear under two label orders.
std::vector<CorpusEntry> corpus(const FieldSpec& f);
// Q(i) as a 2-dimensional Q-algebra: not split.
CorpusEntry non_split_example();
// Looks an entry up by name.
CorpusEntry corpus_entry(const std::string& name, const FieldSpec& f);

// Commutant of a nilpotent Jordan-type operator on K[x]/x^1 + ... + K[x]/x^k.
// Returns the basis matrices.
std::vector<Mat> auslander_matrices(int k, const FieldSpec& f);

}  // namespace cz

#endif  // CENTRALIZER_CORPUS_HPP_
