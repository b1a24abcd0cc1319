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

// Exact field elements over Q (GMP rationals) or F_p with p < 2^31.

#ifndef CENTRALIZER_SCALAR_HPP_
#define CENTRALIZER_SCALAR_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "centralizer/error.hpp"

namespace cz {

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  uint32_t p = 0;  // 0 for Q

  static FieldSpec rationals() { return {}; }
  // Throws InvalidInput unless p is a prime below 2^31.
  static FieldSpec prime(uint64_t p);
  // Accepts "Q", "F7", "GF(7)", "7".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::Rationals; }
  // 0 for Q.
  uint32_t characteristic() const { return p; }
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

bool is_prime(uint64_t n);

inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
uint32_t mod_inv(uint32_t a, uint32_t p);
// Residue of an arbitrary integer.
uint32_t mod_reduce(const mpz_class& z, uint32_t p);
uint32_t mod_reduce(long v, uint32_t p);

class Scalar {
 public:
  Scalar() = default;  // 0 in Q
  Scalar(const FieldSpec& f, long v);
  Scalar(const FieldSpec& f, const mpq_class& v);
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0L); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1L); }
  static Scalar from_residue(uint32_t p, uint32_t r);
  // "a/b", "a", or "a mod p". For F_p, rationals are mapped by a * b^-1.
  static Scalar parse(std::string_view text, const FieldSpec& f);

  FieldSpec field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  // Q only.
  const mpq_class& q() const { return q_; }
  // F_p only.
  uint32_t residue() const { return r_; }

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inv() const;
  Scalar pow(unsigned e) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  std::string str() const;

 private:
  void check_same(const Scalar& b) const;

  uint32_t p_ = 0;
  uint32_t r_ = 0;
  mpq_class q_;
};

}  // namespace cz

#endif  // CENTRALIZER_SCALAR_HPP_
