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

#include "centralizer/scalar.hpp"

#include <cctype>
#include <string>

namespace cz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoSolution: return "NoSolution";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotEmbeddable: return "NotEmbeddable";
    case Errc::BadIdempotent: return "BadIdempotent";
    case Errc::StarNotFixing: return "StarNotFixing";
    case Errc::NonTermination: return "NonTermination";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::CharTooSmall: return "CharTooSmall";
    case Errc::NotSplit: return "NotSplit";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

bool is_precondition(Errc c) {
  switch (c) {
    case Errc::AssertionFailed:
    case Errc::HypothesisFailed:
      return false;
    default:
      return true;
  }
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(Errc::InvalidInput, "field characteristic must be a prime below 2^31, got " +
                                        std::to_string(p));
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = static_cast<uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "Q" || t == "QQ" || t == "0") return rationals();
  std::string digits;
  if (t.rfind("GF(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (!t.empty() && (t[0] == 'F' || t[0] == 'f'))
    digits = t.substr(1);
  else
    digits = t;
  if (digits.empty() || digits.size() > 10) throw Error(Errc::ParseError, "bad field '" + t + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::ParseError, "bad field '" + t + "'");
  return prime(std::stoull(digits));
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }

uint32_t mod_inv(uint32_t a, uint32_t p) {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t mod_reduce(const mpz_class& z, uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<uint32_t>(r.get_ui());
}

uint32_t mod_reduce(long v, uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

Scalar::Scalar(const FieldSpec& f, long v) : p_(f.p) {
  if (p_ == 0)
    q_ = v;
  else
    r_ = mod_reduce(v, p_);
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& v) : p_(f.p) {
  if (p_ == 0) {
    q_ = v;
    q_.canonicalize();
  } else {
    uint32_t den = mod_reduce(v.get_den(), p_);
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
    r_ = mod_mul(mod_reduce(v.get_num(), p_), mod_inv(den, p_), p_);
  }
}

Scalar Scalar::from_residue(uint32_t p, uint32_t r) {
  Scalar s;
  s.p_ = p;
  s.r_ = r % p;
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  auto mod_pos = t.find("mod");
  if (mod_pos != std::string::npos) {
    std::string mod = t.substr(mod_pos + 3);
    if (f.is_rational() || mod != std::to_string(f.p))
      throw Error(Errc::FieldMismatch, "'" + std::string(text) + "' is not in " + f.name());
    t = t.substr(0, mod_pos);
  }
  mpq_class v;
  try {
    if (t.empty()) throw std::invalid_argument("empty");
    for (char c : t)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
        throw std::invalid_argument("bad char");
    if (t[0] == '+') t = t.substr(1);
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("gmp");
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad scalar '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + t + "'");
  v.canonicalize();
  return Scalar(f, v);
}

FieldSpec Scalar::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldSpec::Kind::PrimeField, p_};
}

void Scalar::check_same(const Scalar& b) const {
  if (p_ != b.p_)
    throw Error(Errc::FieldMismatch, field().name() + " vs " + b.field().name());
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same(b);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ + b.q_;
  else
    s.r_ = mod_add(r_, b.r_, p_);
  return s;
}

Scalar Scalar::operator-(const Scalar& b) const {
  check_same(b);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ - b.q_;
  else
    s.r_ = mod_sub(r_, b.r_, p_);
  return s;
}

Scalar Scalar::operator*(const Scalar& b) const {
  check_same(b);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ * b.q_;
  else
    s.r_ = mod_mul(r_, b.r_, p_);
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same(b);
  return *this * b.inv();
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field());
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& b) const {
  if (p_ != b.p_) return false;
  return p_ == 0 ? q_ == b.q_ : r_ == b.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

}  // namespace cz
