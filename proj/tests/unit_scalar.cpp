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

#include <doctest.h>

#include <random>

#include "centralizer/scalar.hpp"

using namespace cz;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  long num = static_cast<long>(rng() % 41) - 20;
  if (!f.is_rational()) return Scalar(f, num);
  long den = static_cast<long>(rng() % 9) + 1;
  return Scalar(f, mpq_class(num, den));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  auto q = FieldSpec::rationals();
  CHECK(Scalar::parse("1/2", q) + Scalar::parse("1/3", q) == Scalar::parse("5/6", q));
  CHECK(Scalar::parse("2/4", q).str() == "1/2");
  CHECK(Scalar::parse("-6/-4", q).str() == "3/2");
  CHECK(Scalar::parse("7", q).str() == "7");
  Scalar x = Scalar::parse("10/4", q);
  CHECK(Scalar::parse(x.str(), q) == x);
}

TEST_CASE("prime field arithmetic") {
  auto f5 = FieldSpec::prime(5);
  CHECK(Scalar(f5, 3L) * Scalar(f5, 4L) == Scalar(f5, 2L));
  CHECK(Scalar(f5, -1L).str() == "4 mod 5");
  CHECK(Scalar::parse("4 mod 5", f5) == Scalar(f5, 4L));
  CHECK(Scalar::parse("1/2", f5) == Scalar(f5, 3L));
  CHECK(Scalar(f5, 1L) / Scalar(f5, 3L) == Scalar(f5, 2L));
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("F7").characteristic() == 7);
  CHECK(FieldSpec::parse("GF(11)").characteristic() == 11);
  CHECK(FieldSpec::parse("13").characteristic() == 13);
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("errors") {
  auto q = FieldSpec::rationals();
  auto f5 = FieldSpec::prime(5);
  try {
    (void)(Scalar(q, 1L) + Scalar(f5, 1L));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  try {
    (void)(Scalar(q, 1L) / Scalar(q, 0L));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  try {
    (void)(Scalar(f5, 1L) / Scalar(f5, 5L));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::prime(2147483647)}) {
    for (int t = 0; t < 300; ++t) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * (Scalar::one(f) / a) == Scalar::one(f));
      CHECK(Scalar::parse(a.str(), f) == a);
    }
  }
}

TEST_CASE("large prime products use widening multiplication") {
  auto f = FieldSpec::prime(2147483647);
  Scalar x(f, 2147483646L);
  CHECK(x * x == Scalar::one(f));
}
