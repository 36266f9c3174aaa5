#include <doctest.h>

#include <cmath>
#include <random>

#include "mdzeta/field.hpp"

using namespace mdzeta;

namespace {

// Independent long-double Newton square root, used to cross-check the exact
// decimal oracle to the precision a long double carries.
long double newton_sqrt(long double n) {
  long double x = std::sqrt((double)n);
  for (int i = 0; i < 4; ++i) x = 0.5L * (x + n / x);
  return x;
}

}  // namespace

TEST_CASE("make_field classifies d") {
  FieldSpec q2 = make_field(2);
  CHECK(q2.signature == Signature::Real);
  CHECK(q2.basis == BasisKind::Sqrt);

  FieldSpec qi = make_field(-1);
  CHECK(qi.signature == Signature::Imaginary);
  CHECK(qi.basis == BasisKind::Sqrt);

  FieldSpec q5 = make_field(5);
  CHECK(q5.signature == Signature::Real);
  CHECK(q5.basis == BasisKind::HalfTrace);

  CHECK(make_field(-3).basis == BasisKind::HalfTrace);  // -3 = 1 mod 4
  CHECK(make_field(-7).basis == BasisKind::HalfTrace);

  CHECK_THROWS_AS(make_field(4), Error);
  CHECK_THROWS_AS(make_field(12), Error);
  CHECK_THROWS_AS(make_field(-4), Error);
  CHECK_THROWS_AS(make_field(0), Error);
  CHECK_THROWS_AS(make_field(1), Error);
}

TEST_CASE("arithmetic is exact in the integral basis") {
  FieldSpec q2 = make_field(2);
  FieldElement one_plus = make_element(q2, 1, 1);
  FieldElement one_minus = make_element(q2, 1, -1);
  CHECK(add(one_plus, one_minus) == make_element(q2, 2, 0));

  // (2+w)(2-w) = 4 - 2 = 2
  CHECK(mul(make_element(q2, 2, 1), make_element(q2, 2, -1)) == make_element(q2, 2, 0));

  // golden ratio: w^2 = w + 1
  FieldSpec q5 = make_field(5);
  CHECK(mul(make_element(q5, 0, 1), make_element(q5, 0, 1)) == make_element(q5, 1, 1));

  FieldSpec q3 = make_field(3);
  CHECK_THROWS_AS(add(make_element(q2, 1, 0), make_element(q3, 1, 0)), Error);
}

TEST_CASE("galois conjugation") {
  FieldSpec q2 = make_field(2);
  CHECK(galois_conj(make_element(q2, 5, 1)) == make_element(q2, 5, -1));

  FieldSpec q5 = make_field(5);
  // conj of (1+sqrt5)/2 is (1-sqrt5)/2 = 1 - w
  CHECK(galois_conj(make_element(q5, 0, 1)) == make_element(q5, 1, -1));

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-50, 50);
  for (std::int64_t d : {2, 5, -1, -3, 13, -7}) {
    FieldSpec f = make_field(d);
    for (int i = 0; i < 50; ++i) {
      FieldElement a = make_element(f, coef(rng), coef(rng));
      CHECK(galois_conj(galois_conj(a)) == a);
      CHECK(galois_conj(make_element(f, a.x, 0)) == make_element(f, a.x, 0));
    }
  }
}

TEST_CASE("norm is multiplicative and conjugation-invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(-30, 30);
  for (std::int64_t d : {2, 3, 5, -1, -2, -3, -7}) {
    FieldSpec f = make_field(d);
    for (int i = 0; i < 60; ++i) {
      FieldElement a = make_element(f, coef(rng), coef(rng));
      FieldElement b = make_element(f, coef(rng), coef(rng));
      CHECK(norm(a) == norm(galois_conj(a)));
      CHECK(norm(mul(a, b)) == norm(a) * norm(b));
    }
  }

  FieldSpec q2 = make_field(2);
  CHECK(norm(make_element(q2, 2, 1)) == 2);
  // closed form m^2 - 2 n^2
  CHECK(norm(make_element(q2, 7, 3)) == 49 - 2 * 9);

  FieldSpec qi = make_field(-1);
  CHECK(norm(make_element(qi, 1, 1)) == 2);
}

TEST_CASE("sqrt_decimal matches the frozen expansion and an independent check") {
  // frozen from the exact digit expansion of sqrt(2)
  std::string s2 = sqrt_decimal(2, 40);
  CHECK(s2 == "1.4142135623730950488016887242096980785696");
  std::string s5 = sqrt_decimal(5, 30);
  CHECK(s5 == "2.236067977499789696409173668731");
  CHECK(sqrt_decimal(4, 6) == "2.000000");
  CHECK(sqrt_decimal(0, 4) == "0.0000");

  long double ref = newton_sqrt(2.0L);
  CHECK(std::abs((long double)std::strtold(s2.c_str(), nullptr) - ref) < 1e-18L);
}

TEST_CASE("embeddings") {
  FieldSpec q2 = make_field(2);
  EmbeddingPair e = embed(make_element(q2, 5, 1));
  CHECK(e.a1.imag() == 0.0);
  CHECK(e.a2.imag() == 0.0);
  CHECK(e.a1.real() == doctest::Approx(6.41421356237309504880).epsilon(1e-15));
  CHECK(e.a2.real() == doctest::Approx(3.58578643762690495120).epsilon(1e-15));

  EmbeddingPair unit = embed(make_element(q2, 1, 0));
  CHECK(unit.a1 == std::complex<double>(1.0, 0.0));
  CHECK(unit.a2 == std::complex<double>(1.0, 0.0));

  FieldSpec qi = make_field(-1);
  EmbeddingPair g = embed(make_element(qi, 1, 1));
  CHECK(g.a1 == std::complex<double>(1.0, 1.0));
  CHECK(g.a2 == std::complex<double>(1.0, -1.0));
}

TEST_CASE("embed respects arithmetic and conjugation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> coef(-40, 40);
  for (std::int64_t d : {2, 5, -1, -3}) {
    FieldSpec f = make_field(d);
    for (int i = 0; i < 40; ++i) {
      FieldElement a = make_element(f, coef(rng), coef(rng));
      FieldElement b = make_element(f, coef(rng), coef(rng));
      EmbeddingPair ea = embed(a, 12), eb = embed(b, 12), es = embed(add(a, b), 12);
      CHECK(std::abs(es.a1 - (ea.a1 + eb.a1)) <= 1e-10 * (1.0 + std::abs(es.a1)));
      if (f.signature == Signature::Imaginary) {
        CHECK(ea.a2 == std::conj(ea.a1));
      } else {
        // embedding of the Galois conjugate, up to rounding of the two
        // evaluation orders
        EmbeddingPair ec = embed(galois_conj(a), 12);
        CHECK(std::abs(ea.a2 - ec.a1) <= 1e-13 * (1.0 + std::abs(ea.a2)));
      }
    }
  }
}

TEST_CASE("total positivity decided exactly") {
  FieldSpec q2 = make_field(2);
  CHECK(is_totally_positive(make_element(q2, 5, 1)));
  CHECK_FALSE(is_totally_positive(make_element(q2, 1, 1)));  // 1 - sqrt2 < 0
  CHECK_FALSE(is_totally_positive(make_element(q2, 0, 0)));
  CHECK(is_totally_positive(make_element(q2, 2, 1)));
  CHECK(is_totally_positive(make_element(q2, 2, -1)));

  // near-degenerate: 99970002 - 7071*9999*sqrt(2) is positive but tiny
  // relative to its size; float embeddings would be at risk
  FieldSpec q5 = make_field(5);
  CHECK(is_totally_positive(make_element(q5, 1, 0)));
  CHECK_FALSE(is_totally_positive(make_element(q5, 0, 1)));  // (1-sqrt5)/2 < 0

  FieldSpec qi = make_field(-1);
  CHECK_THROWS_AS(is_totally_positive(make_element(qi, 1, 0)), Error);

  // agreement with the float embeddings on random elements
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> coef(-60, 60);
  for (int i = 0; i < 200; ++i) {
    FieldElement a = make_element(q2, coef(rng), coef(rng));
    EmbeddingPair e = embed(a);
    bool expected = e.a1.real() > 0.0 && e.a2.real() > 0.0;
    if (a.x != 0 || a.y != 0) CHECK(is_totally_positive(a) == expected);
  }
}
