#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "mdzeta/errors.hpp"

namespace mdzeta {

enum class Signature { Real, Imaginary };

/// Integral basis of the ring of integers: {1, sqrt(d)} when d = 2,3 mod 4,
/// {1, (1+sqrt(d))/2} when d = 1 mod 4.
enum class BasisKind { Sqrt, HalfTrace };

struct FieldSpec {
  std::int64_t d = 0;
  Signature signature = Signature::Real;
  BasisKind basis = BasisKind::Sqrt;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Builds the quadratic field Q(sqrt(d)). d must be squarefree and not 0 or 1.
FieldSpec make_field(std::int64_t d);

/// x + y*omega with exact integer coordinates in the integral basis.
struct FieldElement {
  FieldSpec field;
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement make_element(const FieldSpec& field, std::int64_t x, std::int64_t y);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);

/// The nontrivial field automorphism, an involution on integer coordinates.
FieldElement galois_conj(const FieldElement& a);

/// N(a) = a1 * a2, exact in integer arithmetic.
std::int64_t norm(const FieldElement& a);

/// Exact sign (-1, 0, +1) of the embedding sigma_i(a), i in {1, 2}.
/// Real fields only; decided by integer comparisons, never by floats.
int embedding_sign(const FieldElement& a, int which);

/// Both embeddings positive. Real fields only.
bool is_totally_positive(const FieldElement& a);

/// Sign of Im(sigma_1(a)) for imaginary fields (equals sign of y).
int imag_sign(const FieldElement& a);

struct EmbeddingPair {
  std::complex<double> a1;
  std::complex<double> a2;
  int precision = 0;  // decimal digits used for the omega oracle
};

/// Numerical embeddings a1 = x + y*omega_1, a2 = x + y*omega_2, with omega
/// computed through the software square-root oracle at `precision` digits
/// and then rounded to double.
EmbeddingPair embed(const FieldElement& a, int precision = 30);

/// Decimal expansion of sqrt(n) for n >= 0 with `digits` fractional digits,
/// computed by exact integer square root (no floating point involved).
std::string sqrt_decimal(std::uint64_t n, int digits);

}  // namespace mdzeta
