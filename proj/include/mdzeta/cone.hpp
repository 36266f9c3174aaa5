#pragma once

#include <cstdint>
#include <vector>

#include "mdzeta/field.hpp"

namespace mdzeta {

/// C = N{mu, nu}: positive-integer combinations of two totally positive,
/// rationally independent generators of a real quadratic field.
struct RealCone {
  FieldSpec field;
  FieldElement mu;
  FieldElement nu;
};

RealCone make_real_cone(const FieldSpec& field, const FieldElement& mu, const FieldElement& nu);

/// C+ = positive rational integers together with Im(alpha_1) > 0.
struct UpperCone {
  FieldSpec field;
};

UpperCone make_upper_cone(const FieldSpec& field);

/// A real-cone element together with its coordinates: element = m*mu + n*nu.
struct ConeElement {
  FieldElement element;
  std::int64_t m = 0;
  std::int64_t n = 0;
};

enum class TruncKind { Shell, Radius, Cutoff };

struct Truncation {
  TruncKind kind = TruncKind::Shell;
  std::int64_t value = 0;

  static Truncation shell(std::int64_t s) { return {TruncKind::Shell, s}; }
  static Truncation radius(std::int64_t r) { return {TruncKind::Radius, r}; }
  static Truncation cutoff(std::int64_t n) { return {TruncKind::Cutoff, n}; }
};

enum class EnumOrder { ShellOrder, NormOrder };

/// All m,n >= 1 with m+n <= S. ShellOrder sorts by (m+n, m); NormOrder is the
/// same set sorted by (N(alpha), m). Count is S(S-1)/2.
std::vector<ConeElement> enumerate_real(const RealCone& cone, const Truncation& trunc,
                                        EnumOrder order = EnumOrder::ShellOrder);

enum class Region { Plus, Zero, Minus };

/// Exactly one of: a in C+, a = 0, a in C-.
Region classify_imaginary(const FieldSpec& field, const FieldElement& a);

/// All alpha in C+ with |alpha_1| <= R, ordered by (|alpha_1|^2, x, y) with
/// |alpha_1|^2 compared exactly as the integer norm.
std::vector<FieldElement> enumerate_imaginary(const FieldSpec& field, const Truncation& trunc);

/// Pair of trichotomies (sign(m_b - m_a), sign(n_b - n_a)).
struct RealComparison {
  int dmu = 0;
  int dnu = 0;
  friend bool operator==(const RealComparison&, const RealComparison&) = default;
};

RealComparison cone_compare(const ConeElement& a, const ConeElement& b);

/// classify_imaginary(b - a): Plus means a < b in the C+ total order.
Region cone_compare(const FieldSpec& field, const FieldElement& a, const FieldElement& b);

}  // namespace mdzeta
