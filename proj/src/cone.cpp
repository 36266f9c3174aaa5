#include "mdzeta/cone.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace mdzeta {

RealCone make_real_cone(const FieldSpec& field, const FieldElement& mu, const FieldElement& nu) {
  if (field.signature != Signature::Real)
    fail(Errc::WrongSignature, "real cone requires a real field");
  if (!(mu.field == field) || !(nu.field == field))
    fail(Errc::FieldMismatch, "generators from a different field");
  if (!is_totally_positive(mu)) fail(Errc::NotTotallyPositive, "mu is not totally positive");
  if (!is_totally_positive(nu)) fail(Errc::NotTotallyPositive, "nu is not totally positive");
  // Rational independence: the coordinate determinant must not vanish.
  __int128 det = (__int128)mu.x * nu.y - (__int128)mu.y * nu.x;
  if (det == 0) fail(Errc::DependentGenerators, "mu and nu are rationally dependent");
  return RealCone{field, mu, nu};
}

UpperCone make_upper_cone(const FieldSpec& field) {
  if (field.signature != Signature::Imaginary)
    fail(Errc::WrongSignature, "C+ requires an imaginary field");
  return UpperCone{field};
}

std::vector<ConeElement> enumerate_real(const RealCone& cone, const Truncation& trunc,
                                        EnumOrder order) {
  if (trunc.kind != TruncKind::Shell)
    fail(Errc::DomainMismatch, "real cones are truncated by shell");
  std::vector<ConeElement> out;
  std::int64_t S = trunc.value;
  if (S < 2) return out;
  out.reserve((size_t)(S * (S - 1) / 2));
  for (std::int64_t s = 2; s <= S; ++s) {
    for (std::int64_t m = 1; m < s; ++m) {
      std::int64_t n = s - m;
      FieldElement e{cone.field, cone.mu.x * m + cone.nu.x * n, cone.mu.y * m + cone.nu.y * n};
      out.push_back(ConeElement{e, m, n});
    }
  }
  if (order == EnumOrder::NormOrder) {
    std::stable_sort(out.begin(), out.end(), [](const ConeElement& a, const ConeElement& b) {
      return std::tuple(norm(a.element), a.m, a.n) < std::tuple(norm(b.element), b.m, b.n);
    });
  }
  return out;
}

Region classify_imaginary(const FieldSpec& field, const FieldElement& a) {
  if (field.signature != Signature::Imaginary)
    fail(Errc::WrongSignature, "classify_imaginary requires an imaginary field");
  if (!(a.field == field)) fail(Errc::FieldMismatch, "element from a different field");
  if (a.x == 0 && a.y == 0) return Region::Zero;
  int im = imag_sign(a);
  if (im > 0) return Region::Plus;
  if (im < 0) return Region::Minus;
  return a.x > 0 ? Region::Plus : Region::Minus;
}

std::vector<FieldElement> enumerate_imaginary(const FieldSpec& field, const Truncation& trunc) {
  if (field.signature != Signature::Imaginary)
    fail(Errc::WrongSignature, "C+ enumeration requires an imaginary field");
  if (trunc.kind != TruncKind::Radius)
    fail(Errc::DomainMismatch, "C+ is truncated by radius");
  std::int64_t R = trunc.value;
  std::vector<FieldElement> out;
  if (R < 1) return out;
  std::int64_t r2 = R * R;

  // |alpha_1|^2 equals the integer norm, so the radius cut is exact.
  // Coordinate bounds: in the Sqrt basis |y| <= R/sqrt(|d|); in the
  // half-trace basis Im(alpha_1) = y*sqrt(|d|)/2.
  std::int64_t absd = -field.d;
  std::int64_t ymax = field.basis == BasisKind::Sqrt
                          ? (std::int64_t)std::floor((double)R / std::sqrt((double)absd)) + 1
                          : (std::int64_t)std::floor(2.0 * R / std::sqrt((double)absd)) + 1;
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> keyed;
  for (std::int64_t y = 0; y <= ymax; ++y) {
    for (std::int64_t x = -R - std::llabs(y); x <= R + std::llabs(y); ++x) {
      FieldElement e{field, x, y};
      std::int64_t n = norm(e);
      if (n == 0 || n > r2) continue;
      if (classify_imaginary(field, e) != Region::Plus) continue;
      keyed.emplace_back(n, x, y);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  out.reserve(keyed.size());
  for (auto& [n, x, y] : keyed) out.push_back(FieldElement{field, x, y});
  return out;
}

RealComparison cone_compare(const ConeElement& a, const ConeElement& b) {
  auto sgn = [](std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  return RealComparison{sgn(b.m - a.m), sgn(b.n - a.n)};
}

Region cone_compare(const FieldSpec& field, const FieldElement& a, const FieldElement& b) {
  return classify_imaginary(field, sub(b, a));
}

}  // namespace mdzeta
