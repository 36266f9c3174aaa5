#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mdzeta/cone.hpp"
#include "mdzeta/symbol.hpp"

namespace mdzeta {

struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  Truncation truncation;
  double tail_estimate = 0.0;  // heuristic, not certified
  std::int64_t term_count = 0;
  std::vector<std::string> warnings;
};

/// Classical MZV sums need no field; symbols are truncated by index cutoff.
struct MzvDomain {
  friend bool operator==(const MzvDomain&, const MzvDomain&) = default;
};

using EvalDomain = std::variant<RealCone, UpperCone, MzvDomain>;

/// Partial sum over indices <= N with an integral-comparison tail estimate
/// on the outermost index. Depth up to 3 via prefix recurrences.
EvalResult eval_mzv(const MzvSymbol& s, std::int64_t cutoff);

/// Sum of 1/(alpha_1^a alpha_2^c) over the truncated domain.
EvalResult eval_depth1(const EvalDomain& domain, int a, int c, const Truncation& trunc);

/// Depth-2 variants. Sup1/SupRho iterate independent (alpha, beta) pairs;
/// Sub* iterate coordinate-constrained pairs and require a real cone.
EvalResult eval_depth2(const EvalDomain& domain, const MdzvSymbol& s, const Truncation& trunc);

EvalResult eval_symbol(const EvalDomain& domain, const Symbol& s, const Truncation& trunc);

/// Coefficient-weighted sum of per-symbol evaluations; the tail estimate is
/// the coefficient-weighted sum of per-symbol tails.
EvalResult eval_combo(const EvalDomain& domain, const LinearCombo& combo, const Truncation& trunc);

double tail_estimate(const EvalDomain& domain, const Symbol& s, const Truncation& trunc);

enum class PolylogKind { F0, Fm, F11, F12 };

struct PolylogSpec {
  PolylogKind kind = PolylogKind::Fm;
  int m = 1;  // order for Fm
};

struct PolylogPoint {
  double u1 = 0.0;
  double u2 = 0.0;
};

/// Exponential cone series on a real cone:
///   F0   sum exp(-a1 u1 - a2 u2)
///   Fm   sum exp(-a1 u1 - a2 u2) / N(alpha)^m
///   F11  sum over pairs exp(-(alpha+beta) forms) / (N(alpha) N(alpha+beta))
///   F12  same with N(alpha) N(alpha+beta)^2
/// F0 needs u1, u2 > 0; the others allow u -> 0 when the limit converges.
EvalResult eval_f(const RealCone& cone, const PolylogSpec& spec, const PolylogPoint& point,
                  const Truncation& trunc);

struct QuadratureCheck {
  double numeric_integral = 0.0;
  double closed_form = 0.0;
  double abs_error = 0.0;
};

/// Adaptive quadrature of the exponential tail integral from u against its
/// closed form exp(-k u)/k.
QuadratureCheck quadrature_lemma_check(double k, double u);

/// Tensor-product quadrature of the double integral of f1*f0 over
/// (v1,inf) x (v2,inf) against the closed pair-sum form.
QuadratureCheck quadrature_f11_check(const RealCone& cone, double v1, double v2,
                                     const Truncation& trunc);

std::string domain_description(const EvalDomain& domain);

}  // namespace mdzeta
