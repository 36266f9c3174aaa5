#include "mdzeta/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mdzeta/errors.hpp"
#include "mdzeta/kahan.hpp"

namespace mdzeta {

namespace {

template <typename T>
T ipow(T base, int e) {
  T r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Enumerated and embedded summation domain, built once per evaluation.
struct EmbeddedDomain {
  bool real_field = false;
  std::vector<std::complex<double>> e1, e2;
  std::vector<std::int64_t> m, n;  // real-cone coordinates
  std::vector<char> in_half;       // member of the halved truncation
  std::vector<std::int64_t> shell; // m+n (real) for tail bookkeeping
  Truncation trunc;
};

EmbeddedDomain embed_real(const RealCone& cone, const Truncation& trunc, EnumOrder order) {
  EmbeddedDomain ed;
  ed.real_field = true;
  ed.trunc = trunc;
  auto elems = enumerate_real(cone, trunc, order);
  EmbeddingPair w = embed(make_element(cone.field, 0, 1));
  double w1 = w.a1.real(), w2 = w.a2.real();
  std::int64_t half = trunc.value / 2;
  ed.e1.reserve(elems.size());
  for (const ConeElement& ce : elems) {
    ed.e1.emplace_back(double(ce.element.x) + double(ce.element.y) * w1, 0.0);
    ed.e2.emplace_back(double(ce.element.x) + double(ce.element.y) * w2, 0.0);
    ed.m.push_back(ce.m);
    ed.n.push_back(ce.n);
    ed.shell.push_back(ce.m + ce.n);
    ed.in_half.push_back(ce.m + ce.n <= half ? 1 : 0);
  }
  return ed;
}

EmbeddedDomain embed_upper(const UpperCone& cone, const Truncation& trunc) {
  EmbeddedDomain ed;
  ed.real_field = false;
  ed.trunc = trunc;
  auto elems = enumerate_imaginary(cone.field, trunc);
  EmbeddingPair w = embed(make_element(cone.field, 0, 1));
  std::int64_t half = trunc.value / 2;
  std::int64_t half2 = half * half;
  ed.e1.reserve(elems.size());
  for (const FieldElement& e : elems) {
    ed.e1.push_back(double(e.x) + double(e.y) * w.a1);
    ed.e2.push_back(double(e.x) + double(e.y) * w.a2);
    ed.in_half.push_back(norm(e) <= half2 ? 1 : 0);
  }
  return ed;
}

EmbeddedDomain embed_domain(const EvalDomain& domain, const Truncation& trunc,
                            EnumOrder order = EnumOrder::ShellOrder) {
  if (const auto* rc = std::get_if<RealCone>(&domain)) return embed_real(*rc, trunc, order);
  if (const auto* uc = std::get_if<UpperCone>(&domain)) return embed_upper(*uc, trunc);
  fail(Errc::DomainMismatch, "cone symbols need a cone domain");
}

void add_convergence_warning(EvalResult& r, const MdzvSymbol& s) {
  if (!s.guaranteed_convergent())
    r.warnings.push_back("unverified convergence for " + to_string(s));
}

// ---- depth 1 ----------------------------------------------------------

template <typename Scalar>
std::pair<std::complex<double>, double> depth1_sums(const EmbeddedDomain& ed, int a, int c,
                                                    auto pick) {
  KahanComplexSum full;
  KahanSum last_band;  // |terms| on the outermost shell / annulus
  std::int64_t band = 0;
  for (size_t i = 0; i < ed.e1.size(); ++i) {
    Scalar term = Scalar(1) / (ipow(pick(ed.e1[i]), a) * ipow(pick(ed.e2[i]), c));
    full.add(std::complex<double>(term));
    std::int64_t key;
    if (ed.real_field) {
      key = ed.shell[i];
    } else {
      double n2 = std::norm(ed.e1[i]);
      key = (std::int64_t)std::llround(std::ceil(std::sqrt(n2) - 1e-9));
    }
    if (key > band) { band = key; last_band = KahanSum{}; }
    if (key == band) last_band.add(std::abs(std::complex<double>(term)));
  }
  return {full.result(), last_band.result()};
}

EvalResult eval_depth1_impl(const EvalDomain& domain, int a, int c, const Truncation& trunc) {
  EmbeddedDomain ed = embed_domain(domain, trunc);
  EvalResult r;
  r.truncation = trunc;
  r.term_count = (std::int64_t)ed.e1.size();
  add_convergence_warning(r, MdzvSymbol::plain(a, c));

  std::complex<double> value;
  double last_band = 0.0;
  if (ed.real_field) {
    auto [v, lb] = depth1_sums<double>(ed, a, c, [](std::complex<double> z) { return z.real(); });
    value = v;
    last_band = lb;
  } else {
    auto [v, lb] = depth1_sums<std::complex<double>>(ed, a, c, [](std::complex<double> z) { return z; });
    value = v;
    last_band = lb;
  }
  r.value = value;

  // Integral comparison on the outermost shell / radius: terms on band s
  // scale like s^(1-w) (real, w = a+c) or the annulus sum like r^(1-w).
  int w = a + c;
  double T = (double)trunc.value;
  if (w > 2)
    r.tail_estimate = last_band * T / (w - 2);
  else
    r.tail_estimate = last_band * T;
  return r;
}

// ---- depth 2 ----------------------------------------------------------

struct PairAccum {
  KahanComplexSum full, half;
  std::int64_t count = 0;
};

// Independent (alpha, beta) pairs per the zeta^1 / zeta^rho denominators.
template <typename Scalar>
PairAccum sup_pair_sum(const EmbeddedDomain& ed, const MdzvSymbol& s, auto pick) {
  const int a = s.upper[0], b = s.upper[1], c = s.lower[0], d = s.lower[1];
  const size_t P = ed.e1.size();
  const bool rho = s.variant == MdzvVariant::SupRho;

  std::vector<Scalar> lone_pow(P), outer2_pow(P);
  for (size_t i = 0; i < P; ++i) {
    lone_pow[i] = ipow(pick(ed.e1[i]), a);
    outer2_pow[i] = ipow(pick(ed.e2[i]), c);
  }

  PairAccum acc;
  for (size_t i = 0; i < P; ++i) {
    const Scalar x2 = outer2_pow[i];
    const Scalar e1i = pick(ed.e1[i]), e2i = pick(ed.e2[i]);
    const bool half_i = ed.in_half[i];
    for (size_t j = 0; j < P; ++j) {
      Scalar s1 = e1i + pick(ed.e1[j]);
      Scalar s2 = e2i + pick(ed.e2[j]);
      Scalar denom = (rho ? lone_pow[j] : lone_pow[i]) * ipow(s1, b) * x2 * ipow(s2, d);
      Scalar term = Scalar(1) / denom;
      std::complex<double> tc(term);
      acc.full.add(tc);
      if (half_i && ed.in_half[j]) acc.half.add(tc);
      ++acc.count;
    }
  }
  return acc;
}

// Coordinate-constrained (alpha, beta) pairs per the prefixed variants.
PairAccum sub_pair_sum(const EmbeddedDomain& ed, const MdzvSymbol& s) {
  const int a = s.upper[0], b = s.upper[1], c = s.lower[0], d = s.lower[1];
  const size_t P = ed.e1.size();

  std::vector<double> a1p(P), b1p(P), a2p(P), b2p(P);
  for (size_t i = 0; i < P; ++i) {
    a1p[i] = ipow(ed.e1[i].real(), a);
    b1p[i] = ipow(ed.e1[i].real(), b);
    a2p[i] = ipow(ed.e2[i].real(), c);
    b2p[i] = ipow(ed.e2[i].real(), d);
  }

  auto keep = [&](size_t i, size_t j) {
    switch (s.variant) {
      case MdzvVariant::Sub1: return ed.m[i] < ed.m[j] && ed.n[i] < ed.n[j];
      case MdzvVariant::SubRho: return ed.m[i] > ed.m[j] && ed.n[i] < ed.n[j];
      case MdzvVariant::Sub01: return ed.m[i] == ed.m[j] && ed.n[i] < ed.n[j];
      case MdzvVariant::Sub10: return ed.m[i] < ed.m[j] && ed.n[i] == ed.n[j];
      default: return false;
    }
  };

  PairAccum acc;
  for (size_t i = 0; i < P; ++i) {
    const bool half_i = ed.in_half[i];
    for (size_t j = 0; j < P; ++j) {
      if (!keep(i, j)) continue;
      double term = 1.0 / (a1p[i] * b1p[j] * a2p[i] * b2p[j]);
      acc.full.add({term, 0.0});
      if (half_i && ed.in_half[j]) acc.half.add({term, 0.0});
      ++acc.count;
    }
  }
  return acc;
}

bool is_sub_variant(MdzvVariant v) {
  return v == MdzvVariant::Sub1 || v == MdzvVariant::SubRho || v == MdzvVariant::Sub01 ||
         v == MdzvVariant::Sub10;
}

}  // namespace

EvalResult eval_depth1(const EvalDomain& domain, int a, int c, const Truncation& trunc) {
  return eval_depth1_impl(domain, a, c, trunc);
}

EvalResult eval_depth2(const EvalDomain& domain, const MdzvSymbol& s, const Truncation& trunc) {
  if (s.depth() == 1) return eval_depth1(domain, s.upper[0], s.lower[0], trunc);
  if (s.depth() != 2) fail(Errc::UnsupportedDepth, "numeric evaluation supports depth <= 2");

  if (is_sub_variant(s.variant) && !std::holds_alternative<RealCone>(domain))
    fail(Errc::DomainMismatch, "coordinate-constrained variants need a real cone");
  if (std::holds_alternative<MzvDomain>(domain))
    fail(Errc::DomainMismatch, "Dedekind symbols need a cone domain");

  EmbeddedDomain ed = embed_domain(domain, trunc);
  EvalResult r;
  r.truncation = trunc;
  add_convergence_warning(r, s);

  PairAccum acc;
  if (is_sub_variant(s.variant)) {
    acc = sub_pair_sum(ed, s);
  } else if (ed.real_field) {
    acc = sup_pair_sum<double>(ed, s, [](std::complex<double> z) { return z.real(); });
  } else {
    acc = sup_pair_sum<std::complex<double>>(ed, s, [](std::complex<double> z) { return z; });
  }
  r.value = acc.full.result();
  r.term_count = acc.count;
  // Halved-truncation delta as the tail proxy; the depth-2 families decay
  // like T^-2 or faster, so the last doubling bounds the remainder's order.
  r.tail_estimate = std::abs(r.value - acc.half.result());
  return r;
}

EvalResult eval_mzv(const MzvSymbol& s, std::int64_t cutoff) {
  if (!s.admissible()) fail(Errc::Divergent, "inadmissible multiple zeta symbol " + to_string(s));
  if (s.depth() > 3) fail(Errc::UnsupportedDepth, "mzv evaluation supports depth <= 3");
  std::int64_t N = std::max<std::int64_t>(cutoff, 0);

  EvalResult r;
  r.truncation = Truncation::cutoff(N);

  // Nested prefix recurrences, run one doubling past the cutoff so the
  // remainder of the outermost sum can be measured rather than modeled
  // (the inner partial sums keep growing, which defeats a naive integral
  // bound at depth >= 2).
  KahanSum inner1, inner2, total;
  double value_at_N = 0.0;
  const auto& e = s.exponents;
  for (std::int64_t k = 1; k <= 2 * N; ++k) {
    double k1 = std::pow((double)k, -(double)e[0]);
    if (s.depth() == 1) {
      total.add(k1);
    } else {
      double k2 = std::pow((double)k, -(double)e[1]);
      if (s.depth() == 2) {
        total.add(inner1.result() * k2);
        inner1.add(k1);
      } else {
        double k3 = std::pow((double)k, -(double)e[2]);
        total.add(inner2.result() * k3);
        inner2.add(inner1.result() * k2);
        inner1.add(k1);
      }
    }
    if (k == N) value_at_N = total.result();
  }
  r.value = {value_at_N, 0.0};

  int last = e.back();
  if (N <= 0) {
    r.tail_estimate = 1.0;
  } else if (s.depth() == 1) {
    // integral comparison, an upper bound for decreasing terms
    r.tail_estimate = std::pow((double)N, 1.0 - last) / (last - 1);
  } else {
    // geometric continuation of the measured doubling, with headroom for
    // the log-growth of the inner sums
    double delta = total.result() - value_at_N;
    r.tail_estimate = delta / (1.0 - std::pow(2.0, 1.0 - last)) * 1.25;
  }

  if (s.depth() == 1) r.term_count = N;
  else if (s.depth() == 2) r.term_count = N * (N - 1) / 2;
  else r.term_count = N * (N - 1) * (N - 2) / 6;
  return r;
}

EvalResult eval_symbol(const EvalDomain& domain, const Symbol& s, const Truncation& trunc) {
  if (const auto* mz = std::get_if<MzvSymbol>(&s)) {
    if (trunc.kind != TruncKind::Cutoff)
      fail(Errc::DomainMismatch, "mzv symbols are truncated by cutoff");
    return eval_mzv(*mz, trunc.value);
  }
  const auto& m = std::get<MdzvSymbol>(s);
  if (m.depth() == 1) return eval_depth1(domain, m.upper[0], m.lower[0], trunc);
  return eval_depth2(domain, m, trunc);
}

EvalResult eval_combo(const EvalDomain& domain, const LinearCombo& combo,
                      const Truncation& trunc) {
  EvalResult r;
  r.truncation = trunc;
  KahanComplexSum value;
  KahanSum tail;
  for (auto& [sym, coeff] : combo.terms()) {
    EvalResult part = eval_symbol(domain, sym, trunc);
    double cf = coeff.to_double();
    value.add(cf * part.value);
    tail.add(std::abs(cf) * part.tail_estimate);
    r.term_count += part.term_count;
    for (auto& w : part.warnings) r.warnings.push_back(w);
  }
  r.value = value.result();
  r.tail_estimate = tail.result();
  return r;
}

double tail_estimate(const EvalDomain& domain, const Symbol& s, const Truncation& trunc) {
  return eval_symbol(domain, s, trunc).tail_estimate;
}

// ---- Dedekind polylogarithms ------------------------------------------

namespace {

double f0_at(const EmbeddedDomain& ed, double u1, double u2) {
  KahanSum sum;
  for (size_t i = 0; i < ed.e1.size(); ++i)
    sum.add(std::exp(-ed.e1[i].real() * u1 - ed.e2[i].real() * u2));
  return sum.result();
}

double fm_at(const EmbeddedDomain& ed, int m, double u1, double u2) {
  KahanSum sum;
  for (size_t i = 0; i < ed.e1.size(); ++i) {
    double nrm = ed.e1[i].real() * ed.e2[i].real();
    sum.add(std::exp(-ed.e1[i].real() * u1 - ed.e2[i].real() * u2) / ipow(nrm, m));
  }
  return sum.result();
}

}  // namespace

EvalResult eval_f(const RealCone& cone, const PolylogSpec& spec, const PolylogPoint& point,
                  const Truncation& trunc) {
  if (cone.field.signature != Signature::Real)
    fail(Errc::WrongSignature, "exponential cone series are defined on real cones");
  if (spec.kind == PolylogKind::F0 && (point.u1 <= 0.0 || point.u2 <= 0.0))
    fail(Errc::DomainMismatch, "f0 needs u1, u2 > 0");
  if (point.u1 < 0.0 || point.u2 < 0.0) fail(Errc::DomainMismatch, "negative evaluation point");

  EmbeddedDomain ed = embed_domain(EvalDomain(cone), trunc);
  EvalResult r;
  r.truncation = trunc;

  if (spec.kind == PolylogKind::F0 || spec.kind == PolylogKind::Fm) {
    int m = spec.kind == PolylogKind::F0 ? 0 : spec.m;
    KahanSum sum;
    double band_cur = 0.0, band_prev = 0.0;
    std::int64_t band = 0;
    for (size_t i = 0; i < ed.e1.size(); ++i) {
      double a1 = ed.e1[i].real(), a2 = ed.e2[i].real();
      double term = std::exp(-a1 * point.u1 - a2 * point.u2) / ipow(a1 * a2, m);
      sum.add(term);
      if (ed.shell[i] > band) { band = ed.shell[i]; band_prev = band_cur; band_cur = 0.0; }
      band_cur += std::abs(term);
      ++r.term_count;
    }
    r.value = {sum.result(), 0.0};
    double ratio = band_prev > 0.0 ? band_cur / band_prev : 1.0;
    r.tail_estimate = ratio < 0.95 ? band_cur * ratio / (1.0 - ratio)
                                   : band_cur * (double)trunc.value;
    return r;
  }

  // F11 / F12 pair sums
  int k = spec.kind == PolylogKind::F11 ? 1 : 2;
  KahanSum full, half;
  const size_t P = ed.e1.size();
  for (size_t i = 0; i < P; ++i) {
    double a1 = ed.e1[i].real(), a2 = ed.e2[i].real();
    double na = a1 * a2;
    for (size_t j = 0; j < P; ++j) {
      double s1 = a1 + ed.e1[j].real(), s2 = a2 + ed.e2[j].real();
      double term = std::exp(-s1 * point.u1 - s2 * point.u2) / (na * ipow(s1 * s2, k));
      full.add(term);
      if (ed.in_half[i] && ed.in_half[j]) half.add(term);
      ++r.term_count;
    }
  }
  r.value = {full.result(), 0.0};
  r.tail_estimate = std::abs(full.result() - half.result());
  return r;
}

// ---- quadrature oracles ------------------------------------------------

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fb, fm, eps, 48);
}

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on the recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

QuadratureCheck quadrature_lemma_check(double k, double u) {
  if (k <= 0.0) fail(Errc::DomainMismatch, "decay rate must be positive");
  // t = u - ln(1-s) turns the tail integral into exp(-k u) (1-s)^(k-1) on [0,1).
  auto g = [k, u](double s) {
    double onems = 1.0 - s;
    if (onems <= 0.0) return 0.0;
    return std::exp(-k * (u - std::log(onems))) / onems;
  };
  QuadratureCheck q;
  q.numeric_integral = integrate(g, 0.0, 1.0 - 1e-14, 1e-13);
  q.closed_form = std::exp(-k * u) / k;
  q.abs_error = std::abs(q.numeric_integral - q.closed_form);
  return q;
}

QuadratureCheck quadrature_f11_check(const RealCone& cone, double v1, double v2,
                                     const Truncation& trunc) {
  if (v1 <= 0.0 || v2 <= 0.0) fail(Errc::DomainMismatch, "f11 check needs v1, v2 > 0");
  EmbeddedDomain ed = embed_domain(EvalDomain(cone), trunc);

  int nq = 48;
  std::vector<double> gx, gw;
  gauss_legendre(nq, gx, gw);
  // per-axis map u = v - ln(1-s), s in [0,1)
  std::vector<double> s(nq), jac(nq);
  for (int i = 0; i < nq; ++i) {
    s[i] = 0.5 * (gx[i] + 1.0);
    jac[i] = 0.5 / (1.0 - s[i]);  // includes the [-1,1] -> [0,1] scale
  }
  KahanSum integral;
  for (int i = 0; i < nq; ++i) {
    double u1 = v1 - std::log(1.0 - s[i]);
    for (int j = 0; j < nq; ++j) {
      double u2 = v2 - std::log(1.0 - s[j]);
      double f0 = f0_at(ed, u1, u2);
      double f1 = fm_at(ed, 1, u1, u2);
      integral.add(gw[i] * gw[j] * jac[i] * jac[j] * f1 * f0);
    }
  }

  EvalResult sum_form = eval_f(cone, {PolylogKind::F11, 0}, {v1, v2}, trunc);
  QuadratureCheck q;
  q.numeric_integral = integral.result();
  q.closed_form = sum_form.value.real();
  q.abs_error = std::abs(q.numeric_integral - q.closed_form);
  return q;
}

std::string domain_description(const EvalDomain& domain) {
  if (const auto* rc = std::get_if<RealCone>(&domain)) {
    auto gen = [](const FieldElement& e) {
      std::string s = std::to_string(e.x);
      if (e.y == 1) s += "+w";
      else if (e.y == -1) s += "-w";
      else if (e.y > 0) s += "+" + std::to_string(e.y) + "*w";
      else if (e.y < 0) s += "-" + std::to_string(-e.y) + "*w";
      return s;
    };
    return "Q(sqrt(" + std::to_string(rc->field.d) + ")), cone N{" + gen(rc->mu) + ", " +
           gen(rc->nu) + "}";
  }
  if (const auto* uc = std::get_if<UpperCone>(&domain))
    return "Q(sqrt(" + std::to_string(uc->field.d) + ")), C+";
  return "classical multiple zeta sums";
}

}  // namespace mdzeta
