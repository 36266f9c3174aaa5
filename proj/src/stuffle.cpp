#include "mdzeta/stuffle.hpp"

#include "mdzeta/errors.hpp"

namespace mdzeta {

namespace {

// st(A, B): merge two increasing index chains; at each step the smallest
// remaining index comes from A, from B, or from both at once.
void mzv_stuffle_rec(const std::vector<int>& a, size_t ia, const std::vector<int>& b, size_t ib,
                     std::vector<int>& prefix, LinearCombo& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add(MzvSymbol{prefix}, Rational(1));
    return;
  }
  if (ia < a.size()) {
    prefix.push_back(a[ia]);
    mzv_stuffle_rec(a, ia + 1, b, ib, prefix, out);
    prefix.pop_back();
  }
  if (ib < b.size()) {
    prefix.push_back(b[ib]);
    mzv_stuffle_rec(a, ia, b, ib + 1, prefix, out);
    prefix.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    prefix.push_back(a[ia] + b[ib]);
    mzv_stuffle_rec(a, ia + 1, b, ib + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

LinearCombo mzv_stuffle(const MzvSymbol& s1, const MzvSymbol& s2) {
  if (!s1.exponents.empty() && !s2.exponents.empty() && (!s1.admissible() || !s2.admissible()))
    fail(Errc::Divergent, "stuffle requires admissible factors");
  LinearCombo out;
  std::vector<int> prefix;
  mzv_stuffle_rec(s1.exponents, 0, s2.exponents, 0, prefix, out);
  return out;
}

LinearCombo stuffle_real(std::pair<int, int> e1, std::pair<int, int> e2) {
  auto [a, c] = e1;
  auto [b, d] = e2;
  if (a < 1 || b < 1 || c < 1 || d < 1)
    fail(Errc::ParseError, "stuffle exponents must be positive");
  LinearCombo out;
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub1, a, b, c, d), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub01, a, b, c, d), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::SubRho, a, b, c, d), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub10, a, b, c, d), Rational(1));
  out.add(MdzvSymbol::plain(a + b, c + d), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub10, b, a, d, c), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::SubRho, b, a, d, c), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub01, b, a, d, c), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sub1, b, a, d, c), Rational(1));
  return out;
}

namespace {

bool sup_variant(const MdzvSymbol& s) {
  return s.variant == MdzvVariant::Plain || s.variant == MdzvVariant::Sup1;
}

// (a1,b1; d2,e2) x (c1; f2), both over the C+ total order. The five regions
// of alpha < beta against gamma:
//   alpha<beta<gamma, alpha<beta=gamma, alpha<gamma<beta, gamma=alpha<beta,
//   gamma<alpha<beta.
LinearCombo stuffle_imag_21(const MdzvSymbol& s2d, const MdzvSymbol& s1d) {
  int a = s2d.upper[0], b = s2d.upper[1], c = s1d.upper[0];
  int d = s2d.lower[0], e = s2d.lower[1], f = s1d.lower[0];
  LinearCombo out;
  out.add(MdzvSymbol::sup1_depth3(a, b, c, d, e, f), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sup1, a, b + c, d, e + f), Rational(1));
  out.add(MdzvSymbol::sup1_depth3(a, c, b, d, f, e), Rational(1));
  out.add(MdzvSymbol::depth2(MdzvVariant::Sup1, a + c, b, d + f, e), Rational(1));
  out.add(MdzvSymbol::sup1_depth3(c, a, b, f, d, e), Rational(1));
  return out;
}

}  // namespace

LinearCombo stuffle_imaginary(const MdzvSymbol& s1, const MdzvSymbol& s2) {
  if (!sup_variant(s1) || !sup_variant(s2))
    fail(Errc::DomainMismatch, "imaginary stuffle takes z/z1 symbols");
  int d1 = s1.depth(), d2 = s2.depth();
  if (d1 == 1 && d2 == 1) {
    int a = s1.upper[0], c = s1.lower[0];
    int b = s2.upper[0], d = s2.lower[0];
    LinearCombo out;
    out.add(MdzvSymbol::depth2(MdzvVariant::Sup1, a, b, c, d), Rational(1));
    out.add(MdzvSymbol::plain(a + b, c + d), Rational(1));
    out.add(MdzvSymbol::depth2(MdzvVariant::Sup1, b, a, d, c), Rational(1));
    return out;
  }
  if (d1 == 2 && d2 == 1) return stuffle_imag_21(s1, s2);
  if (d1 == 1 && d2 == 2) return stuffle_imag_21(s2, s1);
  fail(Errc::UnsupportedDepth, "imaginary stuffle supports depth 1x1 and 2x1 only");
}

LinearCombo lemma_rewrite(const LinearCombo& c) {
  LinearCombo out;
  for (auto& [sym, coeff] : c.terms()) {
    if (const auto* m = std::get_if<MdzvSymbol>(&sym);
        m && m->variant == MdzvVariant::Sub1 && m->depth() == 2) {
      out.add(MdzvSymbol::depth2(MdzvVariant::Sup1, m->upper[0], m->upper[1], m->lower[0],
                                 m->lower[1]),
              coeff);
    } else {
      out.add(sym, coeff);
    }
  }
  return out;
}

}  // namespace mdzeta
