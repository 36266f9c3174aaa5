#include "mdzeta/shuffle.hpp"

#include "mdzeta/errors.hpp"

namespace mdzeta {

std::vector<std::vector<int>> interleavings(int p, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  cur.reserve(p + q);
  // first-factor slots chosen before second-factor ones at each branch
  auto rec = [&](auto&& self, int a, int b) -> void {
    if (a == 0 && b == 0) {
      out.push_back(cur);
      return;
    }
    if (a > 0) {
      cur.push_back(0);
      self(self, a - 1, b);
      cur.pop_back();
    }
    if (b > 0) {
      cur.push_back(1);
      self(self, a, b - 1);
      cur.pop_back();
    }
  };
  rec(rec, p, q);
  return out;
}

std::vector<AxisFactor> axis_scan(const AxisWord& word) {
  std::vector<AxisFactor> factors;
  int active = 0;
  for (const Slot& slot : word) {
    if (slot.kind == SlotKind::Source) {
      active |= 1 << slot.factor;
    } else if (active == 0) {
      fail(Errc::MalformedDiagram, "integrator before any source");
    }
    if (!factors.empty() && factors.back().gens == active)
      factors.back().exponent += 1;
    else
      factors.push_back(AxisFactor{active, 1});
  }
  return factors;
}

MdzvSymbol diagram_to_symbol(const ShuffleDiagram& d) {
  auto f1 = axis_scan(d.axis1);
  auto f2 = axis_scan(d.axis2);
  if (f1.size() != 2 || f2.size() != 2 || f1[1].gens != 3 || f2[1].gens != 3)
    fail(Errc::MalformedDiagram, "axis does not reduce to lone + combined factors");
  int lone1 = f1[0].gens, lone2 = f2[0].gens;
  MdzvVariant v = lone1 == lone2 ? MdzvVariant::Sup1 : MdzvVariant::SupRho;
  return MdzvSymbol::depth2(v, f1[0].exponent, f1[1].exponent, f2[0].exponent, f2[1].exponent);
}

namespace {

AxisWord factor_axis_word(int exponent, int factor) {
  AxisWord w;
  w.push_back(Slot{SlotKind::Source, factor});
  for (int i = 1; i < exponent; ++i) w.push_back(Slot{SlotKind::Integrator, factor});
  return w;
}

AxisWord merge(const AxisWord& a, const AxisWord& b, const std::vector<int>& pattern) {
  AxisWord out;
  out.reserve(a.size() + b.size());
  size_t ia = 0, ib = 0;
  for (int pick : pattern) out.push_back(pick == 0 ? a[ia++] : b[ib++]);
  return out;
}

}  // namespace

DiagramExpansion integral_shuffle_diagrams(std::pair<int, int> e1, std::pair<int, int> e2) {
  auto [a, c] = e1;
  auto [b, d] = e2;
  if (a < 1 || b < 1 || c < 1 || d < 1)
    fail(Errc::ParseError, "shuffle exponents must be positive");
  AxisWord a1f1 = factor_axis_word(a, 0), a1f2 = factor_axis_word(b, 1);
  AxisWord a2f1 = factor_axis_word(c, 0), a2f2 = factor_axis_word(d, 1);
  auto pats1 = interleavings(a, b);
  auto pats2 = interleavings(c, d);

  DiagramExpansion out;
  out.diagrams.reserve(pats1.size() * pats2.size());
  for (const auto& p1 : pats1) {
    AxisWord axis1 = merge(a1f1, a1f2, p1);
    for (const auto& p2 : pats2) {
      ShuffleDiagram diag{axis1, merge(a2f1, a2f2, p2)};
      out.combo.add(diagram_to_symbol(diag), Rational(1));
      out.diagrams.push_back(std::move(diag));
    }
  }
  return out;
}

LinearCombo integral_shuffle(std::pair<int, int> e1, std::pair<int, int> e2) {
  return integral_shuffle_diagrams(e1, e2).combo;
}

namespace {

std::vector<SlotKind> mzv_word(const MzvSymbol& s) {
  std::vector<SlotKind> w;
  for (int m : s.exponents) {
    w.push_back(SlotKind::Source);
    for (int i = 1; i < m; ++i) w.push_back(SlotKind::Integrator);
  }
  return w;
}

MzvSymbol decode_mzv_word(const std::vector<SlotKind>& w) {
  MzvSymbol s;
  for (SlotKind k : w) {
    if (k == SlotKind::Source)
      s.exponents.push_back(1);
    else if (s.exponents.empty())
      fail(Errc::MalformedDiagram, "integrator before any source");
    else
      s.exponents.back() += 1;
  }
  return s;
}

}  // namespace

LinearCombo mzv_shuffle(const MzvSymbol& s1, const MzvSymbol& s2) {
  LinearCombo out;
  if (s1.exponents.empty() || s2.exponents.empty()) {
    // empty word is the unit
    out.add(s1.exponents.empty() ? s2 : s1, Rational(1));
    return out;
  }
  if (!s1.admissible() || !s2.admissible())
    fail(Errc::Divergent, "shuffle requires admissible factors");
  auto w1 = mzv_word(s1), w2 = mzv_word(s2);
  for (const auto& pat : interleavings((int)w1.size(), (int)w2.size())) {
    std::vector<SlotKind> merged;
    merged.reserve(pat.size());
    size_t i = 0, j = 0;
    for (int pick : pat) merged.push_back(pick == 0 ? w1[i++] : w2[j++]);
    out.add(decode_mzv_word(merged), Rational(1));
  }
  return out;
}

}  // namespace mdzeta
