#include <doctest.h>

#include <numeric>

#include "mdzeta/shuffle.hpp"

using namespace mdzeta;

namespace {

// Independent merge enumerator for the oracle side: builds every
// order-preserving interleaving of two explicit strings via bit masks.
std::vector<std::string> brute_merges(const std::string& a, const std::string& b) {
  std::vector<std::string> out;
  size_t n = a.size() + b.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if ((size_t)std::popcount(mask) != b.size()) continue;
    std::string merged;
    size_t ia = 0, ib = 0;
    bool ok = true;
    for (size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        if (ib >= b.size()) { ok = false; break; }
        merged += b[ib++];
      } else {
        if (ia >= a.size()) { ok = false; break; }
        merged += a[ia++];
      }
    }
    if (ok) out.push_back(merged);
  }
  return out;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

AxisWord word(std::initializer_list<std::pair<char, int>> slots) {
  AxisWord w;
  for (auto [kind, factor] : slots)
    w.push_back(Slot{kind == 'S' ? SlotKind::Source : SlotKind::Integrator, factor});
  return w;
}

}  // namespace

TEST_CASE("interleaving counts") {
  CHECK(interleavings(1, 1).size() == 2);
  CHECK(interleavings(2, 2).size() == 6);
  CHECK(interleavings(0, 5).size() == 1);
  CHECK(interleavings(5, 0).size() == 1);
  CHECK(interleavings(0, 0).size() == 1);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q)
      CHECK((std::int64_t)interleavings(p, q).size() == binom(p + q, p));
}

TEST_CASE("interleavings agree with the brute-force merge oracle") {
  auto pats = interleavings(2, 3);
  std::vector<std::string> merged;
  for (auto& p : pats) {
    std::string s;
    size_t ia = 0, ib = 0;
    for (int pick : p) s += pick == 0 ? "ab"[ia++] - 'a' + 'A' : "xyz"[ib++];
    merged.push_back(s);
  }
  auto expect = brute_merges("AB", "xyz");
  std::sort(merged.begin(), merged.end());
  std::sort(expect.begin(), expect.end());
  CHECK(merged == expect);
}

TEST_CASE("axis_scan reproduces the table factors") {
  // [Src a, Int, Src b, Int] -> a^2 (a+b)^2
  auto f = axis_scan(word({{'S', 0}, {'I', 0}, {'S', 1}, {'I', 1}}));
  CHECK(f == std::vector<AxisFactor>{{1, 2}, {3, 2}});

  // [Src a, Src b, Int, Int] -> a^1 (a+b)^3
  f = axis_scan(word({{'S', 0}, {'S', 1}, {'I', 0}, {'I', 1}}));
  CHECK(f == std::vector<AxisFactor>{{1, 1}, {3, 3}});

  // [Src b, Src a, Int, Int] -> b^1 (a+b)^3
  f = axis_scan(word({{'S', 1}, {'S', 0}, {'I', 0}, {'I', 1}}));
  CHECK(f == std::vector<AxisFactor>{{2, 1}, {3, 3}});

  CHECK_THROWS_AS(axis_scan(word({{'I', 0}, {'S', 0}})), Error);
}

TEST_CASE("diagram_to_symbol canonicalization") {
  AxisWord s_then_i = word({{'S', 0}, {'I', 0}, {'S', 1}, {'I', 1}});
  CHECK(diagram_to_symbol({s_then_i, s_then_i}) ==
        MdzvSymbol::depth2(MdzvVariant::Sup1, 2, 2, 2, 2));

  // lone generators differ on the two axes -> rho type
  AxisWord ab = word({{'S', 0}, {'S', 1}, {'I', 0}, {'I', 1}});
  AxisWord ba = word({{'S', 1}, {'S', 0}, {'I', 0}, {'I', 1}});
  CHECK(diagram_to_symbol({ab, ba}) == MdzvSymbol::depth2(MdzvVariant::SupRho, 1, 3, 1, 3));

  // Table (1,2) first entry: axis1 lone beta (1,3), axis2 lone alpha (2,2)
  CHECK(diagram_to_symbol({ba, s_then_i}) ==
        MdzvSymbol::depth2(MdzvVariant::SupRho, 1, 3, 2, 2));

  // both axes keyed by beta relabels to Sup1
  AxisWord beta_first = word({{'S', 1}, {'I', 1}, {'S', 0}, {'I', 0}});
  CHECK(diagram_to_symbol({beta_first, beta_first}) ==
        MdzvSymbol::depth2(MdzvVariant::Sup1, 2, 2, 2, 2));
}

TEST_CASE("integral shuffle of (2;2)x(2;2)") {
  auto expansion = integral_shuffle_diagrams({2, 2}, {2, 2});
  CHECK(expansion.diagrams.size() == 36);

  LinearCombo expect;
  auto d2 = MdzvSymbol::depth2;
  expect.add(d2(MdzvVariant::Sup1, 2, 2, 2, 2), Rational(2));
  expect.add(d2(MdzvVariant::Sup1, 1, 3, 1, 3), Rational(8));
  expect.add(d2(MdzvVariant::Sup1, 1, 3, 2, 2), Rational(4));
  expect.add(d2(MdzvVariant::Sup1, 2, 2, 1, 3), Rational(4));
  expect.add(d2(MdzvVariant::SupRho, 2, 2, 2, 2), Rational(2));
  expect.add(d2(MdzvVariant::SupRho, 1, 3, 1, 3), Rational(8));
  expect.add(d2(MdzvVariant::SupRho, 1, 3, 2, 2), Rational(4));
  expect.add(d2(MdzvVariant::SupRho, 2, 2, 1, 3), Rational(4));
  CHECK(expansion.combo == expect);
}

TEST_CASE("integral shuffle properties") {
  for (auto [e1, e2] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
           {{2, 2}, {2, 2}}, {{1, 1}, {1, 1}}, {{1, 2}, {2, 1}}, {{2, 3}, {1, 2}}}) {
    auto [a, c] = e1;
    auto [b, d] = e2;
    LinearCombo combo = integral_shuffle(e1, e2);

    // symmetry under factor swap
    CHECK(combo == integral_shuffle(e2, e1));

    // every diagram contributes exactly one symbol
    CHECK(combo.coefficient_sum() == Rational(binom(a + b, a) * binom(c + d, c)));

    // weight conservation per axis
    for (auto& [sym, coeff] : combo.terms()) {
      const auto& m = std::get<MdzvSymbol>(sym);
      CHECK(m.upper[0] + m.upper[1] == a + b);
      CHECK(m.lower[0] + m.lower[1] == c + d);
      CHECK(coeff > Rational(0));
    }
  }
}

TEST_CASE("shuffle of (1;1)x(1;1) has the four double-logarithm terms") {
  LinearCombo combo = integral_shuffle({1, 1}, {1, 1});
  LinearCombo expect;
  expect.add(MdzvSymbol::depth2(MdzvVariant::Sup1, 1, 1, 1, 1), Rational(2));
  expect.add(MdzvSymbol::depth2(MdzvVariant::SupRho, 1, 1, 1, 1), Rational(2));
  CHECK(combo == expect);
  CHECK(combo.coefficient_sum() == Rational(4));
}

TEST_CASE("mzv shuffle") {
  // zeta(2)^2 = 2 zeta(2,2) + 4 zeta(1,3)
  LinearCombo z22 = mzv_shuffle(MzvSymbol{{2}}, MzvSymbol{{2}});
  LinearCombo expect;
  expect.add(MzvSymbol{{2, 2}}, Rational(2));
  expect.add(MzvSymbol{{1, 3}}, Rational(4));
  CHECK(z22 == expect);

  // zeta(2) zeta(3) = 6 zeta(1,4) + 3 zeta(2,3) + zeta(3,2),
  // frozen from the merge oracle over the explicit five-slot words
  LinearCombo z23 = mzv_shuffle(MzvSymbol{{2}}, MzvSymbol{{3}});
  LinearCombo expect23;
  expect23.add(MzvSymbol{{1, 4}}, Rational(6));
  expect23.add(MzvSymbol{{2, 3}}, Rational(3));
  expect23.add(MzvSymbol{{3, 2}}, Rational(1));
  CHECK(z23 == expect23);

  // identity case
  LinearCombo unit = mzv_shuffle(MzvSymbol{{3}}, MzvSymbol{{}});
  CHECK(unit.size() == 1);
  CHECK(unit.coeff(MzvSymbol{{3}}) == Rational(1));

  CHECK_THROWS_AS(mzv_shuffle(MzvSymbol{{1}}, MzvSymbol{{2}}), Error);
}

TEST_CASE("mzv shuffle coefficient sums") {
  // total interleavings of the slot words
  auto weight = [](const MzvSymbol& s) {
    return std::accumulate(s.exponents.begin(), s.exponents.end(), 0);
  };
  for (auto [s1, s2] : std::vector<std::pair<MzvSymbol, MzvSymbol>>{
           {MzvSymbol{{2}}, MzvSymbol{{2}}},
           {MzvSymbol{{2}}, MzvSymbol{{1, 3}}},
           {MzvSymbol{{1, 2}}, MzvSymbol{{2}}}}) {
    LinearCombo combo = mzv_shuffle(s1, s2);
    CHECK(combo.coefficient_sum() == Rational(binom(weight(s1) + weight(s2), weight(s1))));
    for (auto& [sym, coeff] : combo.terms()) {
      CHECK(std::get<MzvSymbol>(sym).admissible());
      CHECK(weight(std::get<MzvSymbol>(sym)) == weight(s1) + weight(s2));
    }
  }
}
