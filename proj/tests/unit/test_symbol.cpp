#include <doctest.h>

#include <random>

#include "mdzeta/symbol.hpp"

using namespace mdzeta;

TEST_CASE("rational arithmetic") {
  Rational half(1, 2), third(1, 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK((half * third) == Rational(1, 6));
  CHECK((half - half).is_zero());
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("7/4") == Rational(7, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational(7, 4).to_string() == "7/4");
  CHECK(Rational(-2).to_string() == "-2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("symbol text round trips") {
  for (const char* text : {"z(4;4)", "z1(2,2;2,2)", "zr(1,3;2,2)", "s1(2,2;2,2)",
                           "sr(2,2;2,2)", "s01(2,2;2,2)", "s10(2,2;2,2)", "mzv(1,3)",
                           "z1(1,2,3;4,5,6)", "mzv(2)"}) {
    CHECK(to_string(parse_symbol(text)) == text);
  }
  CHECK(to_string(parse_symbol(" z1( 2 ,2 ; 2, 2 )")) == "z1(2,2;2,2)");

  CHECK_THROWS_AS(parse_symbol("zz(1;1)"), Error);
  CHECK_THROWS_AS(parse_symbol("z1(2,2;2)"), Error);
  CHECK_THROWS_AS(parse_symbol("z(2,2;2,2)"), Error);
  CHECK_THROWS_AS(parse_symbol("z1(2;2)"), Error);
  CHECK_THROWS_AS(parse_symbol("zr(1,2,3;4,5,6)"), Error);
  CHECK_THROWS_AS(parse_symbol("z1(0,1;1,1)"), Error);
  CHECK_THROWS_AS(parse_symbol("z(2;2) extra"), Error);
}

TEST_CASE("combo text round trips") {
  const char* text = "z(4;4) + 2*z1(2,2;2,2) - 1/4*mzv(4)";
  LinearCombo c = parse_combo(text);
  CHECK(c.size() == 3);
  CHECK(c.coeff(parse_symbol("z1(2,2;2,2)")) == Rational(2));
  CHECK(c.coeff(parse_symbol("mzv(4)")) == Rational(-1, 4));
  CHECK(parse_combo(to_string(c)) == c);
  CHECK(parse_combo("0").is_zero());
  CHECK(to_string(LinearCombo{}) == "0");
}

TEST_CASE("combo algebra laws") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> exp(1, 4), pick(0, 6), num(-5, 5);
  std::uniform_int_distribution<std::int64_t> den(1, 4);

  auto random_combo = [&]() {
    LinearCombo c;
    for (int i = 0; i < 6; ++i) {
      MdzvVariant v = static_cast<MdzvVariant>(pick(rng));
      Symbol s = v == MdzvVariant::Plain
                     ? Symbol(MdzvSymbol::plain(exp(rng), exp(rng)))
                     : Symbol(MdzvSymbol::depth2(v, exp(rng), exp(rng), exp(rng), exp(rng)));
      c.add(s, Rational(num(rng), den(rng)));
    }
    return c;
  };

  for (int trial = 0; trial < 30; ++trial) {
    LinearCombo a = random_combo(), b = random_combo(), c = random_combo();
    CHECK((a + b) == (b + a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(0)).is_zero());
    CHECK(a.scaled(Rational(2)) == (a + a));
    // no stored zero coefficients
    LinearCombo cancelled = a - a + b;
    for (auto& [sym, coeff] : cancelled.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("random combos survive the text round trip") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> exp(1, 6), kind(0, 8), num(-9, 9), den(1, 6), len(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    LinearCombo c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Symbol s;
      int k = kind(rng);
      if (k == 8) {
        MzvSymbol m{{exp(rng), exp(rng) + 1}};
        s = m;
      } else if (k == 0) {
        s = MdzvSymbol::plain(exp(rng), exp(rng));
      } else if (k == 1) {
        s = MdzvSymbol::sup1_depth3(exp(rng), exp(rng), exp(rng), exp(rng), exp(rng), exp(rng));
      } else {
        s = MdzvSymbol::depth2(static_cast<MdzvVariant>(k - 1), exp(rng), exp(rng), exp(rng),
                               exp(rng));
      }
      c.add(s, Rational(num(rng), den(rng)));
    }
    CAPTURE(to_string(c));
    CHECK(parse_combo(to_string(c)) == c);
  }
}

TEST_CASE("convergence guard") {
  CHECK(MdzvSymbol::plain(2, 2).guaranteed_convergent());
  CHECK(MdzvSymbol::plain(1, 1).guaranteed_convergent());
  CHECK_FALSE(MdzvSymbol::plain(1, 0).guaranteed_convergent());
  CHECK(MdzvSymbol::depth2(MdzvVariant::Sup1, 1, 2, 1, 2).guaranteed_convergent());
  CHECK_FALSE(MdzvSymbol::depth2(MdzvVariant::Sup1, 1, 1, 1, 1).guaranteed_convergent());
  CHECK(MdzvSymbol::depth2(MdzvVariant::Sup1, 2, 2, 2, 2).guaranteed_convergent());
  CHECK_FALSE(MdzvSymbol::sup1_depth3(1, 1, 1, 1, 1, 1).guaranteed_convergent());

  CHECK(MzvSymbol{{1, 3}}.admissible());
  CHECK_FALSE(MzvSymbol{{3, 1}}.admissible());
  CHECK_FALSE(MzvSymbol{{}}.admissible());
}

TEST_CASE("canonical ordering puts the depth-1 value first") {
  LinearCombo c;
  c.add(MdzvSymbol::depth2(MdzvVariant::Sup1, 2, 2, 2, 2), Rational(2));
  c.add(MdzvSymbol::plain(4, 4), Rational(1));
  CHECK(to_string(c) == "z(4;4) + 2*z1(2,2;2,2)");
}
