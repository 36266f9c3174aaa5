#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdzeta/rational.hpp"

namespace mdzeta {

/// The multiple Dedekind zeta variants. For depth 2 with exponents
/// (a,b;c,d), alpha and beta ranging over the cone:
///   Sup1    1 / (alpha_1^a (alpha_1+beta_1)^b alpha_2^c (alpha_2+beta_2)^d)
///   SupRho  1 / (beta_1^a  (alpha_1+beta_1)^b alpha_2^c (alpha_2+beta_2)^d)
///   Sub1    mu(alpha) < mu(beta), nu(alpha) < nu(beta) of
///           1 / (alpha_1^a beta_1^b alpha_2^c beta_2^d)
///   SubRho  mu(alpha) > mu(beta), nu(alpha) < nu(beta), same summand
///   Sub01   mu(alpha) = mu(beta), nu(alpha) < nu(beta), same summand
///   Sub10   mu(alpha) < mu(beta), nu(alpha) = nu(beta), same summand
/// Plain is depth 1: 1 / (alpha_1^a alpha_2^c).
enum class MdzvVariant { Plain, Sup1, SupRho, Sub1, SubRho, Sub01, Sub10 };

struct MdzvSymbol {
  MdzvVariant variant = MdzvVariant::Plain;
  std::vector<int> upper;  // first-embedding exponents
  std::vector<int> lower;  // second-embedding exponents

  int depth() const { return (int)upper.size(); }

  /// Library convergence guard: a1+c2 >= 2 and, at depth 2, b1+d2 >= 3.
  /// Outside the guard evaluation still runs but carries a warning.
  bool guaranteed_convergent() const;

  static MdzvSymbol plain(int a, int c) { return {MdzvVariant::Plain, {a}, {c}}; }
  static MdzvSymbol depth2(MdzvVariant v, int a, int b, int c, int d) {
    return {v, {a, b}, {c, d}};
  }
  // Depth-3 symbols arise from the imaginary stuffle of a depth-2 by a
  // depth-1 factor; they are carried for printing only.
  static MdzvSymbol sup1_depth3(int a, int b, int c, int d, int e, int f) {
    return {MdzvVariant::Sup1, {a, b, c}, {d, e, f}};
  }

  friend bool operator==(const MdzvSymbol&, const MdzvSymbol&) = default;
  friend auto operator<=>(const MdzvSymbol&, const MdzvSymbol&) = default;
};

/// Classical multiple zeta value zeta(m_1,...,m_d), indices 0<k_1<...<k_d.
/// Empty exponent list is the unit for the shuffle/stuffle products.
struct MzvSymbol {
  std::vector<int> exponents;

  int depth() const { return (int)exponents.size(); }
  bool admissible() const { return !exponents.empty() && exponents.back() >= 2; }

  friend bool operator==(const MzvSymbol&, const MzvSymbol&) = default;
  friend auto operator<=>(const MzvSymbol&, const MzvSymbol&) = default;
};

using Symbol = std::variant<MdzvSymbol, MzvSymbol>;

bool symbol_less(const Symbol& a, const Symbol& b);

struct SymbolLess {
  bool operator()(const Symbol& a, const Symbol& b) const { return symbol_less(a, b); }
};

/// Finite map symbol -> exact rational coefficient. Zero coefficients are
/// never stored; iteration order is the canonical symbol order.
class LinearCombo {
public:
  using Terms = std::map<Symbol, Rational, SymbolLess>;

  void add(const Symbol& s, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coeff(const Symbol& s) const;
  Rational coefficient_sum() const;

  friend LinearCombo operator+(const LinearCombo& a, const LinearCombo& b);
  friend LinearCombo operator-(const LinearCombo& a, const LinearCombo& b);
  LinearCombo scaled(const Rational& f) const;

  friend bool operator==(const LinearCombo& a, const LinearCombo& b) {
    return a.terms_ == b.terms_;
  }

private:
  Terms terms_;
};

// Text syntax: z(a;c), z1(a,b;c,d), zr(a,b;c,d), s1(..), sr(..), s01(..),
// s10(..), mzv(m1,...,md); combos as "q1*sym1 + q2*sym2" with rationals p/q.
std::string to_string(const MdzvSymbol& s);
std::string to_string(const MzvSymbol& s);
std::string to_string(const Symbol& s);
std::string to_string(const LinearCombo& c);

Symbol parse_symbol(std::string_view text);
LinearCombo parse_combo(std::string_view text);

}  // namespace mdzeta
