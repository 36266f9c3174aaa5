#include "mdzeta/symbol.hpp"

#include <cctype>

#include "mdzeta/errors.hpp"

namespace mdzeta {

bool MdzvSymbol::guaranteed_convergent() const {
  if (depth() < 1 || depth() > 2) return false;
  if (upper[0] + lower[0] < 2) return false;
  if (depth() == 2 && upper[1] + lower[1] < 3) return false;
  return true;
}

bool symbol_less(const Symbol& a, const Symbol& b) {
  // MZV symbols sort before Dedekind ones; within Dedekind symbols the
  // variant order is Plain, Sup1, SupRho, Sub1, SubRho, Sub01, Sub10.
  if (a.index() != b.index()) return a.index() > b.index();
  if (std::holds_alternative<MzvSymbol>(a))
    return std::get<MzvSymbol>(a) < std::get<MzvSymbol>(b);
  return std::get<MdzvSymbol>(a) < std::get<MdzvSymbol>(b);
}

void LinearCombo::add(const Symbol& s, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LinearCombo::coeff(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LinearCombo::coefficient_sum() const {
  Rational total;
  for (auto& [sym, c] : terms_) total += c;
  return total;
}

LinearCombo operator+(const LinearCombo& a, const LinearCombo& b) {
  LinearCombo r = a;
  for (auto& [sym, c] : b.terms_) r.add(sym, c);
  return r;
}

LinearCombo operator-(const LinearCombo& a, const LinearCombo& b) {
  LinearCombo r = a;
  for (auto& [sym, c] : b.terms_) r.add(sym, -c);
  return r;
}

LinearCombo LinearCombo::scaled(const Rational& f) const {
  LinearCombo r;
  if (f.is_zero()) return r;
  for (auto& [sym, c] : terms_) r.add(sym, c * f);
  return r;
}

namespace {

const char* variant_name(MdzvVariant v) {
  switch (v) {
    case MdzvVariant::Plain: return "z";
    case MdzvVariant::Sup1: return "z1";
    case MdzvVariant::SupRho: return "zr";
    case MdzvVariant::Sub1: return "s1";
    case MdzvVariant::SubRho: return "sr";
    case MdzvVariant::Sub01: return "s01";
    case MdzvVariant::Sub10: return "s10";
  }
  return "?";
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const MdzvSymbol& s) {
  return std::string(variant_name(s.variant)) + "(" + join_ints(s.upper) + ";" +
         join_ints(s.lower) + ")";
}

std::string to_string(const MzvSymbol& s) { return "mzv(" + join_ints(s.exponents) + ")"; }

std::string to_string(const Symbol& s) {
  return std::visit([](const auto& x) { return to_string(x); }, s);
}

std::string to_string(const LinearCombo& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [sym, coeff] : c.terms()) {
    Rational a = coeff;
    if (first) {
      if (a < Rational(0)) { out += "-"; a = -a; }
    } else {
      out += a < Rational(0) ? " - " : " + ";
      if (a < Rational(0)) a = -a;
    }
    if (!(a == Rational(1))) out += a.to_string() + "*";
    out += to_string(sym);
    first = false;
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(Errc::ParseError, std::string("expected '") + c + "' in: " + std::string(s));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  std::int64_t integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail(Errc::ParseError, "expected integer in: " + std::string(s));
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
};

std::vector<int> int_list(Cursor& c, char stop1, char stop2) {
  std::vector<int> v;
  v.push_back((int)c.integer());
  while (c.peek() == ',') {
    c.eat(',');
    v.push_back((int)c.integer());
  }
  if (c.peek() != stop1 && c.peek() != stop2)
    fail(Errc::ParseError, "bad exponent list in: " + std::string(c.s));
  return v;
}

Symbol parse_symbol_at(Cursor& c) {
  std::string name = c.ident();
  c.expect('(');
  if (name == "mzv") {
    MzvSymbol s{int_list(c, ')', ')')};
    c.expect(')');
    return s;
  }
  MdzvVariant v;
  if (name == "z") v = MdzvVariant::Plain;
  else if (name == "z1") v = MdzvVariant::Sup1;
  else if (name == "zr") v = MdzvVariant::SupRho;
  else if (name == "s1") v = MdzvVariant::Sub1;
  else if (name == "sr") v = MdzvVariant::SubRho;
  else if (name == "s01") v = MdzvVariant::Sub01;
  else if (name == "s10") v = MdzvVariant::Sub10;
  else fail(Errc::ParseError, "unknown symbol kind: " + name);

  MdzvSymbol s;
  s.variant = v;
  s.upper = int_list(c, ';', ';');
  c.expect(';');
  s.lower = int_list(c, ')', ')');
  c.expect(')');
  if (s.upper.size() != s.lower.size())
    fail(Errc::ParseError, "exponent blocks of unequal depth");
  int d = (int)s.upper.size();
  if (d < 1 || d > 3) fail(Errc::ParseError, "depth must be 1..3");
  if (v == MdzvVariant::Plain && d != 1) fail(Errc::ParseError, "z(a;c) is depth 1");
  if (v != MdzvVariant::Plain && d == 1) fail(Errc::ParseError, "depth-1 symbols use z(a;c)");
  if (d == 3 && v != MdzvVariant::Sup1) fail(Errc::ParseError, "depth 3 exists only for z1");
  for (int e : s.upper)
    if (e < 1) fail(Errc::ParseError, "exponents must be positive");
  for (int e : s.lower)
    if (e < 1) fail(Errc::ParseError, "exponents must be positive");
  return s;
}

}  // namespace

Symbol parse_symbol(std::string_view text) {
  Cursor c{text};
  Symbol s = parse_symbol_at(c);
  if (!c.done()) fail(Errc::ParseError, "trailing input in symbol: " + std::string(text));
  return s;
}

LinearCombo parse_combo(std::string_view text) {
  LinearCombo combo;
  Cursor c{text};
  if (c.done()) return combo;
  if (c.peek() == '0') {  // the zero combo prints as "0"
    Cursor probe = c;
    probe.eat('0');
    if (probe.done()) return combo;
  }
  bool first = true;
  while (!c.done()) {
    Rational sign(1);
    if (c.eat('-')) sign = Rational(-1);
    else if (c.eat('+')) sign = Rational(1);
    else if (!first) fail(Errc::ParseError, "expected + or - in combo: " + std::string(text));

    // optional rational coefficient followed by '*'
    Rational coeff(1);
    c.skip_ws();
    if (c.pos < c.s.size() && (std::isdigit((unsigned char)c.s[c.pos]))) {
      std::int64_t num = c.integer();
      std::int64_t den = 1;
      if (c.eat('/')) den = c.integer();
      coeff = Rational(num, den);
      c.expect('*');
    }
    combo.add(parse_symbol_at(c), sign * coeff);
    first = false;
  }
  return combo;
}

}  // namespace mdzeta
