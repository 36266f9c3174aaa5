#include "mdzeta/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace mdzeta {

namespace {

bool squarefree(std::int64_t d) {
  std::int64_t n = std::llabs(d);
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::int64_t checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) fail(Errc::ParseError, std::string("integer overflow in ") + what);
  return (std::int64_t)v;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field == b.field)) fail(Errc::FieldMismatch, "elements of different fields");
}

// Little-endian base 2^32 unsigned integer, just enough for the exact
// square-root oracle (numbers around 10^70).
struct BigUint {
  std::vector<std::uint32_t> limb;

  static BigUint from_u64(std::uint64_t v) {
    BigUint r;
    while (v) { r.limb.push_back((std::uint32_t)v); v >>= 32; }
    return r;
  }

  void trim() { while (!limb.empty() && limb.back() == 0) limb.pop_back(); }
  bool is_zero() const { return limb.empty(); }

  static int cmp(const BigUint& a, const BigUint& b) {
    if (a.limb.size() != b.limb.size()) return a.limb.size() < b.limb.size() ? -1 : 1;
    for (size_t i = a.limb.size(); i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i] ? -1 : 1;
    }
    return 0;
  }

  static BigUint add(const BigUint& a, const BigUint& b) {
    BigUint r;
    size_t n = std::max(a.limb.size(), b.limb.size());
    std::uint64_t carry = 0;
    for (size_t i = 0; i < n || carry; ++i) {
      std::uint64_t s = carry;
      if (i < a.limb.size()) s += a.limb[i];
      if (i < b.limb.size()) s += b.limb[i];
      r.limb.push_back((std::uint32_t)s);
      carry = s >> 32;
    }
    return r;
  }

  // requires a >= b
  static BigUint sub(const BigUint& a, const BigUint& b) {
    BigUint r;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.limb.size(); ++i) {
      std::int64_t s = (std::int64_t)a.limb[i] - borrow - (i < b.limb.size() ? b.limb[i] : 0);
      borrow = 0;
      if (s < 0) { s += ((std::int64_t)1 << 32); borrow = 1; }
      r.limb.push_back((std::uint32_t)s);
    }
    r.trim();
    return r;
  }

  static BigUint mul_small(const BigUint& a, std::uint64_t f) {
    BigUint r;
    std::uint64_t carry = 0;
    for (std::uint32_t v : a.limb) {
      unsigned __int128 p = (unsigned __int128)v * f + carry;
      r.limb.push_back((std::uint32_t)p);
      carry = (std::uint64_t)(p >> 32);
    }
    while (carry) { r.limb.push_back((std::uint32_t)carry); carry >>= 32; }
    return r;
  }

  std::uint32_t divmod_small(std::uint32_t div) {
    std::uint64_t rem = 0;
    for (size_t i = limb.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | limb[i];
      limb[i] = (std::uint32_t)(cur / div);
      rem = cur % div;
    }
    trim();
    return (std::uint32_t)rem;
  }

  BigUint shr1() const {
    BigUint r;
    r.limb.resize(limb.size());
    std::uint32_t carry = 0;
    for (size_t i = limb.size(); i-- > 0;) {
      r.limb[i] = (limb[i] >> 1) | (carry << 31);
      carry = limb[i] & 1;
    }
    r.trim();
    return r;
  }

  int bit_length() const {
    if (limb.empty()) return 0;
    int top = 32;
    std::uint32_t h = limb.back();
    while (top > 0 && !(h & (1u << (top - 1)))) --top;
    return (int)(limb.size() - 1) * 32 + top;
  }

  static BigUint one_shl(int i) {
    BigUint r;
    r.limb.assign((size_t)i / 32 + 1, 0);
    r.limb.back() = 1u << (i % 32);
    return r;
  }
};

// floor(sqrt(n)) by the classical bitwise method.
BigUint isqrt_big(BigUint n) {
  BigUint res;
  int b = n.bit_length();
  if (b == 0) return res;
  int shift = (b - 1) & ~1;
  BigUint bit = BigUint::one_shl(shift);
  while (!bit.is_zero()) {
    BigUint t = BigUint::add(res, bit);
    if (BigUint::cmp(n, t) >= 0) {
      n = BigUint::sub(n, t);
      res = BigUint::add(res.shr1(), bit);
    } else {
      res = res.shr1();
    }
    bit = bit.shr1().shr1();
  }
  return res;
}

std::string to_decimal(BigUint v) {
  if (v.is_zero()) return "0";
  std::string out;
  while (!v.is_zero()) {
    std::uint32_t r = v.divmod_small(1000000000u);
    char buf[16];
    if (v.is_zero())
      std::snprintf(buf, sizeof buf, "%u", r);
    else
      std::snprintf(buf, sizeof buf, "%09u", r);
    out.insert(0, buf);
  }
  return out;
}

}  // namespace

FieldSpec make_field(std::int64_t d) {
  if (d == 0 || d == 1) fail(Errc::DegenerateField, "d must not be 0 or 1");
  if (!squarefree(d)) fail(Errc::NotSquarefree, "d = " + std::to_string(d) + " is not squarefree");
  FieldSpec f;
  f.d = d;
  f.signature = d > 0 ? Signature::Real : Signature::Imaginary;
  std::int64_t mod4 = ((d % 4) + 4) % 4;
  f.basis = (mod4 == 1) ? BasisKind::HalfTrace : BasisKind::Sqrt;
  return f;
}

FieldElement make_element(const FieldSpec& field, std::int64_t x, std::int64_t y) {
  return FieldElement{field, x, y};
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, checked((__int128)a.x + b.x, "add"), checked((__int128)a.y + b.y, "add")};
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, checked((__int128)a.x - b.x, "sub"), checked((__int128)a.y - b.y, "sub")};
}

FieldElement neg(const FieldElement& a) { return {a.field, -a.x, -a.y}; }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  __int128 x, y;
  if (a.field.basis == BasisKind::Sqrt) {
    // omega^2 = d
    x = (__int128)a.x * b.x + (__int128)a.field.d * a.y * b.y;
    y = (__int128)a.x * b.y + (__int128)a.y * b.x;
  } else {
    // omega^2 = omega + (d-1)/4
    std::int64_t c = (a.field.d - 1) / 4;
    x = (__int128)a.x * b.x + (__int128)c * a.y * b.y;
    y = (__int128)a.x * b.y + (__int128)a.y * b.x + (__int128)a.y * b.y;
  }
  return {a.field, checked(x, "mul"), checked(y, "mul")};
}

FieldElement galois_conj(const FieldElement& a) {
  if (a.field.basis == BasisKind::Sqrt) return {a.field, a.x, -a.y};
  return {a.field, checked((__int128)a.x + a.y, "conj"), -a.y};
}

std::int64_t norm(const FieldElement& a) {
  __int128 n;
  if (a.field.basis == BasisKind::Sqrt) {
    n = (__int128)a.x * a.x - (__int128)a.field.d * a.y * a.y;
  } else {
    n = (__int128)a.x * a.x + (__int128)a.x * a.y - (__int128)((a.field.d - 1) / 4) * a.y * a.y;
  }
  return checked(n, "norm");
}

namespace {

// sign of X + Y*sqrt(d), d > 0, exact.
int sign_x_plus_y_sqrt_d(std::int64_t X, std::int64_t Y, std::int64_t d) {
  if (Y == 0) return X > 0 ? 1 : (X < 0 ? -1 : 0);
  if (Y > 0) {
    if (X >= 0) return 1;
    // X < 0: positive iff Y^2 d > X^2
    __int128 lhs = (__int128)Y * Y * d, rhs = (__int128)X * X;
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  }
  // Y < 0: mirror
  return -sign_x_plus_y_sqrt_d(-X, -Y, d);
}

}  // namespace

int embedding_sign(const FieldElement& a, int which) {
  if (a.field.signature != Signature::Real)
    fail(Errc::WrongSignature, "embedding_sign requires a real field");
  // sigma_i(a) = X + Y*sqrt(d) up to the positive factor 1/2 in the
  // half-trace basis.
  std::int64_t X, Y;
  if (a.field.basis == BasisKind::Sqrt) {
    X = a.x;
    Y = a.y;
  } else {
    X = checked(2 * (__int128)a.x + a.y, "embedding_sign");
    Y = a.y;
  }
  if (which == 2) Y = -Y;
  return sign_x_plus_y_sqrt_d(X, Y, a.field.d);
}

bool is_totally_positive(const FieldElement& a) {
  return embedding_sign(a, 1) > 0 && embedding_sign(a, 2) > 0;
}

int imag_sign(const FieldElement& a) {
  if (a.field.signature != Signature::Imaginary)
    fail(Errc::WrongSignature, "imag_sign requires an imaginary field");
  return a.y > 0 ? 1 : (a.y < 0 ? -1 : 0);
}

std::string sqrt_decimal(std::uint64_t n, int digits) {
  // floor(sqrt(n * 10^(2*digits))), then place the decimal point.
  BigUint scaled = BigUint::from_u64(n);
  for (int i = 0; i < 2 * digits; ++i) scaled = BigUint::mul_small(scaled, 10);
  std::string s = to_decimal(isqrt_big(scaled));
  if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

EmbeddingPair embed(const FieldElement& a, int precision) {
  if (precision < 1) precision = 1;
  std::uint64_t absd = (std::uint64_t)std::llabs(a.field.d);
  double root = std::strtod(sqrt_decimal(absd, std::min(precision, 40)).c_str(), nullptr);

  std::complex<double> w1, w2;
  if (a.field.signature == Signature::Real) {
    if (a.field.basis == BasisKind::Sqrt) {
      w1 = root;
      w2 = -root;
    } else {
      w1 = (1.0 + root) / 2.0;
      w2 = (1.0 - root) / 2.0;
    }
  } else {
    std::complex<double> i_root(0.0, root);
    if (a.field.basis == BasisKind::Sqrt) {
      w1 = i_root;
      w2 = -i_root;
    } else {
      w1 = (1.0 + i_root) / 2.0;
      w2 = (1.0 - i_root) / 2.0;
    }
  }
  EmbeddingPair e;
  e.a1 = double(a.x) + double(a.y) * w1;
  e.a2 = double(a.x) + double(a.y) * w2;
  e.precision = precision;
  return e;
}

}  // namespace mdzeta
