#include "jchains/numerics.hpp"

#include <limits>
#include <ostream>
#include <string>

namespace jchains {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw ArithmeticOverflow(std::string("integer overflow in ") + op);
}

Int abs_checked(Int x) { return x < 0 ? neg_checked(x) : x; }

}  // namespace

Int add_checked(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) overflow("add");
  return r;
}

Int sub_checked(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("sub");
  return r;
}

Int mul_checked(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("mul");
  return r;
}

Int neg_checked(Int x) {
  if (x == std::numeric_limits<Int>::min()) overflow("neg");
  return -x;
}

Int gcd(Int a, Int b) {
  a = abs_checked(a);
  b = abs_checked(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul_checked(abs_checked(a) / gcd(a, b), abs_checked(b));
}

Int omega(Int n) {
  if (n < 1) throw DomainError("omega: argument must be >= 1, got " + std::to_string(n));
  Int count = 0;
  for (Int p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

Int floor_div(Int num, Int den) {
  if (den == 0) throw DomainError("floor_div: division by zero");
  if (num == std::numeric_limits<Int>::min() && den == -1) overflow("floor_div");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(Int num, Int den) {
  if (den == 0) throw DomainError("ceil_div: division by zero");
  if (num == std::numeric_limits<Int>::min() && den == -1) overflow("ceil_div");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

Bezout bezout_minimal(Int b, Int c) {
  if (b < 1 || c < 1) throw DomainError("bezout_minimal: arguments must be positive");
  if (gcd(b, c) != 1) throw DomainError("bezout_minimal: arguments must be coprime");
  // Extended Euclid on (c mod b, b) gives the inverse of c modulo b.
  Int old_r = c % b, r = b;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  // old_s * c == 1 (mod b); N == -c^{-1} (mod b), taken in [1, b].
  Int inv = ((old_s % b) + b) % b;
  Int n = (b - inv) % b;
  if (n == 0) n = b;
  Int m_times_b = add_checked(1, mul_checked(n, c));
  return {m_times_b / b, n};
}

Rational::Rational(Int num, Int den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = neg_checked(num);
    den = neg_checked(den);
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational operator+(const Rational& x, const Rational& y) {
  Int g = gcd(x.den_, y.den_);
  Int xd = x.den_ / g, yd = y.den_ / g;
  return {add_checked(mul_checked(x.num_, yd), mul_checked(y.num_, xd)),
          mul_checked(mul_checked(xd, yd), g)};
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  Int g1 = gcd(x.num_, y.den_);
  Int g2 = gcd(y.num_, x.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {mul_checked(x.num_ / g1, y.num_ / g2), mul_checked(x.den_ / g2, y.den_ / g1)};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw DomainError("Rational: division by zero");
  return x * Rational(y.den_, y.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = neg_checked(num_);
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  // Denominators are positive, so cross-multiplication preserves order.
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(x.num_) * y.den_;
  const Wide rhs = static_cast<Wide>(y.num_) * x.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace jchains
