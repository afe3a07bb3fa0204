#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jchains {

/// Exact integer used throughout the engine. Every arithmetic helper below is
/// overflow-checked; a wrapped value is never produced.
using Int = std::int64_t;

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a constructed object would violate one of its invariants.
/// This always indicates a defect in the engine, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Int add_checked(Int x, Int y);
Int sub_checked(Int x, Int y);
Int mul_checked(Int x, Int y);
Int neg_checked(Int x);

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Number of prime factors of n counted with multiplicity. omega(1) = 0.
Int omega(Int n);

/// Floor / ceiling of num/den for den != 0.
Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

struct Bezout {
  Int M;
  Int N;
  friend bool operator==(const Bezout&, const Bezout&) = default;
};

/// For coprime b, c >= 1, the pair (M, N) with M*b - N*c = 1 and N >= 1 minimal.
Bezout bezout_minimal(Int b, Int c);

/// Reduced fraction num/den with den >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  [[nodiscard]] Int num() const { return num_; }
  [[nodiscard]] Int den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }

  [[nodiscard]] Int floor() const { return floor_div(num_, den_); }
  [[nodiscard]] Int ceil() const { return ceil_div(num_, den_); }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  [[nodiscard]] std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace jchains
