#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every Rational is stored reduced with a positive denominator, so equality
// is structural and results are bit-for-bit reproducible. Floor rounds
// toward minus infinity, matching the step-function conventions used by the
// rest of the library.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

/// Arbitrary-precision integer. Backed by GMP; the wrapper types below own
/// all domain semantics (floor division, reduction, parsing).
using Int = mpz_class;

/// floor(num / den) for den != 0; rounds toward minus infinity.
Int floor_div(const Int& num, const Int& den);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT: implicit on purpose
  explicit Rational(Int n) : num_(std::move(n)), den_(1) {}
  /// Reduces to lowest terms with a positive denominator.
  /// Throws std::domain_error if d == 0.
  Rational(Int n, Int d);

  /// Accepts "p/q", "p", or a finite decimal such as "0.75" or "-12.5".
  /// Throws std::invalid_argument on malformed text and std::domain_error
  /// on a zero denominator.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every finite double is m * 2^e).
  /// Throws std::domain_error on NaN or infinity.
  static Rational from_double(double x);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_negative() const { return sgn(num_) < 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// Greatest integer <= this value (toward minus infinity).
  Int floor() const { return floor_div(num_, den_); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  /// Throws std::domain_error when dividing by zero.
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" when the value is an integer, otherwise "p/q".
  std::string str() const;

  double to_double() const;
  long double to_long_double() const;

 private:
  Int num_;  // carries the sign
  Int den_;  // > 0, coprime to num_

  void reduce();
};

/// num/den rendered to floating point without materializing a reduced
/// Rational; exact up to one final rounding. den must be positive.
double ratio_to_double(const Int& num, const Int& den);
long double ratio_to_long_double(const Int& num, const Int& den);

/// H_n = 1 + 1/2 + ... + 1/n, exact. Throws std::domain_error for n < 1.
Rational harmonic(long n);

/// lcm(1, 2, ..., n) for n >= 1.
Int lcm_upto(long n);

}  // namespace farey
