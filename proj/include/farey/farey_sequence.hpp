#pragma once

// Farey sequence enumeration via the classical two-term neighbor recurrence:
// given consecutive a/b < c/d in F_n, the next term is
//   k = (n + b) / d,   next = (k c - a) / (k d - b),
// which is linear in the output size. Numerators and denominators stay
// within int64 for every order this library targets.

#include <cstdint>
#include <functional>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

struct FareyFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // >= 1, gcd(|num|, den) == 1

  Rational to_rational() const { return Rational(Int(num), Int(den)); }
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

/// Visits every reduced fraction p/q with 0 <= p/q <= 1 and q <= n, in
/// increasing order (0/1 first, 1/1 last).
void for_each_farey(long n, const std::function<void(std::int64_t, std::int64_t)>& visit);

/// The Farey sequence of order n on [0, 1], ascending.
class FareySequence {
 public:
  explicit FareySequence(long n);

  long order() const { return n_; }
  std::size_t size() const { return fractions_.size(); }
  const std::vector<FareyFraction>& fractions() const { return fractions_; }
  const FareyFraction& operator[](std::size_t i) const { return fractions_[i]; }
  Rational at(std::size_t i) const { return fractions_[i].to_rational(); }

 private:
  long n_;
  std::vector<FareyFraction> fractions_;
};

inline FareySequence farey_sequence(long n) { return FareySequence(n); }

}  // namespace farey
