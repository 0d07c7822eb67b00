#pragma once

// Test-only brute-force oracles. These evaluate the staircase family by
// direct summation in plain Rational arithmetic and enumerate Farey
// sequences by filter-and-sort, staying independent of the fixed-denominator
// kernels and the neighbor recurrence used by the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "farey/farey_sequence.hpp"
#include "farey/rational.hpp"

namespace oracle {

using farey::Int;
using farey::Rational;

inline Rational eval_A(long n, const Rational& x) {
  Rational sum;
  for (long k = 1; k <= n; ++k) {
    Rational kx = x * Rational(k);
    sum += Rational(kx.floor(), Int(k));
  }
  return sum / Rational(n);
}

inline Rational eval_B(long n, const Rational& x) {
  Rational sum;
  for (long k = 1; k <= n; ++k) {
    Rational scaled = x * Rational(Int(k), Int(n));
    sum += Rational(scaled.floor(), Int(k));
  }
  return sum;
}

inline Rational eval_D(long n, const Rational& x) {
  return oracle::eval_A(n, x) - oracle::eval_A(n - 1, x);
}

inline Rational eval_f(long n, const Rational& x) {
  return Rational((x * Rational(n)).floor()) - oracle::eval_A(n, x) * Rational(n);
}

inline std::vector<farey::FareyFraction> farey_by_sorting(long n) {
  std::vector<farey::FareyFraction> out;
  for (std::int64_t q = 1; q <= n; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const farey::FareyFraction& a, const farey::FareyFraction& b) {
              return a.num * b.den < b.num * a.den;
            });
  return out;
}

inline std::vector<long> totients_upto(long n) {
  std::vector<long> phi(static_cast<size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), 0L);
  for (long i = 2; i <= n; ++i) {
    if (phi[static_cast<size_t>(i)] == i) {  // i prime
      for (long j = i; j <= n; j += i) {
        phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;
      }
    }
  }
  return phi;
}

/// Deterministic random rationals: numerator in [lo_num, hi_num],
/// denominator in [1, max_den].
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational next(long lo_num, long hi_num, long max_den) {
    std::uniform_int_distribution<long> num(lo_num, hi_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Int(num(rng_)), Int(den(rng_)));
  }

  long next_long(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
