#pragma once

// Exact evaluation of the Farey staircase family.
//
//   A_n(x) = (1/n) * sum_{k=1}^{n} (1/k) floor(kx)   cumulative average of
//                                                    lower rational approximations
//   B_n(x) = n * A_n(x/n)                            staircase zoomed in at 0
//   D_n(x) = A_n(x) - A_{n-1}(x)                     incremented staircase, n >= 2
//   f_n(x) = floor(nx) - n * A_n(x)                  gap in the floor-sum inequality
//
// All evaluators are pure and exact; every value is a reduced Rational.

#include <optional>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

/// The four staircase-family functions exposed on the CLI surface.
enum class Fn { A, B, D, F };

struct StaircaseSample {
  long order = 0;
  Rational point;
  Rational A;
  std::optional<Rational> D;  // absent for order 1
  Rational f;
};

/// Shared summation engine for one order n. Precomputes L = lcm(1..n) and
/// the table L/k so that sum_{k<=n} (1/k) floor(k y) can be accumulated as a
/// single integer over the fixed denominator L.
class FloorSumKernel {
 public:
  explicit FloorSumKernel(long n);

  long order() const { return n_; }
  /// L = lcm(1, ..., n); common denominator of every weighted floor sum.
  const Int& common_denominator() const { return lcm_; }
  const Int& lcm_over(long k) const { return table_[static_cast<size_t>(k)]; }

  /// L * sum_{k=1}^{n} (1/k) floor(k y), an exact integer.
  Int weighted_floor_sum(const Rational& y) const;

 private:
  long n_;
  Int lcm_;
  std::vector<Int> table_;  // table_[k] = L/k, k in 1..n
};

Rational eval_A(long n, const Rational& x);
Rational eval_B(long n, const Rational& x);
Rational eval_D(long n, const Rational& x);  // n >= 2
Rational eval_f(long n, const Rational& x);

/// A_1(x), ..., A_{n_max}(x) via the increment recurrence
/// n A_n(x) = (1/n) floor(nx) + (n-1) A_{n-1}(x); linear in n_max.
std::vector<Rational> sweep_A(const Rational& x, long n_max);

StaircaseSample sample_staircase(long n, const Rational& x);

}  // namespace farey
