#pragma once

// Desk-scale convergence experiments for the staircase limit theorems.
// Grid points are exact rationals; staircase values are evaluated on the
// exact path and rounded exactly once when compared against the float limit.

#include <string>
#include <vector>

#include "farey/limit_functions.hpp"
#include "farey/rational.hpp"

namespace farey {

/// count equally spaced exact rational points start + i (stop-start)/(count-1).
struct GridSpec {
  Rational start;
  Rational stop;
  long count = 0;  // >= 2

  GridSpec() = default;
  GridSpec(Rational start_, Rational stop_, long count_);

  /// "start:stop:count" with rational endpoints, e.g. "0:5:101".
  static GridSpec parse(std::string_view text);
  std::string str() const;

  Rational point(long i) const;
  std::vector<Rational> points() const;
};

struct ConvergenceReport {
  std::string experiment;
  GridSpec grid;
  std::vector<long> orders;
  std::vector<double> sup_errors;       // per order
  std::vector<Rational> argmax_points;  // exact grid point achieving each sup
  Precision precision = Precision::Double;
};

/// sup over the grid of |B_n(x) - limit_B(x)| per order. Grid must lie in
/// x >= 0.
ConvergenceReport converge_B(const GridSpec& grid, const std::vector<long>& orders,
                             Precision precision = Precision::Double, int jobs = 1);

/// sup over the grid of |B_n(x + (p/q) n) - B_n((p/q) n) - (1/q) limit_B(q x)|
/// per order; requires gcd(p, q) = 1 and p, q >= 1.
ConvergenceReport converge_extension(long p, long q, const GridSpec& grid,
                                     const std::vector<long>& orders,
                                     Precision precision = Precision::Double,
                                     int jobs = 1);

/// sup over the grid of |n^2 D_n(x/n) - limit_D(x)| per order (orders >= 2).
/// Also asserts the exact identity (n^2 - n) D_n(x/n) = floor(x) - B_n(x) at
/// every grid point before any rounding; a failure throws std::logic_error.
ConvergenceReport converge_D(const GridSpec& grid, const std::vector<long>& orders,
                             Precision precision = Precision::Double, int jobs = 1);

struct MinFReport {
  long order = 0;
  Rational value;      // exact minimum of f_n over the breakpoints in (0, 1)
  Rational argmin;     // leftmost attaining breakpoint
  double value_float = 0.0;
  double gap = 0.0;    // value - (1 - log 2)
};

/// Exact minimum of f_n over the Farey breakpoints of order n in (0, 1),
/// walking the jump structure in one pass (f_n(0) = 0 identically, so the
/// origin is excluded as the trivial equality case). min_f(1) = (0, 0).
MinFReport min_f(long n);

/// sum_{k=a}^{b} 1/k - log(b/a); lies in [1/b, 1/a] for 1 <= a <= b.
double sum_integral_gap(long a, long b);

}  // namespace farey
