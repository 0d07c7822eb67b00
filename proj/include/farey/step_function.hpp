#pragma once

// Right-continuous piecewise-constant representations of A_n, D_n, f_n on
// [0, 1). Breakpoints are the Farey fractions of order n at which the
// function genuinely jumps; the value stored at a breakpoint is the value of
// the interval starting there. The whole real line is covered through
// quasi-periodicity: A_n(x+1) = A_n(x) + 1, while D_n and f_n are 1-periodic.

#include <vector>

#include "farey/rational.hpp"
#include "farey/staircase.hpp"

namespace farey {

class StepFunction {
 public:
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  std::size_t piece_count() const { return breakpoints_.size(); }
  const Rational& breakpoint(std::size_t i) const { return breakpoints_[i]; }
  const Rational& value(std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Value at x for 0 <= x < 1 (right-continuous lookup).
  const Rational& operator()(const Rational& x) const;

  struct Extremum {
    Rational min, argmin, max, argmax;  // ties resolve to the leftmost breakpoint
  };
  Extremum extremum() const;

  /// Every value divided by the exact maximum; throws std::domain_error if
  /// the maximum is zero.
  StepFunction normalized_by_max() const;

 private:
  std::vector<Rational> breakpoints_;  // strictly increasing, first is 0
  std::vector<Rational> values_;
};

/// Exact step function of A_n, D_n or f_n on [0, 1). Adjacent equal values
/// are merged, so every retained breakpoint after 0 is a true jump.
/// which must be Fn::A, Fn::D (n >= 2) or Fn::F.
StepFunction build_step(long n, Fn which);

/// Jump of A_n at a reduced p/q in [0, 1): (1/(n q)) * H_{floor(n/q)}.
/// Throws std::domain_error when q > n (A_n has no jump there).
Rational jump_at(long n, const Rational& point);

}  // namespace farey
