#pragma once

// Exhaustive exact verification over the Farey breakpoints of order n_max.
//
// Every function checked (f_n, D_n, and the floor-gap bounds) is constant
// between consecutive Farey fractions of order n_max, right-continuous, and
// extends to all reals through A_n(x+1) = A_n(x) + 1, so a finite check over
// the breakpoints in [0, 1) certifies the inequalities everywhere.

#include <optional>
#include <string>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

struct VerificationViolation {
  std::string kind;
  long order = 0;
  Rational point;
  Rational margin;  // the violated quantity, exact
};

struct VerificationWitness {
  long order = 0;
  Rational point;
  Rational margin;  // smallest strictly positive margin encountered
  double margin_float = 0.0;
};

struct VerificationResult {
  std::string suite;
  long n_max = 0;
  long order_lo = 1;
  long order_hi = 0;
  long breakpoint_count = 0;  // Farey fractions of order n_max in [0, 1)
  std::vector<VerificationViolation> violations;  // empty on pass
  std::optional<VerificationWitness> witness;
  std::string justification;

  bool passed() const { return violations.empty(); }
};

/// f_n(x) >= 0 for every n <= n_max and every breakpoint (the floor-sum
/// inequality). The witness is the smallest positive value of f_n seen;
/// the identically-zero cases (n = 1, x = 0, x below 1/n) never qualify.
VerificationResult verify_olympiad(long n_max);

/// A_{n-1}(x) <= A_n(x), i.e. D_n(x) >= 0, for 2 <= n <= n_max. The order
/// n-1 average is accumulated independently, so this exercises the
/// increment identity rather than restating the olympiad check.
VerificationResult verify_monotone(long n_max);

/// A_n(x) <= (1/n) floor(nx) <= A_n(x) + (H_n - 1)/n and
/// 0 <= D_n(x) <= (H_n - 1)/(n (n-1)), exactly; the harmonic form is
/// stronger than the log-based bound, which is re-checked in floating point.
VerificationResult verify_sandwich(long n_max);

}  // namespace farey
