#pragma once

// Floating-point evaluation of the limit functions of the staircase family:
//
//   limit_B(x) = sum_{k=1}^{floor(x)} log(x/k)
//              = floor(x) log x - log(floor(x)!)          (closed form)
//   limit_B_scaled(q, x) = (1/q) limit_B(q x)
//   limit_D(x) = floor(x) - limit_B(x)
//
// The closed form evaluates log-gamma through a Lanczos approximation; the
// direct summation is kept as an independent cross-check path.

#include <stdexcept>

namespace farey {

enum class Precision { Double, Extended };  // 53-bit vs long-double mantissa

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Relative error is below 1e-12 on x >= 0.5 (exercised in the test suite
/// against both reference values and an independent summation).
double log_gamma(double x);
long double log_gamma_ext(long double x);

/// Closed form. Throws std::domain_error for x < 0.
double limit_B(double x);
long double limit_B_ext(long double x);

/// Direct summation sum_{k<=floor(x)} log(x/k) with compensated addition.
double limit_B_direct(double x);

/// Truncated sum_{k=1}^{terms} max(0, log(x/k)); equals limit_B once
/// terms >= floor(x).
double log_plus_sum(double x, long terms);

/// (1/q) limit_B(q x); q >= 1, x >= 0.
double limit_B_scaled(long q, double x);
long double limit_B_scaled_ext(long q, long double x);

/// floor(x) - limit_B(x), nonnegative; right-continuous at integers.
double limit_D(double x);
long double limit_D_ext(long double x);

/// limit_B(x) - (x - (1/2) log x) for x >= 1; bounded even though limit_B
/// grows without bound.
double stirling_gap(double x);

}  // namespace farey
