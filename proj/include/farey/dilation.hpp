#pragma once

// Numerical dilation derivative
//
//   delta f(x) = lim_{lambda -> 1} (f(lambda x) - lambda f(x)) / (lambda - 1),
//
// which equals x f'(x) - f(x) for differentiable f. The quotient above is
// the lambda-scaled form of (lambda^{-1} f(lambda x) - f(x))/(lambda - 1);
// both have the same limit, and the scaled form is exact at finite step for
// x = 0 and for polynomials of degree <= 1.

#include <functional>
#include <string>
#include <vector>

namespace farey {

enum class DilationScheme { OneSided, Central, Richardson };

struct DilationParams {
  double h = 1e-6;  // lambda = 1 + h, 0 < h < 1
  DilationScheme scheme = DilationScheme::OneSided;
};

/// Recommended step for each scheme (1e-6 one-sided, 1e-4 Richardson).
DilationParams default_params(DilationScheme scheme);

/// Finite-step dilation quotient of fn at x. One-sided uses lambda = 1 + h;
/// central averages lambda = 1 +- h; Richardson combines steps h and h/2 to
/// cancel the leading error term.
double delta(const std::function<double(double)>& fn, double x,
             const DilationParams& params);

struct DilationCheckRow {
  std::string label;
  double x = 0.0;
  double computed = 0.0;
  double expected = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / max(1, |expected|)
};

struct DilationReport {
  std::string check;
  DilationParams params;
  std::vector<DilationCheckRow> rows;
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
};

/// Checks delta x^a = (a-1) x^a, delta e^{kx} = (kx-1) e^{kx},
/// delta log x = 1 - log x, and delta f = x f' - f with a finite-difference
/// derivative, over the given sample points (x > 0).
DilationReport verify_delta_identities(const std::vector<double>& xs,
                                       const DilationParams& params);

/// Checks delta limit_B(x) against floor(x) - limit_B(x) at non-integer
/// samples. Throws std::domain_error if a sample is within 10 h x of an
/// integer (the dilation would cross a floor jump).
DilationReport check_heuristic(const std::vector<double>& xs,
                               const DilationParams& params);

/// Checks x B'(x) = floor(x) via a central finite difference, plus
/// limit_B(0) = 0, at non-integer samples.
DilationReport check_ode(const std::vector<double>& xs);

}  // namespace farey
