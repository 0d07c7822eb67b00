#include "farey/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "farey/limit_functions.hpp"

namespace farey {

DilationParams default_params(DilationScheme scheme) {
  DilationParams params;
  params.scheme = scheme;
  params.h = scheme == DilationScheme::Richardson ? 1e-4 : 1e-6;
  return params;
}

namespace {

double one_sided(const std::function<double(double)>& fn, double x, double h) {
  // (f(lambda x) - lambda f(x)) / h arranged so that the x = 0 and
  // constant-f cancellations are exact in floating point as well
  return (fn((1.0 + h) * x) - fn(x)) / h - fn(x);
}

void validate(const DilationParams& params) {
  if (!(params.h > 0.0 && params.h < 1.0)) {
    throw std::domain_error("dilation: step must satisfy 0 < h < 1");
  }
}

}  // namespace

double delta(const std::function<double(double)>& fn, double x,
             const DilationParams& params) {
  validate(params);
  switch (params.scheme) {
    case DilationScheme::OneSided:
      return one_sided(fn, x, params.h);
    case DilationScheme::Central:
      // (f((1+h)x) - f((1-h)x)) / (2h) - f(x); second order in h
      return (fn((1.0 + params.h) * x) - fn((1.0 - params.h) * x)) /
                 (2.0 * params.h) -
             fn(x);
    case DilationScheme::Richardson:
      return 2.0 * one_sided(fn, x, params.h / 2.0) - one_sided(fn, x, params.h);
  }
  throw std::logic_error("dilation: unknown scheme");
}

namespace {

void push_row(DilationReport& report, std::string label, double x,
              double computed, double expected) {
  DilationCheckRow row;
  row.label = std::move(label);
  row.x = x;
  row.computed = computed;
  row.expected = expected;
  row.abs_error = std::fabs(computed - expected);
  row.rel_error = row.abs_error / std::max(1.0, std::fabs(expected));
  report.rows.push_back(row);
  report.max_abs_error = std::max(report.max_abs_error, row.abs_error);
  report.max_rel_error = std::max(report.max_rel_error, row.rel_error);
}

}  // namespace

DilationReport verify_delta_identities(const std::vector<double>& xs,
                                       const DilationParams& params) {
  validate(params);
  DilationReport report{"identities", params, {}, 0.0, 0.0};
  const double alphas[] = {2.0, 3.0, 0.5};
  const double ks[] = {1.0, -2.0};
  for (double x : xs) {
    if (x <= 0.0) throw std::domain_error("identities: samples must be positive");
    for (double a : alphas) {
      auto pow_a = [a](double t) { return std::pow(t, a); };
      push_row(report, "x^" + std::to_string(a), x, delta(pow_a, x, params),
               (a - 1.0) * std::pow(x, a));
    }
    for (double k : ks) {
      auto exp_k = [k](double t) { return std::exp(k * t); };
      push_row(report, "exp(" + std::to_string(k) + "x)", x,
               delta(exp_k, x, params), (k * x - 1.0) * std::exp(k * x));
    }
    auto log_fn = [](double t) { return std::log(t); };
    push_row(report, "log", x, delta(log_fn, x, params), 1.0 - std::log(x));

    // general rule delta f = x f' - f, derivative by central difference
    auto smooth = [](double t) { return std::sin(t) + t * t; };
    double fd = 1e-6 * std::max(1.0, std::fabs(x));
    double deriv = (smooth(x + fd) - smooth(x - fd)) / (2.0 * fd);
    push_row(report, "x f' - f", x, delta(smooth, x, params),
             x * deriv - smooth(x));
  }
  return report;
}

DilationReport check_heuristic(const std::vector<double>& xs,
                               const DilationParams& params) {
  validate(params);
  DilationReport report{"heuristic", params, {}, 0.0, 0.0};
  for (double x : xs) {
    if (x <= 0.0) throw std::domain_error("heuristic: samples must be positive");
    double nearest = std::round(x);
    if (std::fabs(x - nearest) < 10.0 * params.h * x) {
      throw std::domain_error("heuristic: sample too close to an integer");
    }
    auto b = [](double t) { return limit_B(t); };
    push_row(report, "delta B", x, delta(b, x, params), limit_D(x));
  }
  return report;
}

DilationReport check_ode(const std::vector<double>& xs) {
  DilationReport report{"ode", default_params(DilationScheme::Central), {}, 0.0, 0.0};
  const double h = 1e-4;
  for (double x : xs) {
    if (x <= 0.0) throw std::domain_error("ode: samples must be positive");
    double nearest = std::round(x);
    if (std::fabs(x - nearest) < 10.0 * h * std::max(1.0, x)) {
      throw std::domain_error("ode: sample too close to an integer");
    }
    double step = h * std::max(1.0, x);
    double deriv = (limit_B(x + step) - limit_B(x - step)) / (2.0 * step);
    push_row(report, "x B'", x, x * deriv, std::floor(x));
  }
  push_row(report, "B(0)", 0.0, limit_B(0.0), 0.0);
  return report;
}

}  // namespace farey
