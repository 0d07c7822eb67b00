#include "farey/limit_functions.hpp"

#include <algorithm>
#include <cmath>

namespace farey {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
template <typename F>
F lanczos_log_gamma(F x) {
  static const F coeff[9] = {
      F(0.99999999999980993L),      F(676.5203681218851L),
      F(-1259.1392167224028L),      F(771.32342877765313L),
      F(-176.61502916214059L),      F(12.507343278686905L),
      F(-0.13857109526572012L),     F(9.9843695780195716e-6L),
      F(1.5056327351493116e-7L)};
  const F half_log_two_pi = F(0.91893853320467274178032973640562L);
  if (x <= F(0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < F(0.5)) {
    // reflection: log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x)
    const F pi = F(3.14159265358979323846264338327950L);
    return std::log(pi / std::sin(pi * x)) - lanczos_log_gamma(F(1) - x);
  }
  F z = x - F(1);
  F a = coeff[0];
  for (int i = 1; i < 9; ++i) a += coeff[i] / (z + F(i));
  F t = z + F(7.5);
  return half_log_two_pi + (z + F(0.5)) * std::log(t) - t + std::log(a);
}

template <typename F>
F limit_B_impl(F x) {
  if (x < F(0)) throw std::domain_error("limit_B: argument must be >= 0");
  F m = std::floor(x);
  if (m < F(1)) return F(0);
  return m * std::log(x) - lanczos_log_gamma(m + F(1));
}

}  // namespace

double log_gamma(double x) { return lanczos_log_gamma(x); }
long double log_gamma_ext(long double x) { return lanczos_log_gamma(x); }

double limit_B(double x) { return limit_B_impl(x); }
long double limit_B_ext(long double x) { return limit_B_impl(x); }

double limit_B_direct(double x) {
  if (x < 0) throw std::domain_error("limit_B_direct: argument must be >= 0");
  long m = static_cast<long>(std::floor(x));
  double sum = 0.0, carry = 0.0;
  for (long k = 1; k <= m; ++k) {
    double term = std::log(x / static_cast<double>(k)) - carry;
    double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double log_plus_sum(double x, long terms) {
  if (x < 0) throw std::domain_error("log_plus_sum: argument must be >= 0");
  double sum = 0.0, carry = 0.0;
  for (long k = 1; k <= terms; ++k) {
    double term = std::max(0.0, std::log(x / static_cast<double>(k))) - carry;
    double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double limit_B_scaled(long q, double x) {
  if (q < 1) throw std::domain_error("limit_B_scaled: q must be >= 1");
  if (x < 0) throw std::domain_error("limit_B_scaled: argument must be >= 0");
  return limit_B(static_cast<double>(q) * x) / static_cast<double>(q);
}

long double limit_B_scaled_ext(long q, long double x) {
  if (q < 1) throw std::domain_error("limit_B_scaled: q must be >= 1");
  if (x < 0) throw std::domain_error("limit_B_scaled: argument must be >= 0");
  return limit_B_ext(static_cast<long double>(q) * x) / static_cast<long double>(q);
}

double limit_D(double x) {
  if (x < 0) throw std::domain_error("limit_D: argument must be >= 0");
  return std::floor(x) - limit_B(x);
}

long double limit_D_ext(long double x) {
  if (x < 0) throw std::domain_error("limit_D: argument must be >= 0");
  return std::floor(x) - limit_B_ext(x);
}

double stirling_gap(double x) {
  if (x < 1) throw std::domain_error("stirling_gap: argument must be >= 1");
  return limit_B(x) - (x - 0.5 * std::log(x));
}

}  // namespace farey
