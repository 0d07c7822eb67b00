#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "farey/limit_functions.hpp"

using namespace farey;

TEST_CASE("log_gamma accuracy") {
  // exact values at small integers
  CHECK(std::fabs(log_gamma(1.0)) < 1e-13);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-13);
  CHECK(log_gamma(3.0) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(log_gamma(4.0) == doctest::Approx(std::log(6.0)).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));

  // against the C library implementation over a wide sweep
  for (double x = 0.5; x < 20.0; x += 0.0917) {
    double mine = log_gamma(x);
    double ref = std::lgamma(x);
    CHECK(std::fabs(mine - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
  }
  for (double x = 20.0; x < 2.0e6; x *= 1.7) {
    double mine = log_gamma(x);
    double ref = std::lgamma(x);
    CHECK(std::fabs(mine - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
  }
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("limit_B closed form") {
  CHECK(limit_B(0.0) == 0.0);
  CHECK(limit_B(0.7) == 0.0);
  CHECK(limit_B(0.9999) == 0.0);
  CHECK(std::fabs(limit_B(1.0)) < 1e-13);
  CHECK(limit_B(1.5) == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(limit_B(2.5) ==
        doctest::Approx(2.0 * std::log(2.5) - std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(limit_B(-0.1), std::domain_error);
}

TEST_CASE("closed form and direct summation agree") {
  for (double x : {1.5, 2.5, 3.25, 10.7, 123.456, 1000.5, 99999.25, 1.0e6}) {
    double closed = limit_B(x);
    double direct = limit_B_direct(x);
    CHECK(std::fabs(closed - direct) <= 1e-11 * std::max(1.0, std::fabs(closed)));
  }
}

TEST_CASE("truncated log-plus sum saturates at floor(x)") {
  for (double x : {0.4, 1.7, 5.3, 42.9}) {
    long m = static_cast<long>(std::floor(x));
    double direct = limit_B_direct(x);
    CHECK(log_plus_sum(x, m) == doctest::Approx(direct).epsilon(1e-14));
    // extra terms contribute exactly zero
    CHECK(log_plus_sum(x, m + 25) == log_plus_sum(x, m));
    CHECK(std::fabs(log_plus_sum(x, m + 100) - limit_B(x)) <=
          1e-11 * std::max(1.0, std::fabs(limit_B(x))));
  }
}

TEST_CASE("limit_B_scaled") {
  for (double x : {0.0, 0.4, 1.9, 7.3}) {
    CHECK(limit_B_scaled(1, x) == limit_B(x));
  }
  CHECK(limit_B_scaled(3, 0.32) == 0.0);  // qx < 1
  CHECK(limit_B_scaled(2, 0.75) ==
        doctest::Approx(0.5 * std::log(1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(limit_B_scaled(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(limit_B_scaled(2, -1.0), std::domain_error);
}

TEST_CASE("limit_D values and nonnegativity") {
  CHECK(limit_D(0.5) == 0.0);
  CHECK(limit_D(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(limit_D(2.0 - 1e-9) ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-7));
  for (double x = 0.0; x <= 200.0; x += 0.0313) {
    CHECK(limit_D(x) >= -1e-13);
  }
  CHECK_THROWS_AS(limit_D(-2.0), std::domain_error);
}

TEST_CASE("limit_D decreases within each integer block and jumps by one") {
  for (long k = 1; k <= 12; ++k) {
    double prev = limit_D(static_cast<double>(k));
    for (double t = 0.05; t < 1.0; t += 0.05) {
      double cur = limit_D(static_cast<double>(k) + t);
      CHECK(cur < prev);
      prev = cur;
    }
    // +1 jump at the next integer
    double before = limit_D(static_cast<double>(k + 1) - 1e-9);
    double after = limit_D(static_cast<double>(k + 1));
    CHECK(after - before == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("limit_B is continuous at the integers") {
  for (long k = 1; k <= 10; ++k) {
    double x = static_cast<double>(k);
    for (double eps : {1e-3, 1e-6, 1e-9}) {
      CHECK(std::fabs(limit_B(x + eps) - limit_B(x - eps)) <
            10.0 * static_cast<double>(k) * eps + 1e-12);
    }
  }
}

TEST_CASE("limit_B is bounded by x - 1 and floor(x)") {
  for (double x = 0.0; x <= 50.0; x += 0.0197) {
    CHECK(limit_B(x) <= std::floor(x) + 1e-12);
    if (x >= 1.0) CHECK(limit_B(x) <= x - 1.0 + 1e-12);
  }
}

TEST_CASE("stirling gap stays bounded while limit_B grows") {
  CHECK(stirling_gap(1.0) == doctest::Approx(-1.0).epsilon(1e-13));
  double max_abs = 0.0;
  for (double x = 10.0; x <= 1000.0; x += 0.1) {
    max_abs = std::max(max_abs, std::fabs(stirling_gap(x)));
  }
  // empirical bound; the asymptotic only promises boundedness
  CHECK(max_abs <= 2.0);
  CHECK(limit_B(1000.0) > 900.0);
  CHECK_THROWS_AS(stirling_gap(0.5), std::domain_error);
}

TEST_CASE("extended-precision path agrees with the double path") {
  for (double x : {0.3, 1.5, 2.5, 77.7}) {
    CHECK(static_cast<double>(limit_B_ext(static_cast<long double>(x))) ==
          doctest::Approx(limit_B(x)).epsilon(1e-14));
    CHECK(static_cast<double>(limit_D_ext(static_cast<long double>(x))) ==
          doctest::Approx(limit_D(x)).epsilon(1e-13));
  }
}
