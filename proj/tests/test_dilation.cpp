#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "farey/dilation.hpp"
#include "farey/limit_functions.hpp"

using namespace farey;

namespace {

DilationParams params_for(DilationScheme scheme, double h) {
  DilationParams p;
  p.scheme = scheme;
  p.h = h;
  return p;
}

const DilationScheme kSchemes[] = {DilationScheme::OneSided,
                                   DilationScheme::Central,
                                   DilationScheme::Richardson};

}  // namespace

TEST_CASE("delta at the origin is exactly minus f(0) for every scheme and step") {
  auto f = [](double t) { return std::exp(t) + 3.0; };
  for (DilationScheme scheme : kSchemes) {
    for (double h : {0.5, 1e-2, 1e-6}) {
      CHECK(delta(f, 0.0, params_for(scheme, h)) == -f(0.0));
    }
  }
}

TEST_CASE("delta is exact on polynomials of degree at most one") {
  auto constant = [](double) { return 4.25; };
  auto identity = [](double t) { return t; };
  for (DilationScheme scheme : kSchemes) {
    for (double h : {0.25, 1e-3, 1e-7}) {
      auto p = params_for(scheme, h);
      CHECK(delta(constant, 1.7, p) == -4.25);
      // the quotient is constant in lambda; only rounding noise of order
      // eps * x / h survives
      CHECK(std::fabs(delta(identity, 1.7, p)) < 4e-15 * 1.7 / h + 1e-12);
      CHECK(delta(identity, 0.0, p) == 0.0);
    }
  }
}

TEST_CASE("delta rejects invalid steps") {
  auto f = [](double t) { return t; };
  CHECK_THROWS_AS(delta(f, 1.0, params_for(DilationScheme::OneSided, 0.0)),
                  std::domain_error);
  CHECK_THROWS_AS(delta(f, 1.0, params_for(DilationScheme::OneSided, 1.0)),
                  std::domain_error);
}

TEST_CASE("power, exponential and logarithm identities") {
  auto square = [](double t) { return t * t; };
  double d = delta(square, 3.0, params_for(DilationScheme::OneSided, 1e-6));
  CHECK(d == doctest::Approx(9.0).epsilon(1e-5));

  auto expf = [](double t) { return std::exp(t); };
  CHECK(delta(expf, 0.0, params_for(DilationScheme::OneSided, 1e-6)) == -1.0);

  auto logf = [](double t) { return std::log(t); };
  double at_e = delta(logf, std::exp(1.0), params_for(DilationScheme::Richardson, 1e-4));
  CHECK(std::fabs(at_e) < 1e-8);

  auto report = verify_delta_identities({0.5, 1.0, 3.0},
                                        default_params(DilationScheme::OneSided));
  CHECK(report.max_rel_error < 1e-4);
  CHECK_THROWS_AS(
      verify_delta_identities({-1.0}, default_params(DilationScheme::OneSided)),
      std::domain_error);
}

TEST_CASE("richardson beats one-sided at the same step") {
  auto cubic = [](double t) { return t * t * t; };
  const double target = 2.0 * 8.0;  // (alpha - 1) x^alpha at x = 2
  double h = 1e-3;
  double err_one =
      std::fabs(delta(cubic, 2.0, params_for(DilationScheme::OneSided, h)) - target);
  double err_rich =
      std::fabs(delta(cubic, 2.0, params_for(DilationScheme::Richardson, h)) - target);
  CHECK(err_rich < err_one);
}

TEST_CASE("dilation heuristic for the limit function") {
  // below one, both sides vanish identically
  auto p = default_params(DilationScheme::Richardson);
  auto zero_report = check_heuristic({0.25, 0.5, 0.75}, p);
  CHECK(zero_report.max_abs_error == 0.0);

  auto b = [](double t) { return limit_B(t); };
  double at_15 = delta(b, 1.5, p);
  CHECK(at_15 == doctest::Approx(1.0 - std::log(1.5)).epsilon(1e-6));

  auto report = check_heuristic({1.25, 2.5, 3.75, 4.5}, p);
  CHECK(report.max_abs_error < 1e-6);

  // samples adjacent to a floor jump are rejected
  CHECK_THROWS_AS(check_heuristic({2.0 + 1e-9}, p), std::domain_error);
  CHECK_THROWS_AS(check_heuristic({-1.0}, p), std::domain_error);
}

TEST_CASE("the limit function solves x B' = floor(x)") {
  auto zeros = check_ode({0.3, 0.6});
  CHECK(zeros.max_abs_error < 1e-12);

  auto report = check_ode({1.25, 2.5, 3.75, 4.5});
  CHECK(report.max_abs_error < 1e-6);
  // includes the B(0) = 0 row
  bool saw_origin = false;
  for (const auto& row : report.rows) {
    if (row.label == "B(0)") {
      saw_origin = true;
      CHECK(row.computed == 0.0);
    }
  }
  CHECK(saw_origin);
  CHECK_THROWS_AS(check_ode({3.0 + 1e-9}), std::domain_error);
}
