#include "farey/staircase.hpp"

#include <stdexcept>

namespace farey {

FloorSumKernel::FloorSumKernel(long n) : n_(n) {
  if (n < 1) throw std::domain_error("staircase: order must be >= 1");
  lcm_ = lcm_upto(n);
  table_.resize(static_cast<size_t>(n) + 1);
  for (long k = 1; k <= n; ++k) {
    mpz_divexact_ui(table_[static_cast<size_t>(k)].get_mpz_t(),
                    lcm_.get_mpz_t(), static_cast<unsigned long>(k));
  }
}

Int FloorSumKernel::weighted_floor_sum(const Rational& y) const {
  Int sum = 0;
  Int t;
  const Int& u = y.num();
  const Int& v = y.den();
  for (long k = 1; k <= n_; ++k) {
    mpz_mul_ui(t.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), v.get_mpz_t());
    if (sgn(t) != 0) {
      mpz_addmul(sum.get_mpz_t(), table_[static_cast<size_t>(k)].get_mpz_t(),
                 t.get_mpz_t());
    }
  }
  return sum;
}

Rational eval_A(long n, const Rational& x) {
  FloorSumKernel kernel(n);
  return Rational(kernel.weighted_floor_sum(x), n * kernel.common_denominator());
}

Rational eval_B(long n, const Rational& x) {
  FloorSumKernel kernel(n);
  Rational y = x / Rational(n);
  return Rational(kernel.weighted_floor_sum(y), kernel.common_denominator());
}

Rational eval_D(long n, const Rational& x) {
  if (n < 2) throw std::domain_error("eval_D: order must be >= 2");
  FloorSumKernel kernel(n);
  const Int& l = kernel.common_denominator();
  Int s = kernel.weighted_floor_sum(x);
  // last term (L/n) floor(nx); removing it leaves the order n-1 sum over L
  Int last = kernel.lcm_over(n) * (x * Rational(n)).floor();
  // A_n - A_{n-1} = S/(nL) - (S - last)/((n-1)L) = (n*last - S)/(n(n-1)L)
  return Rational(Int(n) * last - s, Int(n) * Int(n - 1) * l);
}

Rational eval_f(long n, const Rational& x) {
  FloorSumKernel kernel(n);
  const Int& l = kernel.common_denominator();
  Int s = kernel.weighted_floor_sum(x);
  Int fl = (x * Rational(n)).floor();
  return Rational(fl * l - s, l);
}

std::vector<Rational> sweep_A(const Rational& x, long n_max) {
  if (n_max < 1) throw std::domain_error("sweep_A: n_max must be >= 1");
  FloorSumKernel kernel(n_max);
  const Int& l = kernel.common_denominator();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n_max));
  Int s = 0;
  Int t;
  for (long n = 1; n <= n_max; ++n) {
    mpz_mul_ui(t.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), x.den().get_mpz_t());
    // s accumulates L * sum_{k<=n} (1/k) floor(kx), the recurrence scaled by L
    mpz_addmul(s.get_mpz_t(), kernel.lcm_over(n).get_mpz_t(), t.get_mpz_t());
    out.emplace_back(s, Int(n) * l);
  }
  return out;
}

StaircaseSample sample_staircase(long n, const Rational& x) {
  StaircaseSample sample;
  sample.order = n;
  sample.point = x;
  FloorSumKernel kernel(n);
  const Int& l = kernel.common_denominator();
  Int s = kernel.weighted_floor_sum(x);
  Int fl = (x * Rational(n)).floor();
  sample.A = Rational(s, Int(n) * l);
  sample.f = Rational(fl * l - s, l);
  if (n >= 2) {
    Int last = kernel.lcm_over(n) * fl;
    sample.D = Rational(Int(n) * last - s, Int(n) * Int(n - 1) * l);
  }
  return sample;
}

}  // namespace farey
