#include "farey/step_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "farey/farey_sequence.hpp"

namespace farey {

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw std::invalid_argument("StepFunction: breakpoint/value mismatch");
  }
  if (!breakpoints_.front().is_zero()) {
    throw std::invalid_argument("StepFunction: first breakpoint must be 0");
  }
}

const Rational& StepFunction::operator()(const Rational& x) const {
  if (x.is_negative() || x >= Rational(1)) {
    throw std::domain_error("StepFunction: argument outside [0, 1)");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction::Extremum StepFunction::extremum() const {
  Extremum e{values_[0], breakpoints_[0], values_[0], breakpoints_[0]};
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < e.min) {
      e.min = values_[i];
      e.argmin = breakpoints_[i];
    }
    if (values_[i] > e.max) {
      e.max = values_[i];
      e.argmax = breakpoints_[i];
    }
  }
  return e;
}

StepFunction StepFunction::normalized_by_max() const {
  Rational m = extremum().max;
  if (m.is_zero()) throw std::domain_error("StepFunction: zero maximum");
  std::vector<Rational> scaled;
  scaled.reserve(values_.size());
  for (const Rational& v : values_) scaled.push_back(v / m);
  return StepFunction(breakpoints_, std::move(scaled));
}

namespace {

// Jump tables over a common denominator. For a breakpoint p/q the summation
// term k of n A_n jumps by 1/k exactly when q | k, so
//   jump of A_n at p/q = (1/n) * sum_{j <= floor(n/q)} 1/(q j)
//   jump of f_n at p/q = [q | n] - sum_{j <= floor(n/q)} 1/(q j)
//   jump of D_n at p/q = jump A_n - jump A_{n-1}
// base[q] below is L * sum_{j <= floor(n/q)} 1/(q j), an exact integer.
std::vector<Int> jump_base(long n, const Int& l) {
  std::vector<Int> base(static_cast<size_t>(n) + 1);
  Int term;
  for (long q = 1; q <= n; ++q) {
    Int sum = 0;
    for (long j = 1; q * j <= n; ++j) {
      mpz_divexact_ui(term.get_mpz_t(), l.get_mpz_t(),
                      static_cast<unsigned long>(q * j));
      sum += term;
    }
    base[static_cast<size_t>(q)] = sum;
  }
  return base;
}

}  // namespace

StepFunction build_step(long n, Fn which) {
  if (n < 1) throw std::domain_error("build_step: order must be >= 1");
  if (which == Fn::B) throw std::invalid_argument("build_step: B is not a step function on [0,1)");
  if (which == Fn::D && n < 2) throw std::domain_error("build_step: D requires order >= 2");

  Int l = lcm_upto(n);
  std::vector<Int> base = jump_base(n, l);

  // common denominator and per-q jump numerators for the requested function
  Int denom;
  std::vector<Int> jump(static_cast<size_t>(n) + 1);
  switch (which) {
    case Fn::A:
      denom = Int(n) * l;  // jump = base[q] / (n L)
      for (long q = 1; q <= n; ++q) jump[q] = base[q];
      break;
    case Fn::F:
      denom = l;  // jump = ([q|n] L - base[q]) / L
      for (long q = 1; q <= n; ++q) {
        jump[q] = (n % q == 0) ? Int(l - base[q]) : Int(-base[q]);
      }
      break;
    case Fn::D: {
      // order n-1 table differs from base only when q | n
      denom = Int(n) * Int(n - 1) * l;
      Int l_over_n;
      mpz_divexact_ui(l_over_n.get_mpz_t(), l.get_mpz_t(),
                      static_cast<unsigned long>(n));
      for (long q = 1; q <= n; ++q) {
        Int prev = base[q];
        if (n % q == 0) prev -= l_over_n;  // drop the j = n/q term
        jump[q] = Int(n - 1) * base[q] - Int(n) * prev;
      }
      break;
    }
    case Fn::B:
      break;  // unreachable
  }

  std::vector<Rational> bps;
  std::vector<Rational> vals;
  bps.emplace_back(0);
  vals.emplace_back(0);  // A_n(0) = D_n(0) = f_n(0) = 0
  Int acc = 0;
  for_each_farey(n, [&](std::int64_t p, std::int64_t q) {
    if (p == 0 || (p == 1 && q == 1)) return;  // anchor handled; stay in [0,1)
    const Int& j = jump[static_cast<size_t>(q)];
    if (sgn(j) == 0) return;  // merged: not a true jump
    acc += j;
    bps.push_back(Rational(Int(p), Int(q)));
    vals.push_back(Rational(acc, denom));
  });
  return StepFunction(std::move(bps), std::move(vals));
}

Rational jump_at(long n, const Rational& point) {
  if (n < 1) throw std::domain_error("jump_at: order must be >= 1");
  if (point.is_negative() || point >= Rational(1)) {
    throw std::domain_error("jump_at: point outside [0, 1)");
  }
  if (point.den() > n) throw std::domain_error("jump_at: no jump (denominator exceeds order)");
  long q = point.den().get_si();
  long m = n / q;
  return harmonic(m) / Rational(Int(n) * Int(q));
}

}  // namespace farey
