#include "farey/convergence.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "farey/farey_sequence.hpp"
#include "farey/parallel.hpp"
#include "farey/staircase.hpp"

namespace farey {

GridSpec::GridSpec(Rational start_, Rational stop_, long count_)
    : start(std::move(start_)), stop(std::move(stop_)), count(count_) {
  if (count < 2) throw std::domain_error("GridSpec: count must be >= 2");
  if (!(start < stop)) throw std::domain_error("GridSpec: start must be < stop");
}

GridSpec GridSpec::parse(std::string_view text) {
  auto first = text.find(':');
  auto last = text.rfind(':');
  if (first == std::string_view::npos || first == last) {
    throw std::invalid_argument("GridSpec: expected start:stop:count");
  }
  Rational a = Rational::parse(text.substr(0, first));
  Rational b = Rational::parse(text.substr(first + 1, last - first - 1));
  Rational c = Rational::parse(text.substr(last + 1));
  if (!c.is_integer() || c.is_negative()) {
    throw std::invalid_argument("GridSpec: count must be a positive integer");
  }
  return GridSpec(std::move(a), std::move(b), c.num().get_si());
}

std::string GridSpec::str() const {
  return start.str() + ":" + stop.str() + ":" + std::to_string(count);
}

Rational GridSpec::point(long i) const {
  return start + (stop - start) * Rational(Int(i), Int(count - 1));
}

std::vector<Rational> GridSpec::points() const {
  std::vector<Rational> pts;
  pts.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) pts.push_back(point(i));
  return pts;
}

namespace {

void require_nonnegative_grid(const GridSpec& grid) {
  if (grid.start.is_negative()) {
    throw std::domain_error("convergence: grid must lie in x >= 0");
  }
}

// Picks per-point errors up into (sup, leftmost argmax).
void record_sup(ConvergenceReport& report, const std::vector<Rational>& pts,
                const std::vector<double>& errs) {
  double sup = errs[0];
  long arg = 0;
  for (long i = 1; i < static_cast<long>(errs.size()); ++i) {
    if (errs[static_cast<size_t>(i)] > sup) {
      sup = errs[static_cast<size_t>(i)];
      arg = i;
    }
  }
  report.sup_errors.push_back(sup);
  report.argmax_points.push_back(pts[static_cast<size_t>(arg)]);
}

}  // namespace

ConvergenceReport converge_B(const GridSpec& grid, const std::vector<long>& orders,
                             Precision precision, int jobs) {
  require_nonnegative_grid(grid);
  if (orders.empty()) throw std::domain_error("converge_B: no orders given");
  ConvergenceReport report{"B", grid, orders, {}, {}, precision};
  std::vector<Rational> pts = grid.points();
  for (long n : orders) {
    FloorSumKernel kernel(n);
    const Int& l = kernel.common_denominator();
    std::vector<double> errs(pts.size());
    parallel_for(static_cast<long>(pts.size()), jobs, [&](long i) {
      const Rational& x = pts[static_cast<size_t>(i)];
      Int s = kernel.weighted_floor_sum(x / Rational(n));
      if (precision == Precision::Extended) {
        long double exact = ratio_to_long_double(s, l);
        long double lim = limit_B_ext(x.to_long_double());
        errs[static_cast<size_t>(i)] = static_cast<double>(std::fabs(exact - lim));
      } else {
        double exact = ratio_to_double(s, l);
        double lim = limit_B(x.to_double());
        errs[static_cast<size_t>(i)] = std::fabs(exact - lim);
      }
    });
    record_sup(report, pts, errs);
  }
  return report;
}

ConvergenceReport converge_extension(long p, long q, const GridSpec& grid,
                                     const std::vector<long>& orders,
                                     Precision precision, int jobs) {
  if (p < 1 || q < 1) throw std::domain_error("converge_extension: p, q must be >= 1");
  if (std::gcd(p, q) != 1) throw std::domain_error("converge_extension: p/q must be reduced");
  require_nonnegative_grid(grid);
  if (orders.empty()) throw std::domain_error("converge_extension: no orders given");
  ConvergenceReport report{"ext(" + std::to_string(p) + "/" + std::to_string(q) + ")",
                           grid, orders, {}, {}, precision};
  std::vector<Rational> pts = grid.points();
  Rational shift{Int(p), Int(q)};  // (x + (p/q) n)/n = x/n + p/q
  for (long n : orders) {
    FloorSumKernel kernel(n);
    const Int& l = kernel.common_denominator();
    Int base = kernel.weighted_floor_sum(shift);  // B_n((p/q) n) over L
    std::vector<double> errs(pts.size());
    parallel_for(static_cast<long>(pts.size()), jobs, [&](long i) {
      const Rational& x = pts[static_cast<size_t>(i)];
      Int s = kernel.weighted_floor_sum(x / Rational(n) + shift);
      Int diff = s - base;  // exact B_n(x + (p/q)n) - B_n((p/q)n)
      if (precision == Precision::Extended) {
        long double exact = ratio_to_long_double(diff, l);
        long double lim = limit_B_scaled_ext(q, x.to_long_double());
        errs[static_cast<size_t>(i)] = static_cast<double>(std::fabs(exact - lim));
      } else {
        double exact = ratio_to_double(diff, l);
        double lim = limit_B_scaled(q, x.to_double());
        errs[static_cast<size_t>(i)] = std::fabs(exact - lim);
      }
    });
    record_sup(report, pts, errs);
  }
  return report;
}

ConvergenceReport converge_D(const GridSpec& grid, const std::vector<long>& orders,
                             Precision precision, int jobs) {
  require_nonnegative_grid(grid);
  if (orders.empty()) throw std::domain_error("converge_D: no orders given");
  for (long n : orders) {
    if (n < 2) throw std::domain_error("converge_D: orders must be >= 2");
  }
  ConvergenceReport report{"D", grid, orders, {}, {}, precision};
  std::vector<Rational> pts = grid.points();
  for (long n : orders) {
    // independent summations of order n and n - 1 keep the identity check
    // honest: the n - 1 sum is not derived from the n sum
    FloorSumKernel kernel(n);
    FloorSumKernel prev(n - 1);
    const Int& l = kernel.common_denominator();
    std::vector<double> errs(pts.size());
    parallel_for(static_cast<long>(pts.size()), jobs, [&](long i) {
      const Rational& x = pts[static_cast<size_t>(i)];
      Rational y = x / Rational(n);
      Int s = kernel.weighted_floor_sum(y);
      Rational a_n(s, Int(n) * l);
      Rational a_prev(prev.weighted_floor_sum(y),
                      Int(n - 1) * prev.common_denominator());
      Rational d = a_n - a_prev;

      // exact identity (n^2 - n) D_n(x/n) = floor(x) - B_n(x), bit exact
      Rational b_n(s, l);
      Rational lhs = d * Rational(Int(n) * Int(n) - Int(n));
      Rational rhs = Rational(x.floor()) - b_n;
      if (!(lhs == rhs)) {
        throw std::logic_error("converge_D: exact staircase identity violated");
      }

      Rational scaled = d * Rational(Int(n) * Int(n));
      if (precision == Precision::Extended) {
        long double exact = scaled.to_long_double();
        long double lim = limit_D_ext(x.to_long_double());
        errs[static_cast<size_t>(i)] = static_cast<double>(std::fabs(exact - lim));
      } else {
        double exact = scaled.to_double();
        double lim = limit_D(x.to_double());
        errs[static_cast<size_t>(i)] = std::fabs(exact - lim);
      }
    });
    record_sup(report, pts, errs);
  }
  return report;
}

MinFReport min_f(long n) {
  if (n < 1) throw std::domain_error("min_f: order must be >= 1");
  MinFReport report;
  report.order = n;
  const double lambda = 1.0 - std::log(2.0);
  if (n == 1) {
    // f_1 is identically zero
    report.value = Rational(0);
    report.argmin = Rational(0);
    report.value_float = 0.0;
    report.gap = -lambda;
    return report;
  }

  Int l = lcm_upto(n);
  // jump of f_n at p/q depends only on q: [q | n] - sum_{j<=floor(n/q)} 1/(qj)
  std::vector<Int> jump(static_cast<size_t>(n) + 1);
  Int term;
  for (long q = 1; q <= n; ++q) {
    Int sum = 0;
    for (long j = 1; q * j <= n; ++j) {
      mpz_divexact_ui(term.get_mpz_t(), l.get_mpz_t(),
                      static_cast<unsigned long>(q * j));
      sum += term;
    }
    jump[static_cast<size_t>(q)] = (n % q == 0) ? Int(l - sum) : Int(-sum);
  }

  Int acc = 0;      // L * f_n at the current breakpoint
  Int best;
  bool have_best = false;
  std::int64_t best_p = 0, best_q = 1;
  for_each_farey(n, [&](std::int64_t p, std::int64_t q) {
    if (p == 0 || (p == 1 && q == 1)) return;  // walk stays inside (0, 1)
    acc += jump[static_cast<size_t>(q)];
    if (!have_best || acc < best) {
      best = acc;
      best_p = p;
      best_q = q;
      have_best = true;
    }
  });

  report.value = Rational(best, l);
  report.argmin = Rational(Int(best_p), Int(best_q));
  report.value_float = report.value.to_double();
  report.gap = report.value_float - lambda;
  return report;
}

double sum_integral_gap(long a, long b) {
  if (a < 1) throw std::domain_error("sum_integral_gap: a must be >= 1");
  if (b < a) throw std::domain_error("sum_integral_gap: need a <= b");
  long double sum = 0.0L;
  for (long k = a; k <= b; ++k) sum += 1.0L / static_cast<long double>(k);
  long double gap = sum - std::log(static_cast<long double>(b) / static_cast<long double>(a));
  return static_cast<double>(gap);
}

}  // namespace farey
