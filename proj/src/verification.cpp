#include "farey/verification.hpp"

#include <cmath>
#include <stdexcept>

#include "farey/farey_sequence.hpp"

namespace farey {

namespace {

constexpr const char* kJustification =
    "Each checked function is constant between consecutive Farey fractions "
    "of order n_max and right-continuous, and A_n(x+1) = A_n(x) + 1 carries "
    "the check to all real x; exact nonnegativity at every breakpoint in "
    "[0,1) therefore certifies the inequality everywhere.";

struct SweepTables {
  long n_max = 0;
  Int l;                    // lcm(1..n_max), the common denominator
  std::vector<Int> l_over;  // l_over[k] = L/k
  std::vector<Int> hsum;    // hsum[n] = L * H_n

  explicit SweepTables(long n) : n_max(n) {
    l = lcm_upto(n);
    l_over.resize(static_cast<size_t>(n) + 1);
    hsum.resize(static_cast<size_t>(n) + 1);
    Int acc = 0;
    for (long k = 1; k <= n; ++k) {
      mpz_divexact_ui(l_over[static_cast<size_t>(k)].get_mpz_t(), l.get_mpz_t(),
                      static_cast<unsigned long>(k));
      acc += l_over[static_cast<size_t>(k)];
      hsum[static_cast<size_t>(k)] = acc;
    }
  }
};

// Walks every breakpoint of F_{n_max} in [0,1) and every order n <= n_max,
// maintaining S = L * sum_{k<=n} (1/k) floor(k p/q) incrementally.
// visit(n, p, q, fl, s_prev, s_now) sees the sums before and after the
// order-n term; fl = floor(n p / q).
template <typename Visit>
long sweep_breakpoints(const SweepTables& tables, const Visit& visit) {
  long count = 0;
  Int s;
  for_each_farey(tables.n_max, [&](std::int64_t p, std::int64_t q) {
    if (p == 1 && q == 1) return;  // stay in [0, 1)
    ++count;
    s = 0;
    for (long n = 1; n <= tables.n_max; ++n) {
      std::int64_t fl = (n * p) / q;  // exact: p >= 0
      Int s_prev = s;
      mpz_addmul_ui(s.get_mpz_t(),
                    tables.l_over[static_cast<size_t>(n)].get_mpz_t(),
                    static_cast<unsigned long>(fl));
      visit(n, p, q, fl, s_prev, s);
    }
  });
  return count;
}

Rational fraction(std::int64_t p, std::int64_t q) {
  return Rational(Int(p), Int(q));
}

}  // namespace

VerificationResult verify_olympiad(long n_max) {
  if (n_max < 1) throw std::domain_error("verify_olympiad: n_max must be >= 1");
  SweepTables tables(n_max);
  VerificationResult result;
  result.suite = "olympiad";
  result.n_max = n_max;
  result.order_lo = 1;
  result.order_hi = n_max;
  result.justification = kJustification;

  Int t;
  Int best;
  bool have_best = false;
  long best_n = 0;
  std::int64_t best_p = 0, best_q = 1;

  result.breakpoint_count = sweep_breakpoints(
      tables, [&](long n, std::int64_t p, std::int64_t q, std::int64_t fl,
                  const Int&, const Int& s_now) {
        // t = L * f_n(p/q) = L floor(n p/q) - S_n
        mpz_mul_ui(t.get_mpz_t(), tables.l.get_mpz_t(),
                   static_cast<unsigned long>(fl));
        t -= s_now;
        if (sgn(t) < 0) {
          result.violations.push_back(
              {"olympiad: f_n(x) < 0", n, fraction(p, q), Rational(t, tables.l)});
        } else if (sgn(t) > 0 && (!have_best || t < best)) {
          best = t;
          best_n = n;
          best_p = p;
          best_q = q;
          have_best = true;
        }
      });

  if (have_best) {
    Rational margin(best, tables.l);
    result.witness = VerificationWitness{best_n, fraction(best_p, best_q),
                                         margin, margin.to_double()};
  }
  return result;
}

VerificationResult verify_monotone(long n_max) {
  if (n_max < 2) throw std::domain_error("verify_monotone: n_max must be >= 2");
  SweepTables tables(n_max);
  VerificationResult result;
  result.suite = "monotone";
  result.n_max = n_max;
  result.order_lo = 2;
  result.order_hi = n_max;
  result.justification = kJustification;

  Int u, lhs, rhs;
  Int best;
  unsigned long best_weight = 1;  // n (n-1) for the stored witness
  bool have_best = false;
  long best_n = 0;
  std::int64_t best_p = 0, best_q = 1;

  result.breakpoint_count = sweep_breakpoints(
      tables, [&](long n, std::int64_t p, std::int64_t q, std::int64_t,
                  const Int& s_prev, const Int& s_now) {
        if (n < 2) return;
        // D_n = (n-1) S_n - n S_{n-1}, over denominator n (n-1) L
        mpz_mul_ui(u.get_mpz_t(), s_now.get_mpz_t(),
                   static_cast<unsigned long>(n - 1));
        mpz_submul_ui(u.get_mpz_t(), s_prev.get_mpz_t(),
                      static_cast<unsigned long>(n));
        if (sgn(u) < 0) {
          result.violations.push_back(
              {"monotone: D_n(x) < 0", n, fraction(p, q),
               Rational(u, Int(n) * Int(n - 1) * tables.l)});
          return;
        }
        if (sgn(u) > 0) {
          unsigned long weight = static_cast<unsigned long>(n) *
                                 static_cast<unsigned long>(n - 1);
          bool better = false;
          if (!have_best) {
            better = true;
          } else {
            // u/weight < best/best_weight  <=>  u*best_weight < best*weight
            mpz_mul_ui(lhs.get_mpz_t(), u.get_mpz_t(), best_weight);
            mpz_mul_ui(rhs.get_mpz_t(), best.get_mpz_t(), weight);
            better = lhs < rhs;
          }
          if (better) {
            best = u;
            best_weight = weight;
            best_n = n;
            best_p = p;
            best_q = q;
            have_best = true;
          }
        }
      });

  if (have_best) {
    Rational margin(best, Int(best_weight) * tables.l);
    result.witness = VerificationWitness{best_n, fraction(best_p, best_q),
                                         margin, margin.to_double()};
  }
  return result;
}

VerificationResult verify_sandwich(long n_max) {
  if (n_max < 2) throw std::domain_error("verify_sandwich: n_max must be >= 2");
  SweepTables tables(n_max);
  VerificationResult result;
  result.suite = "sandwich";
  result.n_max = n_max;
  result.order_lo = 1;
  result.order_hi = n_max;
  result.justification = kJustification;

  Int t, u, slack;
  Int best;
  bool have_best = false;
  long best_n = 0;
  std::int64_t best_p = 0, best_q = 1;
  std::vector<Int> max_t(static_cast<size_t>(n_max) + 1);  // per-order max of L f_n

  result.breakpoint_count = sweep_breakpoints(
      tables, [&](long n, std::int64_t p, std::int64_t q, std::int64_t fl,
                  const Int& s_prev, const Int& s_now) {
        // lower bound: A_n <= (1/n) floor(nx), i.e. t = L f_n >= 0
        mpz_mul_ui(t.get_mpz_t(), tables.l.get_mpz_t(),
                   static_cast<unsigned long>(fl));
        t -= s_now;
        if (sgn(t) < 0) {
          result.violations.push_back({"sandwich: lower bound", n, fraction(p, q),
                                       Rational(t, tables.l)});
          return;
        }
        if (t > max_t[static_cast<size_t>(n)]) max_t[static_cast<size_t>(n)] = t;

        // upper bound: (1/n) floor(nx) - A_n <= (H_n - 1)/n, i.e.
        // slack = (L H_n - L) - t >= 0
        slack = tables.hsum[static_cast<size_t>(n)] - tables.l;
        slack -= t;
        if (sgn(slack) < 0) {
          result.violations.push_back({"sandwich: upper bound", n, fraction(p, q),
                                       Rational(slack, tables.l)});
          return;
        }
        if (sgn(slack) > 0 && (!have_best || slack < best)) {
          best = slack;
          best_n = n;
          best_p = p;
          best_q = q;
          have_best = true;
        }

        // increment route for the D_n bound; equality with t is the exact
        // content of the two closed forms for D_n
        if (n >= 2) {
          mpz_mul_ui(u.get_mpz_t(), s_now.get_mpz_t(),
                     static_cast<unsigned long>(n - 1));
          mpz_submul_ui(u.get_mpz_t(), s_prev.get_mpz_t(),
                        static_cast<unsigned long>(n));
          if (!(u == t)) {
            throw std::logic_error("verify_sandwich: increment identity broken");
          }
        }
      });

  // floating-point restatement with log n in place of H_n - 1
  for (long n = 2; n <= n_max; ++n) {
    double f_max = ratio_to_double(max_t[static_cast<size_t>(n)], tables.l);
    double dn = static_cast<double>(n);
    double log_bound = std::log(dn);
    if (f_max / dn > log_bound / dn + 1e-12 ||
        f_max / (dn * (dn - 1.0)) > log_bound / (dn * (dn - 1.0)) + 1e-12) {
      result.violations.push_back({"sandwich: log-form float bound", n,
                                   Rational(0), Rational(max_t[static_cast<size_t>(n)], tables.l)});
    }
  }

  if (have_best) {
    Rational margin(best, tables.l);
    result.witness = VerificationWitness{best_n, fraction(best_p, best_q),
                                         margin, margin.to_double()};
  }
  return result;
}

}  // namespace farey
