#include "farey/rational.hpp"

#include <cctype>
#include <cmath>

namespace farey {

Int floor_div(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::domain_error("floor_div: division by zero");
  Int q;
  // fdiv rounds the quotient toward minus infinity for any sign combination
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (sgn(den_) == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // denominators are positive, so cross multiplication preserves order
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int int_from_digits(std::string_view s) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0) {
    throw std::invalid_argument("Rational: bad integer literal");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty input");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
    if (text.empty()) throw std::invalid_argument("Rational: sign only");
  }

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash);
    std::string_view q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw std::invalid_argument("Rational: malformed fraction");
    }
    result = Rational(int_from_digits(p), int_from_digits(q));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) {
      throw std::invalid_argument("Rational: malformed decimal");
    }
    if (!ip.empty() && !all_digits(ip)) {
      throw std::invalid_argument("Rational: malformed decimal");
    }
    if (!fp.empty() && !all_digits(fp)) {
      throw std::invalid_argument("Rational: malformed decimal");
    }
    Int scale = 1;
    Int n = ip.empty() ? Int(0) : int_from_digits(ip);
    if (!fp.empty()) {
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
      n = n * scale + int_from_digits(fp);
    }
    result = Rational(n, scale);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("Rational: malformed integer");
    result = Rational(int_from_digits(text));
  }
  return negative ? -result : result;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  if (x == 0.0) return Rational();
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  Int mant(static_cast<long>(std::ldexp(m, 53)));
  exp -= 53;
  Int num = mant, den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return Rational(num, den);
}

namespace {

// Splits |num|/den into integer part plus a 64-bit binary fraction, which is
// enough for one correctly-placed floating-point rounding at double or
// x87 extended precision.
struct RatioParts {
  int sign;
  Int integer;
  std::uint64_t frac64;
};

RatioParts split_ratio(const Int& num, const Int& den) {
  if (sgn(den) <= 0) throw std::domain_error("ratio: nonpositive denominator");
  RatioParts parts{sgn(num), Int(), 0};
  Int a = abs(num);
  Int r;
  mpz_fdiv_qr(parts.integer.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(),
              den.get_mpz_t());
  if (sgn(r) != 0) {
    Int scaled = r << 64;
    Int f = scaled / den;  // < 2^64 since r < den
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    parts.frac64 = mpz_get_ui(f.get_mpz_t());
  }
  return parts;
}

}  // namespace

double ratio_to_double(const Int& num, const Int& den) {
  RatioParts p = split_ratio(num, den);
  double v = mpz_get_d(p.integer.get_mpz_t());
  v += std::ldexp(static_cast<double>(p.frac64), -64);
  return p.sign < 0 ? -v : v;
}

long double ratio_to_long_double(const Int& num, const Int& den) {
  RatioParts p = split_ratio(num, den);
  long double v = static_cast<long double>(mpz_get_d(p.integer.get_mpz_t()));
  if (mpz_sizeinbase(p.integer.get_mpz_t(), 2) > 50) {
    // recover the low bits the double conversion dropped
    Int hi = p.integer >> 32;
    Int lo = p.integer - (hi << 32);
    v = std::ldexp(static_cast<long double>(mpz_get_d(hi.get_mpz_t())), 32) +
        static_cast<long double>(mpz_get_ui(lo.get_mpz_t()));
  }
  v += std::ldexp(static_cast<long double>(p.frac64), -64);
  return p.sign < 0 ? -v : v;
}

double Rational::to_double() const { return ratio_to_double(num_, den_); }

long double Rational::to_long_double() const {
  return ratio_to_long_double(num_, den_);
}

Rational harmonic(long n) {
  if (n < 1) throw std::domain_error("harmonic: n must be >= 1");
  Int l = lcm_upto(n);
  Int sum = 0;
  Int term;
  for (long k = 1; k <= n; ++k) {
    mpz_divexact_ui(term.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
    sum += term;
  }
  return Rational(sum, l);
}

Int lcm_upto(long n) {
  if (n < 1) throw std::domain_error("lcm_upto: n must be >= 1");
  Int l = 1;
  for (long k = 2; k <= n; ++k) {
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return l;
}

}  // namespace farey
