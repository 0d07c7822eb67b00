#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "farey/rational.hpp"
#include "oracle.hpp"

using farey::Int;
using farey::Rational;

TEST_CASE("floor rounds toward minus infinity") {
  CHECK(Rational(Int(7), Int(2)).floor() == 3);
  CHECK(Rational(Int(-1), Int(2)).floor() == -1);
  CHECK(Rational(Int(5), Int(1)).floor() == 5);
  CHECK(Rational(Int(-7), Int(2)).floor() == -4);
  CHECK(Rational(0).floor() == 0);
}

TEST_CASE("arithmetic is exact and stays reduced") {
  Rational half(Int(1), Int(2));
  Rational third(Int(1), Int(3));
  CHECK(half + third == Rational(Int(5), Int(6)));
  CHECK(Rational(Int(2), Int(4)) == half);
  CHECK(third < Rational(Int(2), Int(5)));
  CHECK(half - third == Rational(Int(1), Int(6)));
  CHECK(half * third == Rational(Int(1), Int(6)));
  CHECK(half / third == Rational(Int(3), Int(2)));
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);

  // sign normalization
  Rational neg(Int(3), Int(-6));
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
}

TEST_CASE("floor properties on random rationals") {
  oracle::RationalGen gen(20240801);
  for (int i = 0; i < 500; ++i) {
    Rational x = gen.next(-2000, 2000, 97);
    Int fl = x.floor();
    CHECK(Rational(fl) <= x);
    CHECK(x < Rational(fl + 1));
    long shift = gen.next_long(-5, 5);
    CHECK((x + Rational(shift)).floor() == fl + shift);
  }
}

TEST_CASE("ring identities on random rationals") {
  oracle::RationalGen gen(7771234);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen.next(-500, 500, 60);
    Rational b = gen.next(-500, 500, 60);
    Rational c = gen.next(-500, 500, 60);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // stored reduced with positive denominator
    Rational sum = a + b;
    Int g;
    mpz_gcd(g.get_mpz_t(), sum.num().get_mpz_t(), sum.den().get_mpz_t());
    CHECK(g == 1);
    CHECK(sum.den() > 0);
  }
}

TEST_CASE("parsing accepts fractions, integers and finite decimals") {
  CHECK(Rational::parse("7/2") == Rational(Int(7), Int(2)));
  CHECK(Rational::parse("-1/2") == Rational(Int(-1), Int(2)));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("0.75") == Rational(Int(3), Int(4)));
  CHECK(Rational::parse("-12.5") == Rational(Int(-25), Int(2)));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse(".125") == Rational(Int(1), Int(8)));
  CHECK(Rational::parse("0.3") == Rational(Int(3), Int(10)));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("exact lift of doubles") {
  CHECK(Rational::from_double(0.25) == Rational(Int(1), Int(4)));
  CHECK(Rational::from_double(-2.5) == Rational(Int(-5), Int(2)));
  CHECK(Rational::from_double(0.0) == Rational(0));
  CHECK(Rational::from_double(3.0) == Rational(3));
  oracle::RationalGen gen(4096);
  for (int i = 0; i < 200; ++i) {
    double x = static_cast<double>(gen.next_long(-1 << 20, 1 << 20)) / 1024.0;
    CHECK(Rational::from_double(x).to_double() == x);
  }
  CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::domain_error);
}

TEST_CASE("string rendering") {
  CHECK(Rational(Int(1), Int(4)).str() == "1/4");
  CHECK(Rational(Int(-3), Int(7)).str() == "-3/7");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(Int(12), Int(4)).str() == "3");
  // round trip
  oracle::RationalGen gen(99);
  for (int i = 0; i < 100; ++i) {
    Rational x = gen.next(-999, 999, 44);
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("harmonic numbers are exact") {
  CHECK(farey::harmonic(1) == Rational(1));
  CHECK(farey::harmonic(2) == Rational(Int(3), Int(2)));

  // direct summation oracle
  Rational sum;
  for (long k = 1; k <= 4; ++k) sum += Rational(Int(1), Int(k));
  CHECK(farey::harmonic(4) == sum);
  CHECK(farey::harmonic(4) == Rational(Int(25), Int(12)));

  for (long n : {3L, 10L, 37L}) {
    Rational s;
    for (long k = 1; k <= n; ++k) s += Rational(Int(1), Int(k));
    CHECK(farey::harmonic(n) == s);
  }
  CHECK_THROWS_AS(farey::harmonic(0), std::domain_error);
}

TEST_CASE("harmonic sums bracket the logarithm") {
  // H_n - 1 <= log n <= H_n - 1/n
  for (long n = 1; n <= 200; ++n) {
    double h = farey::harmonic(n).to_double();
    double ln = std::log(static_cast<double>(n));
    CHECK(h - 1.0 <= ln + 1e-12);
    CHECK(ln <= h - 1.0 / static_cast<double>(n) + 1e-12);
  }
}

TEST_CASE("lcm_upto") {
  CHECK(farey::lcm_upto(1) == 1);
  CHECK(farey::lcm_upto(10) == 2520);
  CHECK(farey::lcm_upto(12) % 11 == 0);
  CHECK_THROWS_AS(farey::lcm_upto(0), std::domain_error);
}

TEST_CASE("floating-point conversion") {
  CHECK(Rational(Int(1), Int(4)).to_double() == 0.25);
  CHECK(Rational(Int(-1), Int(4)).to_double() == -0.25);
  CHECK(Rational(Int(1), Int(3)).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(Rational(0).to_double() == 0.0);

  // huge common denominator: value survives the conversion to ~1 ulp
  double h = farey::harmonic(100).to_double();
  double ref = 0.0;
  for (long k = 100; k >= 1; --k) ref += 1.0 / static_cast<double>(k);
  CHECK(h == doctest::Approx(ref).epsilon(1e-14));

  long double hl = farey::harmonic(100).to_long_double();
  CHECK(static_cast<double>(hl) == doctest::Approx(ref).epsilon(1e-14));

  // unreduced ratio path agrees with the reduced one
  Int num = 3 * farey::lcm_upto(30);
  Int den = 4 * farey::lcm_upto(30);
  CHECK(farey::ratio_to_double(num, den) == 0.75);
  CHECK(static_cast<double>(farey::ratio_to_long_double(num, den)) == 0.75);
}
