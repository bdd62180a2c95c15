#include <doctest.h>

#include <cmath>
#include <numeric>
#include <numbers>

#include "thetatrunc/asymptotics.hpp"
#include "thetatrunc/error.hpp"
#include "thetatrunc/families.hpp"

using namespace thetatrunc;
using std::numbers::pi;

namespace {

// I_nu(x) for integer and half-integer nu from the standard library and the
// closed forms of the spherical orders, unscaled, in long double.
long double ref_bessel(int twice_nu, long double x) {
  if (twice_nu % 2 == 0) return std::cyl_bessel_il(std::abs(twice_nu / 2), x);
  if (twice_nu > 0) return std::cyl_bessel_il(twice_nu / 2.0L, x);
  // Downward recurrence from I_{1/2}, I_{-1/2}: I_{v-1} = I_{v+1} + (2v/x) I_v.
  const long double c = std::sqrt(2.0L / (std::numbers::pi_v<long double> * x));
  long double up = c * std::sinh(x);  // I_{1/2}
  long double cur = c * std::cosh(x); // I_{-1/2}
  for (int t = -1; t > twice_nu; t -= 2) {
    const long double v = t / 2.0L;
    const long double next = up + (2.0L * v / x) * cur;
    up = cur;
    cur = next;
  }
  return cur;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("LogValue arithmetic") {
  const auto a = LogValue::from_double(3.0);
  const auto b = LogValue::from_double(-5.0);
  CHECK((a * b).to_double() == doctest::Approx(-15.0));
  CHECK((a + b).to_double() == doctest::Approx(-2.0));
  CHECK((a - a).sign == 0);
  CHECK((b - b).sign == 0);
  CHECK((a + LogValue{}).to_double() == doctest::Approx(3.0));
  CHECK(LogValue::from_double(0.0).sign == 0);
  const LogValue huge{1, 5000.0};
  const LogValue tiny{-1, 10.0};
  CHECK((huge + tiny).lnmag == doctest::Approx(5000.0));
  CHECK(LogValue::from_integer(mpz_class(-1024)).lnmag == doctest::Approx(std::log(1024.0)));
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  const auto lb = LogValue::from_integer(big);
  CHECK(lb.sign == 1);
  CHECK(lb.lnmag == doctest::Approx(400.0 * std::log(10.0)).epsilon(1e-14));
  CHECK(LogValue::from_integer(mpz_class(0)).sign == 0);
}

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == doctest::Approx(-0.5));
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0));
  CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730.0));
  CHECK(bernoulli_number(11) == doctest::Approx(0.0));
  CHECK(bernoulli_poly(1, 0.0) == doctest::Approx(-0.5));
  CHECK(std::abs(bernoulli_poly(3, 0.5)) < 1e-15);
  CHECK(std::abs(bernoulli_poly(3, 1.0)) < 1e-15);
  for (double x : {-0.3, 0.1, 0.7, 2.5}) {
    CHECK(bernoulli_poly(3, x) == doctest::Approx(x * x * x - 1.5 * x * x + 0.5 * x));
    CHECK(bernoulli_poly(2, x) == doctest::Approx(x * x - x + 1.0 / 6.0));
    // B_n(x+1) - B_n(x) = n x^{n-1}
    CHECK(bernoulli_poly(5, x + 1) - bernoulli_poly(5, x) == doctest::Approx(5 * std::pow(x, 4)));
  }
  CHECK_THROWS_AS(bernoulli_poly(13, 0.0), Error);
}

TEST_CASE("scaled Bessel against reference values") {
  CHECK(bessel_I_scaled(HalfInteger::from_twice(-1), 1.0) ==
        doctest::Approx(std::exp(-1.0) * std::sqrt(2.0 / pi) * std::cosh(1.0)).epsilon(1e-12));
  CHECK(bessel_I_scaled(HalfInteger::from_twice(-1), 1.0) == doctest::Approx(0.45290).epsilon(1e-4));
  for (int t = -8; t <= 8; ++t) {
    for (double x : {0.05, 0.5, 1.0, 5.0, 17.0, 29.9, 30.1, 45.0, 120.0, 600.0}) {
      CAPTURE(t);
      CAPTURE(x);
      const long double ref = ref_bessel(t, x) * std::exp(-static_cast<long double>(x));
      CHECK(rel(bessel_I_scaled(HalfInteger::from_twice(t), x), static_cast<double>(ref)) < 1e-10);
    }
  }
  for (double x : {0.5, 5.0, 50.0}) {
    CHECK(bessel_I_scaled(HalfInteger(-2), x) == bessel_I_scaled(HalfInteger(2), x));
  }
  CHECK_THROWS_AS(bessel_I_scaled(HalfInteger::from_twice(9), 1.0), Error);
  CHECK_THROWS_AS(bessel_I_scaled(HalfInteger(1), 0.0), Error);
}

TEST_CASE("property: Bessel recurrence and large-x limit") {
  for (int t = -6; t <= 6; ++t) {
    const HalfInteger nu = HalfInteger::from_twice(t);
    for (double x : {1.0, 10.0, 100.0}) {
      const double lhs = bessel_I_scaled(nu - HalfInteger(1), x) - bessel_I_scaled(nu + HalfInteger(1), x);
      const double rhs = 2.0 * nu.to_double() / x * bessel_I_scaled(nu, x);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(std::abs(rhs), bessel_I_scaled(nu, x)));
    }
  }
  for (int t = -8; t <= 8; ++t) {
    const double nu = t / 2.0;
    const double limit = std::sqrt(2 * pi * 500.0) * bessel_I_scaled(HalfInteger::from_twice(t), 500.0);
    // Leading Hankel correction -(4 nu^2 - 1)/(8x); the remainder is O(x^-2).
    CHECK(std::abs(limit - 1.0 + (4 * nu * nu - 1) / 4000.0) < 2e-4);
    if (std::abs(t) <= 6) CHECK(std::abs(limit - 1.0) < 0.01);
  }
}

TEST_CASE("mainterm_B follows the printed four-term formula") {
  const ThetaParams p{HalfInteger(6), HalfInteger(7), 2};
  const auto m = mainterm_B(p, 3, 1, 400);
  REQUIRE(m.expansion.terms.size() == 4);
  const double sn = std::sin(pi / 3.0);
  CHECK(m.expansion.terms[0].coeff == doctest::Approx(std::sqrt(pi / 6.0) / (4 * sn)));
  CHECK(m.expansion.terms[0].nu == HalfInteger::from_twice(-1));
  CHECK(m.expansion.terms[3].power == HalfInteger(2));

  // Independent evaluation in long double with E, B1, B3 written out by hand.
  const long double a = 6, c = 7, d = 2, R = 3, S = 1, N = 400;
  const long double u = c / (2 * a);
  const long double b1 = u - 0.5L;
  const long double b3 = u * u * u - 1.5L * u * u + 0.5L * u;
  const long double E = d - c * c / (4 * a) + R / 12 - S / 2 + S * S / (2 * R);
  const long double x = 2 * std::numbers::pi_v<long double> * std::sqrt(N / (3 * R));
  const long double z = std::numbers::pi_v<long double> / std::sqrt(3 * R * N);
  const long double s = std::sin(std::numbers::pi_v<long double> * S / R);
  const long double ra = std::sqrt(std::numbers::pi_v<long double> / a);
  const long double ref = ra / (4 * s) * std::sqrt(z) * ref_bessel(-1, x) -
                          b1 / (2 * s) * z * ref_bessel(-2, x) -
                          ra * E / (4 * s) * std::pow(z, 1.5L) * ref_bessel(-3, x) +
                          (E * b1 + a * b3 / 3) / (2 * s) * z * z * ref_bessel(-4, x);
  CHECK(m.value.sign == 1);
  CHECK(m.value.lnmag == doctest::Approx(static_cast<double>(std::log(ref))).epsilon(1e-12));
}

TEST_CASE("mainterm_Bprime follows the printed four-term formula") {
  const ThetaParams p{HalfInteger(6), HalfInteger(7), 2};
  const auto m = mainterm_Bprime(p, 3, 1, 400);
  const long double a = 6, c = 7, d = 2, R = 3, S = 1, N = 400;
  const long double u = c / (2 * a);
  const long double b1 = u - 0.5L;
  const long double b3 = u * u * u - 1.5L * u * u + 0.5L * u;
  const long double E = d - c * c / (4 * a) + R / 8 - S / 2 + S * S / (2 * R);
  const long double pi_l = std::numbers::pi_v<long double>;
  const long double x = 2 * pi_l * std::sqrt(N / (2 * R));
  const long double z = pi_l / std::sqrt(2 * R * N);
  const long double s = std::sin(pi_l * S / R);
  const long double ra = std::sqrt(R / (2 * a));
  const long double rp = std::sqrt(R / (2 * pi_l));
  const long double ref = ra / (4 * s) * z * ref_bessel(-2, x) -
                          rp * b1 / (2 * s) * std::pow(z, 1.5L) * ref_bessel(-3, x) -
                          ra * E / (4 * s) * z * z * ref_bessel(-4, x) +
                          (E * b1 + a * b3 / 3) * rp / (2 * s) * std::pow(z, 2.5L) * ref_bessel(-5, x);
  CHECK(m.value.lnmag == doctest::Approx(static_cast<double>(std::log(ref))).epsilon(1e-12));
  CHECK(m.expansion.terms[0].coeff == doctest::Approx(std::sqrt(3.0 / 12.0) / (4 * std::sin(pi / 3))));
}

TEST_CASE("Bernoulli zeros drop the odd terms") {
  // c/2a = 1/2
  const ThetaParams p{HalfInteger(2), HalfInteger(2), 0};
  for (const auto& m : {mainterm_B(p, 5, 2, 100), mainterm_Bprime(p, 5, 2, 100)}) {
    CHECK(std::abs(m.expansion.terms[1].coeff) < 1e-15);
    CHECK(std::abs(m.expansion.terms[3].coeff) < 1e-15);
  }
}

TEST_CASE("all four C-blocks share the shift constant") {
  for (long R : {3L, 4L, 5L, 7L}) {
    for (long S = 1; S < R; ++S) {
      if (std::gcd(R, S) != 1) continue;
      for (long k = 1; k <= 3; ++k) {
        const auto dec = decompose_C({Family::C, R, S, k});
        const double e0 = shift_constant(dec[0].params, R, S, Variant::ThreeR);
        for (const auto& t : dec) {
          CHECK(shift_constant(t.params, R, S, Variant::ThreeR) == doctest::Approx(e0).epsilon(1e-14));
        }
      }
    }
  }
}

TEST_CASE("collapse of the signed block main terms") {
  for (auto [R, S] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {5, 2}, {7, 3}}) {
    for (long k = 0; k <= 3; ++k) {
      std::vector<FamilySpec> specs;
      if (k >= 1) specs.push_back({Family::C, R, S, k});
      if (k >= 1) specs.push_back({Family::Cprime, R, S, k});
      if (2 * S < R) specs.push_back({Family::D, R, S, k});
      if (2 * S < R && k >= 1) specs.push_back({Family::Dprime, R, S, k});
      for (const auto& spec : specs) {
        for (long N : {100L, 10000L}) {
          LogValue sum;
          for (const auto& t : decompose(spec)) {
            const auto m = t.denominator == Denominator::Pair ? mainterm_B(t.params, R, S, N)
                                                               : mainterm_Bprime(t.params, R, S, N);
            sum = sum + (t.sign > 0 ? m.value : -m.value);
          }
          const auto fam = mainterm_family(spec, N, Form::Bessel);
          CAPTURE(spec.str());
          CAPTURE(N);
          CHECK(sum.sign == fam.sign);
          CHECK(std::abs(std::expm1(sum.lnmag - fam.lnmag)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("elementary forms") {
  const FamilySpec c{Family::C, 3, 1, 1};
  for (long N : {10L, 1000L}) {
    const double expect = std::log(pi) - 1.25 * std::log(static_cast<double>(N)) -
                          std::log(4 * std::pow(9.0, 0.75) * std::sin(pi / 3)) +
                          2 * pi * std::sqrt(N / 9.0);
    CHECK(mainterm_family(c, N, Form::Elementary).lnmag == doctest::Approx(expect).epsilon(1e-14));
  }
  for (long N : {1L, 50L, 5000L}) {
    CHECK(mainterm_family({Family::Dprime, 5, 2, 2}, N, Form::Elementary).sign == -1);
    CHECK(mainterm_family({Family::Dprime, 5, 2, 2}, N, Form::Bessel).sign == -1);
  }
  const auto big = mainterm_family(c, 10000, Form::Elementary);
  const long double ref = std::log(std::numbers::pi_v<long double>) - 1.25L * std::log(10000.0L) -
                          0.75L * std::log(9.0L) - std::log(4.0L * std::sin(std::numbers::pi_v<long double> / 3)) +
                          2 * std::numbers::pi_v<long double> * std::sqrt(10000.0L / 9);
  CHECK(big.lnmag == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
}

TEST_CASE("property: elementary and Bessel forms agree within 5/x") {
  for (Family f : {Family::C, Family::Cprime, Family::D, Family::Dprime}) {
    const FamilySpec spec{f, 7, 3, 2};
    for (long N : {1000L, 10000L, 100000L}) {
      const auto b = mainterm_family(spec, N, Form::Bessel);
      const auto e = mainterm_family(spec, N, Form::Elementary);
      CHECK(b.sign == e.sign);
      CHECK(std::abs(std::expm1(e.lnmag - b.lnmag)) <= 5.0 / family_argument(spec, N));
    }
  }
}

TEST_CASE("main terms reject N < 1") {
  CHECK_THROWS_AS(mainterm_family({Family::C, 3, 1, 1}, 0, Form::Bessel), Error);
  CHECK_THROWS_AS(mainterm_B({HalfInteger(6), HalfInteger(7), 2}, 3, 1, 0), Error);
}
