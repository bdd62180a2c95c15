#include "thetatrunc/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "thetatrunc/error.hpp"

namespace thetatrunc {

using std::numbers::pi;

LogValue LogValue::from_double(double v) {
  if (v == 0.0) return {};
  return {v > 0 ? 1 : -1, std::log(std::abs(v))};
}

LogValue LogValue::from_integer(const mpz_class& z) {
  const int s = sgn(z);
  if (s == 0) return {};
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return {s, std::log(std::abs(mantissa)) + static_cast<double>(exp2) * std::numbers::ln2};
}

double LogValue::to_double() const { return sign == 0 ? 0.0 : sign * std::exp(lnmag); }

LogValue LogValue::operator*(const LogValue& o) const {
  if (sign == 0 || o.sign == 0) return {};
  return {sign * o.sign, lnmag + o.lnmag};
}

LogValue LogValue::operator+(const LogValue& o) const {
  if (sign == 0) return o;
  if (o.sign == 0) return *this;
  const LogValue& big = lnmag >= o.lnmag ? *this : o;
  const LogValue& small = lnmag >= o.lnmag ? o : *this;
  // big + small = big * (1 + r)
  const double r = big.sign * small.sign * std::exp(small.lnmag - big.lnmag);
  const double total = 1.0 + r;
  if (total == 0.0) return {};
  const double l = r > -0.5 ? std::log1p(r) : std::log(std::abs(total));
  return {total > 0 ? big.sign : -big.sign, big.lnmag + l};
}

namespace {

constexpr int kMaxBernoulli = 12;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  static const auto table = [] {
    std::array<double, kMaxBernoulli + 1> b{};
    b[0] = 1.0;
    for (int n = 1; n <= kMaxBernoulli; ++n) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += binomial(n + 1, j) * b[j];
      b[n] = -s / (n + 1);
    }
    return b;
  }();
  return table;
}

void check_bernoulli_index(int n) {
  if (n < 0 || n > kMaxBernoulli) {
    fail(ErrorCode::InvalidArgument, "Bernoulli index must lie in [0, 12]");
  }
}

double sin_factor(std::int64_t R, std::int64_t S) {
  return std::sin(static_cast<double>(S) * pi / static_cast<double>(R));
}

}  // namespace

double bernoulli_number(int n) {
  check_bernoulli_index(n);
  return bernoulli_table()[n];
}

double bernoulli_poly(int n, double x) {
  check_bernoulli_index(n);
  // Horner over the binomial expansion, highest power of x first.
  double r = 0.0;
  for (int j = 0; j <= n; ++j) r = r * x + binomial(n, j) * bernoulli_table()[j];
  return r;
}

BesselExpansion BesselExpansion::make(Variant variant, std::int64_t R, std::int64_t N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "main terms need N >= 1");
  const double m = variant == Variant::ThreeR ? 3.0 : 2.0;
  const auto Rd = static_cast<double>(R);
  const auto Nd = static_cast<double>(N);
  BesselExpansion e;
  e.variant = variant;
  e.argument = 2.0 * pi * std::sqrt(Nd / (m * Rd));
  e.scale = pi / std::sqrt(m * Rd * Nd);
  return e;
}

double BesselExpansion::scaled_value() const {
  double sum = 0.0;
  for (const auto& t : terms) {
    sum += t.coeff * std::pow(scale, t.power.to_double()) * bessel_I_scaled(t.nu, argument);
  }
  return sum;
}

LogValue BesselExpansion::evaluate() const {
  LogValue v = LogValue::from_double(scaled_value());
  if (v.sign != 0) v.lnmag += argument;
  return v;
}

double shift_constant(const ThetaParams& p, std::int64_t R, std::int64_t S, Variant variant) {
  const double a = p.a.to_double();
  const double c = p.c.to_double();
  const auto Rd = static_cast<double>(R);
  const auto Sd = static_cast<double>(S);
  const double r_part = variant == Variant::ThreeR ? Rd / 12.0 : Rd / 8.0;
  return static_cast<double>(p.d) - c * c / (4.0 * a) + r_part - Sd / 2.0 + Sd * Sd / (2.0 * Rd);
}

MainTerm mainterm_B(const ThetaParams& p, std::int64_t R, std::int64_t S, std::int64_t N) {
  p.validate();
  const double a = p.a.to_double();
  const double u = p.c.to_double() / (2.0 * a);
  const double sn = sin_factor(R, S);
  const double E = shift_constant(p, R, S, Variant::ThreeR);
  const double b1 = bernoulli_poly(1, u);
  const double b3 = bernoulli_poly(3, u);
  const double root = std::sqrt(pi / a);

  MainTerm m;
  m.expansion = BesselExpansion::make(Variant::ThreeR, R, N);
  m.expansion.terms = {
      {root / (4.0 * sn), HalfInteger::from_twice(-1), HalfInteger::from_twice(1)},
      {-b1 / (2.0 * sn), HalfInteger(-1), HalfInteger(1)},
      {-root * E / (4.0 * sn), HalfInteger::from_twice(-3), HalfInteger::from_twice(3)},
      {(E * b1 + a * b3 / 3.0) / (2.0 * sn), HalfInteger(-2), HalfInteger(2)},
  };
  m.value = m.expansion.evaluate();
  return m;
}

MainTerm mainterm_Bprime(const ThetaParams& p, std::int64_t R, std::int64_t S, std::int64_t N) {
  p.validate();
  const double a = p.a.to_double();
  const double u = p.c.to_double() / (2.0 * a);
  const double sn = sin_factor(R, S);
  const double E = shift_constant(p, R, S, Variant::TwoR);
  const double b1 = bernoulli_poly(1, u);
  const double b3 = bernoulli_poly(3, u);
  const double ra = std::sqrt(static_cast<double>(R) / (2.0 * a));
  const double rp = std::sqrt(static_cast<double>(R) / (2.0 * pi));

  MainTerm m;
  m.expansion = BesselExpansion::make(Variant::TwoR, R, N);
  m.expansion.terms = {
      {ra / (4.0 * sn), HalfInteger(-1), HalfInteger(1)},
      {-rp * b1 / (2.0 * sn), HalfInteger::from_twice(-3), HalfInteger::from_twice(3)},
      {-ra * E / (4.0 * sn), HalfInteger(-2), HalfInteger(2)},
      {(E * b1 + a * b3 / 3.0) * rp / (2.0 * sn), HalfInteger::from_twice(-5),
       HalfInteger::from_twice(5)},
  };
  m.value = m.expansion.evaluate();
  return m;
}

double family_argument(const FamilySpec& spec, std::int64_t N) {
  const Variant v = spec.family == Family::Cprime ? Variant::TwoR : Variant::ThreeR;
  return BesselExpansion::make(v, spec.R, N).argument;
}

LogValue mainterm_family(const FamilySpec& spec, std::int64_t N, Form form) {
  spec.validate();
  if (N < 1) fail(ErrorCode::InvalidArgument, "main terms need N >= 1");
  const auto R = static_cast<double>(spec.R);
  const auto Nd = static_cast<double>(N);
  const double sn = sin_factor(spec.R, spec.S);
  const double kS = static_cast<double>(spec.k * spec.S);
  const double k21S = static_cast<double>((2 * spec.k + 1) * spec.S);

  if (form == Form::Bessel) {
    if (spec.family == Family::Cprime) {
      BesselExpansion e = BesselExpansion::make(Variant::TwoR, spec.R, N);
      e.terms = {{kS * std::sqrt(R / (2.0 * pi)) / (2.0 * sn), HalfInteger::from_twice(-5),
                  HalfInteger::from_twice(5)}};
      return e.evaluate();
    }
    double coeff = 0.0;
    switch (spec.family) {
      case Family::C: coeff = kS / (2.0 * sn); break;
      case Family::D: coeff = k21S / (2.0 * sn); break;
      case Family::Dprime: coeff = -2.0 * kS / sn; break;
      case Family::Cprime: break;
    }
    BesselExpansion e = BesselExpansion::make(Variant::ThreeR, spec.R, N);
    e.terms = {{coeff, HalfInteger(-2), HalfInteger(2)}};
    return e.evaluate();
  }

  const double x3 = 2.0 * pi * std::sqrt(Nd / (3.0 * R));
  const double n54 = -1.25 * std::log(Nd);
  const double r34 = 0.75 * std::log(3.0 * R);
  switch (spec.family) {
    case Family::C:
      return {1, std::log(pi * kS / (4.0 * sn)) - r34 + n54 + x3};
    case Family::D:
      return {1, std::log(pi * k21S / (4.0 * sn)) - r34 + n54 + x3};
    case Family::Dprime:
      return {-1, std::log(pi * kS / sn) - r34 + n54 + x3};
    case Family::Cprime: {
      const double x2 = 2.0 * pi * std::sqrt(Nd / (2.0 * R));
      return {1, std::log(pi * kS / (8.0 * std::sqrt(2.0 * R) * sn)) - 1.5 * std::log(Nd) + x2};
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace thetatrunc
