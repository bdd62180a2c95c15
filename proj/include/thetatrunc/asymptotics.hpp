#pragma once

// Floating-point main terms. Everything that grows like exp(2 pi sqrt(N/3R))
// is carried as a LogValue so that large N never overflows.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "thetatrunc/families.hpp"
#include "thetatrunc/half_integer.hpp"
#include "thetatrunc/series.hpp"

namespace thetatrunc {

/// sign * exp(lnmag); lnmag is ignored when sign == 0.
struct LogValue {
  int sign = 0;
  double lnmag = 0.0;

  static LogValue from_double(double v);
  static LogValue from_integer(const mpz_class& z);

  double to_double() const;

  LogValue operator*(const LogValue& o) const;
  LogValue operator+(const LogValue& o) const;
  LogValue operator-() const { return {-sign, lnmag}; }
  LogValue operator-(const LogValue& o) const { return *this + (-o); }
};

/// B_n for n <= 12, from the recurrence sum_{j<=n} C(n+1, j) B_j = 0.
double bernoulli_number(int n);

/// B_n(x) = sum_j C(n, j) B_j x^{n-j}, n <= 12.
double bernoulli_poly(int n, double x);

/// exp(-x) I_nu(x) for integer or half-integer nu in [-4, 4] and x > 0.
double bessel_I_scaled(HalfInteger nu, double x);

/// Which circle radius / Bessel argument a main term belongs to:
/// ThreeR uses 2 pi sqrt(N/(3R)), TwoR uses 2 pi sqrt(N/(2R)).
enum class Variant { ThreeR, TwoR };

struct BesselTerm {
  double coeff;
  HalfInteger nu;
  HalfInteger power;
};

/// sum_i coeff_i * scale^{power_i} * I_{nu_i}(argument), where
/// scale = pi / sqrt(3RN) (ThreeR) or pi / sqrt(2RN) (TwoR).
struct BesselExpansion {
  Variant variant = Variant::ThreeR;
  double argument = 0.0;
  double scale = 0.0;
  std::vector<BesselTerm> terms;

  static BesselExpansion make(Variant variant, std::int64_t R, std::int64_t N);

  /// The sum without its exp(argument) factor.
  double scaled_value() const;
  LogValue evaluate() const;
};

struct MainTerm {
  BesselExpansion expansion;
  LogValue value;
};

/// d - c^2/(4a) + R/12 - S/2 + S^2/(2R)  (ThreeR, for L)
/// d - c^2/(4a) + R/8  - S/2 + S^2/(2R)  (TwoR, for L')
double shift_constant(const ThetaParams& p, std::int64_t R, std::int64_t S, Variant variant);

/// Four-term Bessel main term of the coefficients of L_{a,c,d}.
MainTerm mainterm_B(const ThetaParams& p, std::int64_t R, std::int64_t S, std::int64_t N);

/// Four-term Bessel main term of the coefficients of L'_{a,c,d}.
MainTerm mainterm_Bprime(const ThetaParams& p, std::int64_t R, std::int64_t S, std::int64_t N);

enum class Form { Bessel, Elementary };

/// Closed-form leading term of a family coefficient.
LogValue mainterm_family(const FamilySpec& spec, std::int64_t N, Form form);

/// Bessel argument of the family's main term (used for the 5/x consistency bound).
double family_argument(const FamilySpec& spec, std::int64_t N);

}  // namespace thetatrunc
