#pragma once

// Complex-plane evaluation of the theta blocks and products at
// q = exp(2 pi i tau), their expansions near q = 1, and coefficient recovery
// by trapezoid quadrature on the circle |q| = exp(-2 pi y).

#include <complex>
#include <cstddef>
#include <cstdint>

#include "thetatrunc/asymptotics.hpp"
#include "thetatrunc/series.hpp"

namespace thetatrunc {

using complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-20;

/// tau = x + i y with y > 0.
struct TauPoint {
  double x = 0.0;
  double y = 1.0;

  TauPoint(double x_, double y_);

  complex tau() const { return {x, y}; }
  complex q() const;
  double abs_q() const;
};

/// q^e for a real exponent e.
complex q_power(const TauPoint& t, double exponent);

complex eval_G(const ThetaParams& p, const TauPoint& t, double tol = kDefaultTol);
complex eval_product_inv(const ProductSpec& spec, const TauPoint& t, double tol = kDefaultTol);
complex eval_L(const ThetaParams& p, std::int64_t R, std::int64_t S, const TauPoint& t,
               double tol = kDefaultTol);
complex eval_Lprime(const ThetaParams& p, std::int64_t R, std::int64_t S, const TauPoint& t,
                    double tol = kDefaultTol);

/// F_b(theta) = sum_{n>=0} exp(-(n^2 + b n) theta), Re theta > 0.
complex F_direct(double b, complex theta, double tol = 1e-18);

/// Truncated small-theta expansion of F_b with nterms in [1, 4]; requires
/// |Im theta| <= Re theta.
complex F_expansion(double b, complex theta, int nterms);

struct TransformedProduct {
  complex main;       // closed main factor
  complex corrected;  // main factor times the residual product in exp(-2 pi i / (R tau))
};

/// 1/(q^S, q^{R-S}; q^R)_inf rewritten through the eta/theta transformation.
TransformedProduct transformed_pair_product(std::int64_t R, std::int64_t S, const TauPoint& t,
                                            double tol = kDefaultTol);

/// Main-arc expansion of L_{a,c,d} without the unknown higher-order constants;
/// requires |x| <= y.
complex mainarc_L_expansion(const ThetaParams& p, std::int64_t R, std::int64_t S,
                            const TauPoint& t);

enum class Kind { B, Bprime };

struct QuadratureSpec {
  std::int64_t N = 0;
  std::size_t samples = 0;
  Variant radius_variant = Variant::ThreeR;
  double tail_tol = kDefaultTol;
};

/// y = 1/(2 sqrt(3RN)) for ThreeR, 1/(2 sqrt(2RN)) for TwoR.
double circle_height(Variant variant, std::int64_t R, std::int64_t N);

/// Smallest power of two satisfying samples >= 2 (D + N) where
/// D = ceil(ln(1/tail_tol) / (2 pi y)).
std::size_t minimal_samples(Variant variant, std::int64_t R, std::int64_t N,
                            double tail_tol = kDefaultTol);

inline Variant default_variant(Kind which) {
  return which == Kind::B ? Variant::ThreeR : Variant::TwoR;
}

/// Trapezoid approximation of the Cauchy integral for the N-th coefficient.
double wright_coefficient(const ThetaParams& p, std::int64_t R, std::int64_t S,
                          const QuadratureSpec& quad, Kind which);

struct ArcSplit {
  complex main_arc;   // samples with |x| <= y
  complex error_arc;  // the rest of the circle
  double ratio;       // |error_arc| / |main_arc|
};

ArcSplit arc_split_diagnostic(const ThetaParams& p, std::int64_t R, std::int64_t S,
                              std::int64_t N, std::size_t samples, Kind which = Kind::B);

struct AwayBound {
  double lhs;        // |1/(q^A; q^B)_inf|
  double rhs_shape;  // 1/(|q|^A; |q|^B)_inf
  double ratio() const { return lhs / rhs_shape; }
};

/// Requires y <= |x| <= 1/2.
AwayBound bound_check_away(std::int64_t A, std::int64_t B, const TauPoint& t);

}  // namespace thetatrunc
