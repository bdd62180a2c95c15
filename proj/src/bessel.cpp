#include <cmath>
#include <numbers>

#include "thetatrunc/asymptotics.hpp"
#include "thetatrunc/error.hpp"

namespace thetatrunc {

namespace {

constexpr double kSeriesLimit = 30.0;
constexpr int kMaxSeriesTerms = 400;
constexpr int kAsymptoticTerms = 10;

// exp(-x) sum_m (x/2)^{2m+nu} / (m! Gamma(m+nu+1)), summed in log space per
// term so that (x/2)^{2m} does not overflow before the exp(-x) scaling.
double series_scaled(double nu, double x) {
  const double lhalf = std::log(x / 2.0);
  double sum = 0.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    const double g = m + nu + 1.0;
    // 1/Gamma vanishes at non-positive integers; only reachable for integer nu < 0,
    // which callers fold onto |nu| beforehand.
    if (g <= 0.0 && g == std::floor(g)) continue;
    const double lg = std::lgamma(g);
    const double sign = (g < 0.0 && static_cast<long>(std::floor(g)) % 2 != 0) ? -1.0 : 1.0;
    const double t = sign * std::exp((2.0 * m + nu) * lhalf - std::lgamma(m + 1.0) - lg - x);
    sum += t;
    if (m > x && std::abs(t) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion: I_nu(x) ~ e^x / sqrt(2 pi x) sum_k (-1)^k a_k(nu) / x^k,
// a_k(nu) = prod_{j=1}^k (4nu^2 - (2j-1)^2) / (k! 8^k).
double asymptotic_scaled(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    term *= -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    sum += term;
    if (term == 0.0) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_I_scaled(HalfInteger nu, double x) {
  if (nu.twice() < -8 || nu.twice() > 8) {
    fail(ErrorCode::UnsupportedOrder, "Bessel order " + nu.str() + " outside [-4, 4]");
  }
  if (!(x > 0.0)) fail(ErrorCode::InvalidArgument, "Bessel argument must be positive");
  double v = nu.to_double();
  if (nu.is_integer()) v = std::abs(v);
  return x <= kSeriesLimit ? series_scaled(v, x) : asymptotic_scaled(v, x);
}

}  // namespace thetatrunc
