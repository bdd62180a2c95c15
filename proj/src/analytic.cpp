#include "thetatrunc/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "thetatrunc/error.hpp"

namespace thetatrunc {

using std::numbers::pi;
constexpr complex kI{0.0, 1.0};

TauPoint::TauPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y > 0.0)) fail(ErrorCode::InvalidArgument, "tau needs a positive imaginary part");
}

complex TauPoint::q() const { return q_power(*this, 1.0); }

double TauPoint::abs_q() const { return std::exp(-2.0 * pi * y); }

complex q_power(const TauPoint& t, double exponent) {
  // exp(2 pi i tau e); the phase is reduced mod 1 before scaling by 2 pi.
  const double turns = std::remainder(t.x * exponent, 1.0);
  return std::polar(std::exp(-2.0 * pi * t.y * exponent), 2.0 * pi * turns);
}

complex eval_G(const ThetaParams& p, const TauPoint& t, double tol) {
  p.validate();
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double aq = t.abs_q();
  const double stop = tol * (1.0 - aq);
  complex sum{0.0, 0.0};
  for (std::int64_t j = 0;; ++j) {
    const double e = static_cast<double>(p.twice_exponent(j)) / 2.0;
    const double mag = std::exp(-2.0 * pi * t.y * e);
    sum += q_power(t, e);
    const bool increasing = 2 * p.a.twice() * j + p.c.twice() > 0;
    if (increasing && mag < stop) break;
  }
  return sum;
}

complex eval_product_inv(const ProductSpec& spec, const TauPoint& t, double tol) {
  spec.validate();
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  complex r{1.0, 0.0};
  for (const auto& res : spec.residues) {
    for (std::int64_t m = res.A;; m += res.B) {
      const auto md = static_cast<double>(m);
      if (std::exp(-2.0 * pi * t.y * md) < tol) break;
      r /= 1.0 - q_power(t, md);
    }
  }
  return r;
}

complex eval_L(const ThetaParams& p, std::int64_t R, std::int64_t S, const TauPoint& t,
               double tol) {
  return eval_G(p, t, tol) * eval_product_inv(ProductSpec::pair(R, S), t, tol);
}

complex eval_Lprime(const ThetaParams& p, std::int64_t R, std::int64_t S, const TauPoint& t,
                    double tol) {
  return eval_G(p, t, tol) * eval_product_inv(ProductSpec::triple(R, S), t, tol);
}

complex F_direct(double b, complex theta, double tol) {
  if (!(b > 0.0)) fail(ErrorCode::InvalidArgument, "F_b needs b > 0");
  if (!(theta.real() > 0.0)) fail(ErrorCode::InvalidArgument, "F_b needs Re theta > 0");
  complex sum{0.0, 0.0};
  for (std::int64_t n = 0;; ++n) {
    const auto nd = static_cast<double>(n);
    const complex term = std::exp(-(nd * nd + b * nd) * theta);
    sum += term;
    if (std::abs(term) < tol * std::abs(sum)) break;
  }
  return sum;
}

complex F_expansion(double b, complex theta, int nterms) {
  if (nterms < 1 || nterms > 4) fail(ErrorCode::InvalidArgument, "nterms must lie in [1, 4]");
  if (!(theta.real() > 0.0) || std::abs(theta.imag()) > theta.real()) {
    fail(ErrorCode::SectorViolation, "F_b expansion needs |Im theta| <= Re theta");
  }
  complex bracket = std::sqrt(pi / theta) / 2.0;
  complex power{1.0, 0.0};
  double factorial = 1.0;
  for (int n = 0; n < nterms; ++n) {
    if (n > 0) factorial *= n;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    bracket -= sign * bernoulli_poly(2 * n + 1, b / 2.0) / ((2 * n + 1) * factorial) * power;
    power *= theta;
  }
  return std::exp(b * b * theta / 4.0) * bracket;
}

TransformedProduct transformed_pair_product(std::int64_t R, std::int64_t S, const TauPoint& t,
                                            double tol) {
  ProductSpec::pair(R, S).validate();
  const complex tau = t.tau();
  const auto Rd = static_cast<double>(R);
  const auto Sd = static_cast<double>(S);
  const double sn = std::sin(Sd * pi / Rd);
  TransformedProduct out;
  out.main = std::exp(pi * kI * tau * (Rd / 6.0 - Sd + Sd * Sd / Rd)) *
             std::exp(pi * kI / (6.0 * Rd * tau)) / (2.0 * sn);

  const complex w = std::exp(-2.0 * pi * kI / (Rd * tau));
  const complex zeta = std::polar(1.0, 2.0 * pi * Sd / Rd);
  complex residual{1.0, 0.0};
  complex wp = w;
  while (std::abs(wp) >= tol) {
    residual /= (1.0 - zeta * wp) * (1.0 - wp / zeta);
    wp *= w;
  }
  out.corrected = out.main * residual;
  return out;
}

complex mainarc_L_expansion(const ThetaParams& p, std::int64_t R, std::int64_t S,
                            const TauPoint& t) {
  p.validate();
  if (std::abs(t.x) > t.y) fail(ErrorCode::MainArcViolation, "main-arc expansion needs |x| <= y");
  const complex tau = t.tau();
  const double a = p.a.to_double();
  const double u = p.c.to_double() / (2.0 * a);
  const double b1 = bernoulli_poly(1, u);
  const double b3 = bernoulli_poly(3, u);
  const double E = shift_constant(p, R, S, Variant::ThreeR);
  const double root = std::sqrt(pi / a);
  const complex w = -2.0 * pi * kI * tau;
  const complex sw = std::sqrt(w);
  const complex bracket = root / (2.0 * sw) - b1 - (E / 2.0) * root * sw + (E * b1 + a * b3 / 3.0) * w;
  const auto Rd = static_cast<double>(R);
  const double sn = std::sin(static_cast<double>(S) * pi / Rd);
  return std::exp(pi * kI / (6.0 * Rd * tau)) / (2.0 * sn) * bracket;
}

double circle_height(Variant variant, std::int64_t R, std::int64_t N) {
  if (R < 1 || N < 1) fail(ErrorCode::InvalidArgument, "circle height needs R >= 1 and N >= 1");
  const double m = variant == Variant::ThreeR ? 3.0 : 2.0;
  return 1.0 / (2.0 * std::sqrt(m * static_cast<double>(R) * static_cast<double>(N)));
}

std::size_t minimal_samples(Variant variant, std::int64_t R, std::int64_t N, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    fail(ErrorCode::InvalidArgument, "tail tolerance must lie in (0, 1)");
  }
  const double y = circle_height(variant, R, std::max<std::int64_t>(N, 1));
  const auto degree = static_cast<std::size_t>(std::ceil(std::log(1.0 / tail_tol) / (2.0 * pi * y)));
  return std::bit_ceil(2 * (degree + static_cast<std::size_t>(std::max<std::int64_t>(N, 0))));
}

namespace {

// Index-ascending pairwise reduction; fixed order keeps results bit-reproducible.
complex pairwise_sum(std::span<const complex> v) {
  if (v.empty()) return {0.0, 0.0};
  if (v.size() <= 8) {
    complex s{0.0, 0.0};
    for (const auto& z : v) s += z;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct CircleSamples {
  std::vector<complex> values;  // L(q) q^{-N} / M at x_m = -1/2 + m/M
  std::vector<double> xs;
  double y;
};

CircleSamples sample_circle(const ThetaParams& p, std::int64_t R, std::int64_t S, std::int64_t N,
                            std::size_t samples, Variant variant, double tail_tol, Kind which) {
  p.validate();
  if (N < 0) fail(ErrorCode::InvalidArgument, "coefficient index must be non-negative");
  if (samples == 0 || !std::has_single_bit(samples)) {
    fail(ErrorCode::InvalidArgument, "sample count must be a power of two");
  }
  const std::size_t need = minimal_samples(variant, R, N, tail_tol);
  if (samples < need) {
    fail(ErrorCode::BandwidthTooSmall, std::to_string(samples) + " samples, bandwidth rule needs " +
                                           std::to_string(need));
  }
  CircleSamples cs;
  cs.y = circle_height(variant, R, std::max<std::int64_t>(N, 1));
  cs.values.resize(samples);
  cs.xs.resize(samples);
  const auto M = static_cast<double>(samples);
  const auto Nd = static_cast<double>(N);
  for (std::size_t m = 0; m < samples; ++m) {
    const double x = -0.5 + static_cast<double>(m) / M;
    const TauPoint t(x, cs.y);
    const complex L = which == Kind::B ? eval_L(p, R, S, t) : eval_Lprime(p, R, S, t);
    cs.values[m] = L * q_power(t, -Nd) / M;
    cs.xs[m] = x;
  }
  return cs;
}

}  // namespace

double wright_coefficient(const ThetaParams& p, std::int64_t R, std::int64_t S,
                          const QuadratureSpec& quad, Kind which) {
  const auto cs =
      sample_circle(p, R, S, quad.N, quad.samples, quad.radius_variant, quad.tail_tol, which);
  return pairwise_sum(cs.values).real();
}

ArcSplit arc_split_diagnostic(const ThetaParams& p, std::int64_t R, std::int64_t S,
                              std::int64_t N, std::size_t samples, Kind which) {
  const auto cs = sample_circle(p, R, S, N, samples, default_variant(which), kDefaultTol, which);
  std::vector<complex> main;
  std::vector<complex> rest;
  for (std::size_t m = 0; m < cs.values.size(); ++m) {
    (std::abs(cs.xs[m]) <= cs.y ? main : rest).push_back(cs.values[m]);
  }
  ArcSplit out;
  out.main_arc = pairwise_sum(main);
  out.error_arc = pairwise_sum(rest);
  out.ratio = std::abs(out.error_arc) / std::abs(out.main_arc);
  return out;
}

AwayBound bound_check_away(std::int64_t A, std::int64_t B, const TauPoint& t) {
  const double ax = std::abs(t.x);
  if (ax < t.y || ax > 0.5) fail(ErrorCode::RangeViolation, "bound check needs y <= |x| <= 1/2");
  const ProductSpec spec{{{A, B}}};
  AwayBound out;
  out.lhs = std::abs(eval_product_inv(spec, t));
  out.rhs_shape = eval_product_inv(spec, TauPoint(0.0, t.y)).real();
  return out;
}

}  // namespace thetatrunc
