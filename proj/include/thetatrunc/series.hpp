#pragma once

// Exact truncated q-series over arbitrary-precision integers.
//
// Every series has an exclusive truncation bound `order`: coefficients of
// q^0 .. q^{order-1} are known, everything above is discarded. Binary
// operations truncate to the smaller operand order.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "thetatrunc/half_integer.hpp"

namespace thetatrunc {

class PowerSeries {
 public:
  /// The zero series truncated at `order` (order >= 1).
  explicit PowerSeries(std::size_t order);
  explicit PowerSeries(std::vector<mpz_class> coeffs);
  PowerSeries(std::initializer_list<long> coeffs);

  static PowerSeries constant(long value, std::size_t order);
  static PowerSeries monomial(std::size_t exponent, long coeff, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }

  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  mpz_class& operator[](std::size_t n) { return coeffs_[n]; }

  std::span<const mpz_class> coeffs() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  /// In place (1 - q^m) multiplication and division; m >= 1.
  void multiply_one_minus(std::size_t m);
  void divide_one_minus(std::size_t m);

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries operator-() const;

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

  bool operator==(const PowerSeries& o) const;

 private:
  std::vector<mpz_class> coeffs_;
};

/// Lowest exponent where the two series differ, compared up to the common order.
std::optional<std::size_t> first_mismatch(const PowerSeries& a, const PowerSeries& b);

/// Truncated Cauchy product.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
PowerSeries inverse(const PowerSeries& f);

/// (q;q)_n = prod_{j=1}^n (1 - q^j).
PowerSeries finite_pochhammer(std::size_t n, std::size_t order);

/// Gaussian binomial [L over K]_q; the zero series unless 0 <= K <= L.
PowerSeries qbinomial(std::int64_t L, std::int64_t K, std::size_t order);

/// One factor 1/(q^A; q^B)_inf. Requires 1 <= A < B, except that A == B is
/// admitted for the (q^R; q^R) factor of the triple product.
struct Residue {
  std::int64_t A;
  std::int64_t B;
};

struct ProductSpec {
  std::vector<Residue> residues;

  /// (q^S, q^{R-S}; q^R)_inf
  static ProductSpec pair(std::int64_t R, std::int64_t S);
  /// (q^S, q^{R-S}, q^R; q^R)_inf
  static ProductSpec triple(std::int64_t R, std::int64_t S);

  void validate() const;
};

/// Partition-counting series prod 1/(1 - q^{A + jB}) over all residues.
PowerSeries pochhammer_inv(const ProductSpec& spec, std::size_t order);

/// Parameters (a, c, d) of G_{a,c,d}(q) = sum_{j>=0} q^{a j^2 + c j + d}.
struct ThetaParams {
  HalfInteger a;
  HalfInteger c;
  std::int64_t d = 0;

  /// a > 0, d >= 0 and a j^2 + c j integral for every j.
  void validate() const;

  /// Twice the exponent a j^2 + c j + d; exact for all j.
  std::int64_t twice_exponent(std::int64_t j) const {
    return a.twice() * j * j + c.twice() * j + 2 * d;
  }

  bool operator==(const ThetaParams&) const = default;
};

PowerSeries theta_partial(const ThetaParams& p, std::size_t order);

}  // namespace thetatrunc
