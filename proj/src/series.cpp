#include "thetatrunc/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "thetatrunc/error.hpp"

namespace thetatrunc {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) fail(ErrorCode::InvalidArgument, "series order must be positive");
}

PowerSeries::PowerSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "series order must be positive");
}

PowerSeries::PowerSeries(std::initializer_list<long> coeffs) : coeffs_(coeffs.size()) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "series order must be positive");
  std::size_t i = 0;
  for (long c : coeffs) coeffs_[i++] = c;
}

PowerSeries PowerSeries::constant(long value, std::size_t order) {
  PowerSeries s(order);
  s[0] = value;
  return s;
}

PowerSeries PowerSeries::monomial(std::size_t exponent, long coeff, std::size_t order) {
  PowerSeries s(order);
  if (exponent < order) s[exponent] = coeff;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order == 0) fail(ErrorCode::InvalidArgument, "series order must be positive");
  std::vector<mpz_class> c(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
  c.resize(std::min(order, coeffs_.size()));
  return PowerSeries(std::move(c));
}

void PowerSeries::multiply_one_minus(std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "factor exponent must be positive");
  for (std::size_t n = coeffs_.size(); n-- > m;) coeffs_[n] -= coeffs_[n - m];
}

void PowerSeries::divide_one_minus(std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "factor exponent must be positive");
  for (std::size_t n = m; n < coeffs_.size(); ++n) coeffs_[n] += coeffs_[n - m];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

std::optional<std::size_t> first_mismatch(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  PowerSeries r(order);
  // Theta numerators are sparse, so skipping zero terms of f turns the
  // common sparse-times-dense product into O(nnz(f) * order).
  for (std::size_t i = 0; i < order; ++i) {
    const mpz_class& fi = f[i];
    const int s = sgn(fi);
    if (s == 0) continue;
    const bool unit = (fi == 1 || fi == -1);
    for (std::size_t j = 0; i + j < order; ++j) {
      const mpz_class& gj = g[j];
      if (unit) {
        if (s > 0) {
          r[i + j] += gj;
        } else {
          r[i + j] -= gj;
        }
      } else {
        mpz_addmul(r[i + j].get_mpz_t(), fi.get_mpz_t(), gj.get_mpz_t());
      }
    }
  }
  return r;
}

PowerSeries inverse(const PowerSeries& f) {
  if (f[0] != 1 && f[0] != -1) {
    fail(ErrorCode::NonUnitConstantTerm, "inverse requires constant term +1 or -1");
  }
  const std::size_t order = f.order();
  const bool negative = f[0] < 0;
  PowerSeries g(order);
  g[0] = f[0];
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i < order; ++i) {
    if (sgn(f[i]) != 0) support.push_back(i);
  }
  // f0 * g[n] = -sum_{i>=1} f[i] g[n-i], and 1/f0 == f0.
  mpz_class acc;
  for (std::size_t n = 1; n < order; ++n) {
    acc = 0;
    for (std::size_t i : support) {
      if (i > n) break;
      mpz_addmul(acc.get_mpz_t(), f[i].get_mpz_t(), g[n - i].get_mpz_t());
    }
    g[n] = negative ? acc : mpz_class(-acc);
  }
  return g;
}

PowerSeries finite_pochhammer(std::size_t n, std::size_t order) {
  PowerSeries r = PowerSeries::constant(1, order);
  for (std::size_t j = 1; j <= n && j < order; ++j) r.multiply_one_minus(j);
  return r;
}

PowerSeries qbinomial(std::int64_t L, std::int64_t K, std::size_t order) {
  if (K < 0 || L < 0 || K > L) return PowerSeries(order);
  // Pascal rows: [l, j] = [l-1, j] + q^{l-j} [l-1, j-1].
  std::vector<PowerSeries> row(static_cast<std::size_t>(K) + 1, PowerSeries(order));
  row[0] = PowerSeries::constant(1, order);
  for (std::int64_t l = 1; l <= L; ++l) {
    const std::int64_t top = std::min(l, K);
    for (std::int64_t j = top; j >= 1; --j) {
      auto& cur = row[static_cast<std::size_t>(j)];
      const auto& prev = row[static_cast<std::size_t>(j - 1)];
      const auto shift = static_cast<std::size_t>(l - j);
      for (std::size_t n = shift; n < order; ++n) cur[n] += prev[n - shift];
    }
  }
  return row[static_cast<std::size_t>(K)];
}

ProductSpec ProductSpec::pair(std::int64_t R, std::int64_t S) {
  return ProductSpec{{{S, R}, {R - S, R}}};
}

ProductSpec ProductSpec::triple(std::int64_t R, std::int64_t S) {
  return ProductSpec{{{S, R}, {R - S, R}, {R, R}}};
}

void ProductSpec::validate() const {
  for (const auto& r : residues) {
    if (r.A < 1 || r.B < r.A) {
      fail(ErrorCode::InvalidArgument, "product residue needs 1 <= A <= B, got (" +
                                           std::to_string(r.A) + "," + std::to_string(r.B) + ")");
    }
  }
}

PowerSeries pochhammer_inv(const ProductSpec& spec, std::size_t order) {
  spec.validate();
  PowerSeries r = PowerSeries::constant(1, order);
  for (const auto& res : spec.residues) {
    for (auto m = static_cast<std::size_t>(res.A); m < order; m += static_cast<std::size_t>(res.B)) {
      r.divide_one_minus(m);
    }
  }
  return r;
}

void ThetaParams::validate() const {
  if (a.twice() <= 0) fail(ErrorCode::InvalidArgument, "theta parameter a must be positive");
  if (d < 0) fail(ErrorCode::InvalidArgument, "theta parameter d must be non-negative");
  // j = 1 and j = 2 settle integrality for every j when 2a, 2c are integers.
  for (std::int64_t j = 1; j <= 2; ++j) {
    if ((a.twice() * j * j + c.twice() * j) % 2 != 0) {
      fail(ErrorCode::NonIntegralExponent,
           "a j^2 + c j is not an integer at j=" + std::to_string(j) + " for a=" + a.str() +
               ", c=" + c.str());
    }
  }
  if (a.twice() + c.twice() < 0) {
    fail(ErrorCode::InvalidArgument, "a j^2 + c j must be non-negative (a + c < 0)");
  }
}

PowerSeries theta_partial(const ThetaParams& p, std::size_t order) {
  p.validate();
  PowerSeries r(order);
  const auto limit = 2 * static_cast<std::int64_t>(order);
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t e2 = p.twice_exponent(j);
    // The exponent is increasing from here on once 2aj + c > 0.
    const bool increasing = 2 * p.a.twice() * j + p.c.twice() > 0;
    if (e2 >= limit && increasing) break;
    if (e2 < limit) r[static_cast<std::size_t>(e2 / 2)] += 1;
  }
  return r;
}

}  // namespace thetatrunc
