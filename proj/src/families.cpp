#include "thetatrunc/families.hpp"

#include <algorithm>
#include <numeric>

#include "thetatrunc/error.hpp"

namespace thetatrunc {

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::Cprime: return "Cp";
    case Family::D: return "D";
    case Family::Dprime: return "Dp";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  if (tag == "C") return Family::C;
  if (tag == "Cp" || tag == "Cprime") return Family::Cprime;
  if (tag == "D") return Family::D;
  if (tag == "Dp" || tag == "Dprime") return Family::Dprime;
  fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(tag) + "'");
}

void FamilySpec::validate() const {
  if (R < 1 || S < 1) fail(ErrorCode::InvalidArgument, "R and S must be positive: " + str());
  if (std::gcd(R, S) != 1) fail(ErrorCode::InvalidArgument, "gcd(R,S) must be 1: " + str());
  switch (family) {
    case Family::C:
    case Family::Cprime:
      if (S >= R) fail(ErrorCode::InvalidArgument, "need 1 <= S < R: " + str());
      if (k < 1) fail(ErrorCode::InvalidArgument, "need k >= 1: " + str());
      break;
    case Family::D:
    case Family::Dprime:
      if (2 * S >= R) fail(ErrorCode::InvalidArgument, "need 1 <= S < R/2: " + str());
      if (k < (family == Family::D ? 0 : 1)) {
        fail(ErrorCode::InvalidArgument, "k out of range: " + str());
      }
      break;
  }
}

std::string FamilySpec::str() const {
  return std::string(family_tag(family)) + "(R=" + std::to_string(R) + ",S=" + std::to_string(S) +
         ",k=" + std::to_string(k) + ")";
}

Decomposition decompose_C(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != Family::C && spec.family != Family::Cprime) {
    fail(ErrorCode::InvalidArgument, "decompose_C needs a C or Cprime spec");
  }
  const auto [family, R, S, k] = spec;
  const auto den = family == Family::C ? Denominator::Pair : Denominator::Triple;
  const HalfInteger a(2 * R);
  const std::int64_t t1 = R * k * (k + 1) / 2 - S * k;
  const std::int64_t t2 = R * k * (k + 1) / 2 + (k + 1) * S;
  const std::int64_t t3 = R * (k + 2) * (k + 1) / 2 - S * (k + 1);
  const std::int64_t t4 = R * (k + 2) * (k + 1) / 2 + (k + 2) * S;
  return {{
      {+1, {a, HalfInteger((2 * k + 1) * R - 2 * S), t1}, den},
      {-1, {a, HalfInteger((2 * k + 1) * R + 2 * S), t2}, den},
      {-1, {a, HalfInteger((2 * k + 3) * R - 2 * S), t3}, den},
      {+1, {a, HalfInteger((2 * k + 3) * R + 2 * S), t4}, den},
  }};
}

namespace {

// Shared first half of both quintuple decompositions (the n <= -k-1 tail).
std::array<SignedThetaTerm, 2> quintuple_lower_tail(std::int64_t R, std::int64_t S,
                                                    std::int64_t k) {
  const auto a = HalfInteger::from_twice(3 * R);
  const std::int64_t h1 = R * (3 * k + 2) * (k + 1) / 2 + S * (3 * k + 3);
  const std::int64_t h2 = R * (3 * k + 2) * (k + 1) / 2 - S * (3 * k + 2);
  return {{
      {-1, {a, HalfInteger::from_twice((6 * k + 5) * R + 6 * S), h1}, Denominator::Pair},
      {+1, {a, HalfInteger::from_twice((6 * k + 5) * R - 6 * S), h2}, Denominator::Pair},
  }};
}

}  // namespace

Decomposition decompose_D(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != Family::D) fail(ErrorCode::InvalidArgument, "decompose_D needs a D spec");
  const auto [family, R, S, k] = spec;
  const auto a = HalfInteger::from_twice(3 * R);
  const std::int64_t h3 = R * (3 * k + 4) * (k + 1) / 2 - S * (3 * k + 3);
  const std::int64_t h4 = R * (3 * k + 4) * (k + 1) / 2 + S * (3 * k + 4);
  const auto low = quintuple_lower_tail(R, S, k);
  return {{
      low[0],
      low[1],
      {-1, {a, HalfInteger::from_twice((6 * k + 7) * R - 6 * S), h3}, Denominator::Pair},
      {+1, {a, HalfInteger::from_twice((6 * k + 7) * R + 6 * S), h4}, Denominator::Pair},
  }};
}

Decomposition decompose_Dprime(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != Family::Dprime) {
    fail(ErrorCode::InvalidArgument, "decompose_Dprime needs a Dprime spec");
  }
  const auto [family, R, S, k] = spec;
  const auto a = HalfInteger::from_twice(3 * R);
  const std::int64_t h3 = R * k * (3 * k + 1) / 2 - 3 * k * S;
  const std::int64_t h4 = R * k * (3 * k + 1) / 2 + S * (3 * k + 1);
  const auto low = quintuple_lower_tail(R, S, k);
  return {{
      low[0],
      low[1],
      {-1, {a, HalfInteger::from_twice((6 * k + 1) * R - 6 * S), h3}, Denominator::Pair},
      {+1, {a, HalfInteger::from_twice((6 * k + 1) * R + 6 * S), h4}, Denominator::Pair},
  }};
}

Decomposition decompose(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::C:
    case Family::Cprime: return decompose_C(spec);
    case Family::D: return decompose_D(spec);
    case Family::Dprime: return decompose_Dprime(spec);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

void check_pair(std::int64_t R, std::int64_t S) {
  if (R < 2 || S < 1 || S >= R || std::gcd(R, S) != 1) {
    fail(ErrorCode::InvalidArgument,
         "need gcd(R,S)=1 and 1 <= S < R, got R=" + std::to_string(R) + ", S=" + std::to_string(S));
  }
}

void add_term(PowerSeries& s, std::int64_t exponent, long sign) {
  if (exponent < 0) fail(ErrorCode::InvalidArgument, "negative exponent in numerator");
  if (static_cast<std::size_t>(exponent) < s.order()) s[static_cast<std::size_t>(exponent)] += sign;
}

// prod over m in {A + jB} of (1 - q^m), truncated.
void multiply_product(PowerSeries& s, std::int64_t A, std::int64_t B) {
  for (auto m = static_cast<std::size_t>(A); m < s.order(); m += static_cast<std::size_t>(B)) {
    s.multiply_one_minus(m);
  }
}

// n-th term of the quintuple bilateral sum:
// q^{n(3n+1)R/2} (q^{-3nS} - q^{(3n+1)S}), contributed into s.
void add_quintuple_term(PowerSeries& s, std::int64_t R, std::int64_t S, std::int64_t n) {
  const std::int64_t base = n * (3 * n + 1) * R / 2;  // n(3n+1) is always even
  add_term(s, base - 3 * n * S, +1);
  add_term(s, base + (3 * n + 1) * S, -1);
}

std::int64_t quintuple_min_exponent(std::int64_t R, std::int64_t S, std::int64_t n) {
  const std::int64_t base = n * (3 * n + 1) * R / 2;
  return std::min(base - 3 * n * S, base + (3 * n + 1) * S);
}

}  // namespace

PowerSeries genfun_B(const ThetaParams& p, std::int64_t R, std::int64_t S, std::size_t order) {
  check_pair(R, S);
  return mul(theta_partial(p, order), pochhammer_inv(ProductSpec::pair(R, S), order));
}

PowerSeries genfun_Bprime(const ThetaParams& p, std::int64_t R, std::int64_t S,
                          std::size_t order) {
  check_pair(R, S);
  return mul(theta_partial(p, order), pochhammer_inv(ProductSpec::triple(R, S), order));
}

PowerSeries genfun_family(const FamilySpec& spec, std::size_t order) {
  spec.validate();
  const auto [family, R, S, k] = spec;
  const auto limit = static_cast<std::int64_t>(order);
  PowerSeries num(order);
  switch (family) {
    case Family::C: {
      // (-1)^k sum_{j>=k} (-1)^j q^{Rj(j+1)/2} (q^{-jS} - q^{jS+S})
      auto min_exp = [&](std::int64_t j) { return R * j * (j + 1) / 2 - j * S; };
      std::int64_t j = k;
      for (; min_exp(j) < limit; ++j) {
        const long sign = ((j - k) % 2 == 0) ? 1 : -1;
        add_term(num, R * j * (j + 1) / 2 - j * S, sign);
        add_term(num, R * j * (j + 1) / 2 + j * S + S, -sign);
      }
      if (min_exp(j + 1) < limit) fail(ErrorCode::InsufficientRange, "tail sum not monotone");
      return mul(num, pochhammer_inv(ProductSpec::pair(R, S), order));
    }
    case Family::Cprime: {
      // (-1)^{k-1} sum_{j<k} (-1)^j q^{Rj(j+1)/2 - Sj} (1 - q^{(2j+1)S})
      for (std::int64_t j = 0; j < k; ++j) {
        const long sign = ((k - 1 + j) % 2 == 0) ? 1 : -1;
        const std::int64_t e = R * j * (j + 1) / 2 - S * j;
        add_term(num, e, sign);
        add_term(num, e + (2 * j + 1) * S, -sign);
      }
      return mul(num, pochhammer_inv(ProductSpec::triple(R, S), order));
    }
    case Family::D:
    case Family::Dprime: {
      // (q^R;q^R)(q^{R-2S},q^{R+2S};q^{2R}) * (sum / full product - 1); the
      // shared factors cancel against the full quintuple product.
      const std::int64_t top = family == Family::D ? k : k - 1;
      for (std::int64_t n = -k; n <= top; ++n) add_quintuple_term(num, R, S, n);
      PowerSeries r = mul(num, pochhammer_inv(ProductSpec::pair(R, S), order));
      PowerSeries outer = PowerSeries::constant(1, order);
      multiply_product(outer, R, R);
      multiply_product(outer, R - 2 * S, 2 * R);
      multiply_product(outer, R + 2 * S, 2 * R);
      return r - outer;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

PowerSeries genfun_from_terms(const FamilySpec& spec, const Decomposition& terms,
                              std::size_t order) {
  spec.validate();
  PowerSeries r(order);
  for (const auto& t : terms) {
    PowerSeries block = t.denominator == Denominator::Pair
                            ? genfun_B(t.params, spec.R, spec.S, order)
                            : genfun_Bprime(t.params, spec.R, spec.S, order);
    if (t.sign > 0) {
      r += block;
    } else {
      r -= block;
    }
  }
  if (spec.family == Family::Cprime) r[0] += (spec.k % 2 == 1) ? 1 : -1;
  return r;
}

PowerSeries genfun_family_via_decomposition(const FamilySpec& spec, std::size_t order) {
  return genfun_from_terms(spec, decompose(spec), order);
}

std::pair<PowerSeries, PowerSeries> pentagonal_sides(std::size_t order) {
  PowerSeries lhs = finite_pochhammer(order - 1, order);
  PowerSeries rhs(order);
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t e = j * (3 * j + 1) / 2;
    if (e >= static_cast<std::int64_t>(order)) break;
    const long sign = (j % 2 == 0) ? 1 : -1;
    add_term(rhs, e, sign);
    add_term(rhs, e + 2 * j + 1, -sign);
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<PowerSeries, PowerSeries> truncated_pentagonal_sides(std::int64_t k, std::size_t order) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "truncated pentagonal theorem needs k >= 1");
  PowerSeries num(order);
  for (std::int64_t j = 0; j < k; ++j) {
    const long sign = (j % 2 == 0) ? 1 : -1;
    add_term(num, j * (3 * j + 1) / 2, sign);
    add_term(num, j * (3 * j + 1) / 2 + 2 * j + 1, -sign);
  }
  PowerSeries lhs = mul(num, pochhammer_inv(ProductSpec{{{1, 1}}}, order));

  PowerSeries rhs = PowerSeries::constant(1, order);
  const long outer_sign = (k % 2 == 1) ? 1 : -1;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t lead = (k + 1) * n + k * (k - 1) / 2;
    if (lead >= static_cast<std::int64_t>(order)) break;
    PowerSeries term = mul(inverse(finite_pochhammer(static_cast<std::size_t>(n), order)),
                           qbinomial(n - 1, k - 1, order));
    const auto shift = static_cast<std::size_t>(lead);
    for (std::size_t i = 0; i + shift < order; ++i) {
      if (outer_sign > 0) {
        rhs[i + shift] += term[i];
      } else {
        rhs[i + shift] -= term[i];
      }
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

std::int64_t default_quintuple_range(std::int64_t R, std::int64_t S, std::size_t order) {
  const auto limit = static_cast<std::int64_t>(order);
  std::int64_t J = 1;
  while (R * J * (3 * J - 1) / 2 - 3 * J * S <= limit) ++J;
  return 2 * J;
}

std::pair<PowerSeries, PowerSeries> quintuple_product_sides(std::int64_t R, std::int64_t S,
                                                            std::int64_t J, std::size_t order) {
  if (S < 1 || 2 * S >= R || std::gcd(R, S) != 1) {
    fail(ErrorCode::InvalidArgument, "quintuple identity needs gcd(R,S)=1 and 1 <= S < R/2");
  }
  if (J < 0) fail(ErrorCode::InvalidArgument, "J must be non-negative");
  const auto limit = static_cast<std::int64_t>(order);
  const std::int64_t omitted =
      std::min(quintuple_min_exponent(R, S, J + 1), quintuple_min_exponent(R, S, -(J + 1)));
  if (omitted <= limit) {
    fail(ErrorCode::InsufficientRange, "J=" + std::to_string(J) + " drops exponent " +
                                           std::to_string(omitted) + " within order " +
                                           std::to_string(order));
  }
  PowerSeries lhs(order);
  for (std::int64_t n = -J; n <= J; ++n) add_quintuple_term(lhs, R, S, n);

  PowerSeries rhs = PowerSeries::constant(1, order);
  multiply_product(rhs, S, R);
  multiply_product(rhs, R - S, R);
  multiply_product(rhs, R, R);
  multiply_product(rhs, R - 2 * S, 2 * R);
  multiply_product(rhs, R + 2 * S, 2 * R);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<PowerSeries, PowerSeries> quintuple_product_sides(std::int64_t R, std::int64_t S,
                                                            std::size_t order) {
  return quintuple_product_sides(R, S, default_quintuple_range(R, S, order), order);
}

}  // namespace thetatrunc
