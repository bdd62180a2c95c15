#pragma once

// Generating functions of the truncated Jacobi triple product and quintuple
// product families, their decompositions into theta blocks, and the classical
// identities that serve as exact oracles.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "thetatrunc/series.hpp"

namespace thetatrunc {

enum class Family { C, Cprime, D, Dprime };

/// Short tag used on the command line and in reports: C, Cp, D, Dp.
std::string_view family_tag(Family f);
Family parse_family(std::string_view tag);

struct FamilySpec {
  Family family = Family::C;
  std::int64_t R = 3;
  std::int64_t S = 1;
  std::int64_t k = 1;

  /// gcd(R,S) = 1; C/Cprime: 1 <= S < R, k >= 1; D: 1 <= S < R/2, k >= 0;
  /// Dprime: 1 <= S < R/2, k >= 1.
  void validate() const;

  std::string str() const;
  bool operator==(const FamilySpec&) const = default;
};

enum class Denominator {
  Pair,    // (q^S, q^{R-S}; q^R)_inf
  Triple,  // (q^S, q^{R-S}, q^R; q^R)_inf
};

struct SignedThetaTerm {
  int sign = 1;
  ThetaParams params;
  Denominator denominator = Denominator::Pair;
};

using Decomposition = std::array<SignedThetaTerm, 4>;

/// C and Cprime share the exponents T1..T4; Cprime uses the triple product.
Decomposition decompose_C(const FamilySpec& spec);
Decomposition decompose_D(const FamilySpec& spec);
Decomposition decompose_Dprime(const FamilySpec& spec);
Decomposition decompose(const FamilySpec& spec);

/// L_{a,c,d} and L'_{a,c,d} as exact series.
PowerSeries genfun_B(const ThetaParams& p, std::int64_t R, std::int64_t S, std::size_t order);
PowerSeries genfun_Bprime(const ThetaParams& p, std::int64_t R, std::int64_t S, std::size_t order);

/// The family series built straight from its defining expression.
PowerSeries genfun_family(const FamilySpec& spec, std::size_t order);

/// The same series assembled from the four signed theta blocks.
PowerSeries genfun_family_via_decomposition(const FamilySpec& spec, std::size_t order);
PowerSeries genfun_from_terms(const FamilySpec& spec, const Decomposition& terms,
                              std::size_t order);

/// Both sides of Euler's pentagonal number theorem.
std::pair<PowerSeries, PowerSeries> pentagonal_sides(std::size_t order);

/// Both sides of the truncated pentagonal number theorem for a given k >= 1.
std::pair<PowerSeries, PowerSeries> truncated_pentagonal_sides(std::int64_t k, std::size_t order);

/// Bilateral sum over |n| <= J versus the quintuple product.
std::pair<PowerSeries, PowerSeries> quintuple_product_sides(std::int64_t R, std::int64_t S,
                                                            std::int64_t J, std::size_t order);
std::pair<PowerSeries, PowerSeries> quintuple_product_sides(std::int64_t R, std::int64_t S,
                                                            std::size_t order);
std::int64_t default_quintuple_range(std::int64_t R, std::int64_t S, std::size_t order);

}  // namespace thetatrunc
