#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "thetatrunc/series.hpp"

namespace testing_util {

inline thetatrunc::PowerSeries from_poly(const oracle::Poly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (auto v : p) c.emplace_back(oracle::to_string(v));
  return thetatrunc::PowerSeries(std::move(c));
}

inline std::vector<long> as_longs(const thetatrunc::PowerSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

inline thetatrunc::PowerSeries random_series(std::mt19937_64& rng, std::size_t order, long lo,
                                             long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<mpz_class> c(order);
  for (auto& v : c) v = dist(rng);
  return thetatrunc::PowerSeries(std::move(c));
}

}  // namespace testing_util
