#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "oracle.hpp"
#include "thetatrunc/error.hpp"
#include "thetatrunc/families.hpp"

using namespace thetatrunc;
using testing_util::as_longs;
using testing_util::from_poly;
using V = std::vector<long>;

namespace {

struct Abcd {
  long a2, c2, d;
  int sign;
};

std::vector<Abcd> flatten(const Decomposition& dec) {
  std::vector<Abcd> out;
  for (const auto& t : dec) out.push_back({t.params.a.twice(), t.params.c.twice(), t.params.d, t.sign});
  return out;
}

// C-family numerator straight from the defining tail sum, in 128-bit integers.
oracle::Poly c_numerator(long R, long S, long k, std::size_t order) {
  oracle::Poly num(order, 0);
  for (long j = k; j < 200; ++j) {
    const oracle::i128 s = ((j - k) % 2 == 0) ? 1 : -1;
    oracle::add_monomial(num, R * j * (j + 1) / 2 - j * S, s);
    oracle::add_monomial(num, R * j * (j + 1) / 2 + j * S + S, -s);
  }
  return num;
}

oracle::Poly c_series(long R, long S, long k, std::size_t order) {
  return oracle::multiply(c_numerator(R, S, k, order), oracle::pair_product_inv(R, S, order), order);
}

oracle::Poly cprime_series(long R, long S, long k, std::size_t order) {
  oracle::Poly num(order, 0);
  for (long j = 0; j < k; ++j) {
    const oracle::i128 s = ((k - 1 + j) % 2 == 0) ? 1 : -1;
    const long e = R * j * (j + 1) / 2 - S * j;
    oracle::add_monomial(num, e, s);
    oracle::add_monomial(num, e + (2 * j + 1) * S, -s);
  }
  return oracle::multiply(num, oracle::triple_product_inv(R, S, order), order);
}

// D / Dprime: bilateral quintuple sum over n outside the kept range divided by
// the pair product, i.e. -(sum over dropped n) / pair, by the quintuple identity.
oracle::Poly d_series(long R, long S, long k, bool prime, std::size_t order) {
  oracle::Poly dropped(order, 0);
  const long top = prime ? k - 1 : k;
  for (long n = -200; n <= 200; ++n) {
    if (n >= -k && n <= top) continue;
    const long base = n * (3 * n + 1) * R / 2;
    oracle::add_monomial(dropped, base - 3 * n * S, -1);
    oracle::add_monomial(dropped, base + (3 * n + 1) * S, +1);
  }
  return oracle::multiply(dropped, oracle::pair_product_inv(R, S, order), order);
}

}  // namespace

TEST_CASE("family spec validation") {
  CHECK_NOTHROW(FamilySpec{Family::C, 3, 1, 1}.validate());
  CHECK_THROWS_AS((FamilySpec{Family::C, 4, 2, 1}.validate()), Error);
  CHECK_THROWS_AS((FamilySpec{Family::C, 3, 3, 1}.validate()), Error);
  CHECK_THROWS_AS((FamilySpec{Family::C, 3, 1, 0}.validate()), Error);
  CHECK_NOTHROW(FamilySpec{Family::D, 3, 1, 0}.validate());
  CHECK_THROWS_AS((FamilySpec{Family::Dprime, 3, 1, 0}.validate()), Error);
  CHECK_THROWS_AS((FamilySpec{Family::D, 4, 2, 0}.validate()), Error);
  CHECK_THROWS_AS((FamilySpec{Family::D, 5, 3, 1}.validate()), Error);
  CHECK(parse_family("Cp") == Family::Cprime);
  CHECK(family_tag(Family::Dprime) == "Dp");
  CHECK_THROWS_AS(parse_family("E"), Error);
}

TEST_CASE("decompose_C") {
  const auto t = flatten(decompose_C({Family::C, 3, 1, 1}));
  CHECK(t[0].a2 == 12);
  CHECK((t[0].c2 == 14 && t[0].d == 2 && t[0].sign == 1));
  CHECK((t[1].c2 == 22 && t[1].d == 5 && t[1].sign == -1));
  CHECK((t[2].c2 == 26 && t[2].d == 7 && t[2].sign == -1));
  CHECK((t[3].c2 == 34 && t[3].d == 12 && t[3].sign == 1));

  const auto u = flatten(decompose_C({Family::C, 2, 1, 1}));
  CHECK((u[0].a2 == 8 && u[0].c2 == 8 && u[0].d == 1));
  CHECK((u[1].c2 == 16 && u[1].d == 4));
  CHECK((u[2].c2 == 16 && u[2].d == 4));
  CHECK((u[3].c2 == 24 && u[3].d == 9));

  for (long R : {3L, 4L, 5L, 7L, 11L}) {
    for (long S = 1; S < R; ++S) {
      if (std::gcd(R, S) != 1) continue;
      for (long k = 1; k <= 4; ++k) {
        const auto d = flatten(decompose_C({Family::C, R, S, k}));
        CHECK(d[1].d - d[0].d == (2 * k + 1) * S);
        CHECK(d[2].d - d[0].d == R * (k + 1) - S);
        CHECK(d[3].d - d[2].d == (2 * k + 3) * S);
      }
    }
  }
  const auto p = decompose_C({Family::Cprime, 3, 1, 1});
  for (const auto& term : p) CHECK(term.denominator == Denominator::Triple);
}

TEST_CASE("decompose_D and decompose_Dprime") {
  const auto d = flatten(decompose_D({Family::D, 3, 1, 0}));
  CHECK(d[0].d == 6);
  CHECK(d[1].d == 1);
  CHECK(d[2].d == 3);
  CHECK(d[3].d == 10);
  CHECK((d[0].a2 == 9 && d[0].c2 == 21));
  CHECK(d[0].sign == -1);
  CHECK(d[1].sign == 1);
  CHECK(flatten(decompose_D({Family::D, 5, 2, 1}))[0].d == 37);

  const auto p = flatten(decompose_Dprime({Family::Dprime, 3, 1, 1}));
  CHECK(p[2].d == 3);
  CHECK(p[3].d == 10);
  CHECK(flatten(decompose_Dprime({Family::Dprime, 5, 1, 1}))[2].d == 7);
  const auto same = flatten(decompose_D({Family::D, 3, 1, 1}));
  CHECK((p[0].c2 == same[0].c2 && p[0].d == same[0].d && p[1].d == same[1].d));

  for (const auto& t : decompose_D({Family::D, 7, 3, 2})) CHECK_NOTHROW(t.params.validate());
  for (const auto& t : decompose_Dprime({Family::Dprime, 7, 3, 2})) CHECK_NOTHROW(t.params.validate());
}

TEST_CASE("genfun_B against a direct expansion") {
  const ThetaParams p{HalfInteger(2), HalfInteger(1), 0};
  // Exponents 0 and 3 times parts = 1 or 2 mod 3 partitions 1,1,2,2,4,5.
  CHECK(as_longs(genfun_B(p, 3, 1, 6)) == V{1, 1, 2, 3, 5, 7});
  const ThetaParams sq{HalfInteger(1), HalfInteger(0), 0};
  CHECK(genfun_B(sq, 3, 1, 4)[0] == 1);
  for (long R : {3L, 5L, 7L}) {
    for (long S = 1; S < R; ++S) {
      const std::size_t order = 80;
      const auto theta = oracle::theta(12, 14, 2, order);
      CHECK(genfun_B({HalfInteger(6), HalfInteger(7), 2}, R, S, order) ==
            from_poly(oracle::multiply(theta, oracle::pair_product_inv(R, S, order), order)));
      const auto bp = genfun_Bprime({HalfInteger(6), HalfInteger(7), 2}, R, S, order);
      CHECK(bp == from_poly(oracle::multiply(theta, oracle::triple_product_inv(R, S, order), order)));
      for (const auto& c : bp.coeffs()) CHECK(c >= 0);
    }
  }
  CHECK_THROWS_AS(genfun_B(p, 4, 2, 5), Error);
}

TEST_CASE("genfun_family small examples") {
  CHECK(as_longs(genfun_family({Family::C, 3, 1, 1}, 6)) == V{0, 0, 1, 1, 2, 1});
  for (long k = 1; k <= 4; ++k) {
    CHECK(genfun_family({Family::Cprime, 5, 2, k}, 3)[0] == ((k % 2 == 1) ? 1 : -1));
  }
  const auto d = genfun_family({Family::D, 3, 1, 0}, 4);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
}

TEST_CASE("genfun_family matches independent oracles") {
  const std::size_t order = 150;
  for (auto [R, S] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {5, 2}, {7, 3}}) {
    for (long k = 1; k <= 3; ++k) {
      CAPTURE(R);
      CAPTURE(S);
      CAPTURE(k);
      CHECK(genfun_family({Family::C, R, S, k}, order) == from_poly(c_series(R, S, k, order)));
      CHECK(genfun_family({Family::Cprime, R, S, k}, order) ==
            from_poly(cprime_series(R, S, k, order)));
    }
    if (2 * S >= R) continue;
    for (long k = 0; k <= 3; ++k) {
      CAPTURE(k);
      CHECK(genfun_family({Family::D, R, S, k}, order) == from_poly(d_series(R, S, k, false, order)));
      if (k >= 1) {
        CHECK(genfun_family({Family::Dprime, R, S, k}, order) ==
              from_poly(d_series(R, S, k, true, order)));
      }
    }
  }
}

TEST_CASE("decomposition equals definition") {
  for (auto [R, S] : std::vector<std::pair<long, long>>{{3, 1}, {4, 1}, {5, 2}, {7, 3}}) {
    for (long k = 0; k <= 3; ++k) {
      CAPTURE(R);
      CAPTURE(S);
      CAPTURE(k);
      std::vector<FamilySpec> specs;
      if (k >= 1) specs.push_back({Family::C, R, S, k});
      if (k >= 1) specs.push_back({Family::Cprime, R, S, k});
      if (2 * S < R) specs.push_back({Family::D, R, S, k});
      if (2 * S < R && k >= 1) specs.push_back({Family::Dprime, R, S, k});
      for (const auto& spec : specs) {
        CAPTURE(spec.str());
        CHECK(!first_mismatch(genfun_family(spec, 300), genfun_family_via_decomposition(spec, 300)));
      }
    }
  }
}

TEST_CASE("fault injection in the first block is detected at its lowest exponent") {
  const FamilySpec spec{Family::C, 3, 1, 1};
  auto terms = decompose(spec);
  terms[0].params.d += 1;
  const auto m = first_mismatch(genfun_family(spec, 100), genfun_from_terms(spec, terms, 100));
  REQUIRE(m.has_value());
  CHECK(*m == 2);
}

TEST_CASE("pentagonal identities") {
  const auto [l, r] = pentagonal_sides(200);
  CHECK(l == r);
  for (long k = 1; k <= 6; ++k) {
    const auto [lhs, rhs] = truncated_pentagonal_sides(k, 200);
    CAPTURE(k);
    CHECK(lhs == rhs);
    CHECK(lhs[0] == 1);
  }
  CHECK_THROWS_AS(truncated_pentagonal_sides(0, 10), Error);
}

TEST_CASE("quintuple product identity") {
  for (auto [R, S] : std::vector<std::pair<long, long>>{{3, 1}, {5, 2}, {5, 1}, {7, 3}, {7, 2}}) {
    const auto [lhs, rhs] = quintuple_product_sides(R, S, 200);
    CAPTURE(R);
    CHECK(lhs == rhs);
  }
  const auto [lhs, rhs] = quintuple_product_sides(5, 2, 1, 5);
  CHECK(as_longs(lhs) == V{1, -1, -1, 0, 1});
  CHECK(lhs == rhs);
  try {
    quintuple_product_sides(3, 1, 1, 100);
    FAIL("expected InsufficientRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientRange);
  }
}
