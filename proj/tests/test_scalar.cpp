#include <catch2/catch_amalgamated.hpp>

#include "weyl/cseries.hpp"
#include "weyl/random_gen.hpp"

using namespace weyl;

namespace {

CSeries random_series(Rng& rng, int trunc) {
  CSeries out = CSeries::zero(trunc);
  const int terms = rng.range(0, 3);
  for (int t = 0; t < terms; ++t) {
    out = out + CSeries::c_power(rng.range(0, 4), rng.rational(), trunc);
  }
  return out;
}

}  // namespace

TEST_CASE("series addition") {
  const CSeries three_c = CSeries::c_power(1, 3);
  REQUIRE((three_c + CSeries::c_power(1, -3)).is_zero());

  const CSeries lhs = CSeries::constant(1) + CSeries::c_power(1, 2);
  const CSeries sum = lhs + CSeries::c_power(2, 1);
  REQUIRE(sum.coefficient(0) == 1);
  REQUIRE(sum.coefficient(1) == 2);
  REQUIRE(sum.coefficient(2) == 1);

  const CSeries t2 = CSeries::c_power(2, 1, 2);
  REQUIRE((t2 + t2) == CSeries::c_power(2, 2, 2));
}

TEST_CASE("series multiplication") {
  REQUIRE(CSeries::c_power(1, 2) * CSeries::c_power(1, 3) ==
          CSeries::c_power(2, 6));

  // truncation drops the c^2 product entirely
  REQUIRE((CSeries::c_power(1, 1, 1) * CSeries::c_power(1, 1, 1)).is_zero());

  const CSeries one_minus_c = CSeries::constant(1) + CSeries::c_power(1, -1);
  const CSeries one_plus_c = CSeries::constant(1) + CSeries::c_power(1, 1);
  const CSeries prod = one_minus_c * one_plus_c;
  REQUIRE(prod == CSeries::constant(1) + CSeries::c_power(2, -1));
}

TEST_CASE("series scale, negate, zero test") {
  const CSeries two_plus_c = CSeries::constant(2) + CSeries::c_power(1, 1);
  const CSeries halved = two_plus_c.scaled(Rational(1, 2));
  REQUIRE(halved.coefficient(0) == 1);
  REQUIRE(halved.coefficient(1) == Rational(1, 2));

  REQUIRE(-CSeries::c_power(1, 1) == CSeries::c_power(1, -1));
  REQUIRE(CSeries::zero().is_zero());
  REQUIRE_FALSE(CSeries::constant(1).is_zero());
}

TEST_CASE("series mode mismatch is an error") {
  REQUIRE_THROWS_AS(CSeries::constant(1) + CSeries::constant(1, 4),
                    mode_mismatch);
  REQUIRE_THROWS_AS(CSeries::constant(1, 2) * CSeries::constant(1, 3),
                    mode_mismatch);
}

TEST_CASE("series ring axioms on random values") {
  Rng rng(2024);
  for (int trunc : {CSeries::kExact, 4}) {
    for (int i = 0; i < 200; ++i) {
      const CSeries a = random_series(rng, trunc);
      const CSeries b = random_series(rng, trunc);
      const CSeries c = random_series(rng, trunc);
      REQUIRE(a + b == b + a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("truncated arithmetic equals exact arithmetic then truncation") {
  Rng rng(77);
  const int k = 3;
  for (int i = 0; i < 200; ++i) {
    const CSeries a = random_series(rng, CSeries::kExact);
    const CSeries b = random_series(rng, CSeries::kExact);
    REQUIRE((a + b).truncate_to(k) == a.truncate_to(k) + b.truncate_to(k));
    REQUIRE((a * b).truncate_to(k) == a.truncate_to(k) * b.truncate_to(k));
  }
}

TEST_CASE("rational arithmetic is exact") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rng.rational(40, 30);
    REQUIRE(r * (Rational(1) / r) == 1);
  }
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(to_string(Rational(-3, 6)) == "-1/2");
  REQUIRE(to_string(Rational(7)) == "7");
}

TEST_CASE("series text form") {
  REQUIRE(CSeries::zero().str() == "0");
  const CSeries s = CSeries::constant(1) + CSeries::c_power(1, Rational(1, 2)) +
                    CSeries::c_power(3, -2);
  REQUIRE(s.str() == "1 + 1/2*c - 2*c^3");
  REQUIRE(CSeries::c_power(1, -1).str() == "-c");
  REQUIRE(CSeries::c_power(2, 1).str() == "c^2");
}
