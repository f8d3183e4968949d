#include <doctest.h>

#include <random>

#include "brickforge/arith.hpp"
#include "oracles.hpp"

using namespace brickforge;

namespace {

std::mt19937_64 rng(0x5eed5eedULL);

u128 random_u128(int bits) {
  const u128 hi = rng();
  const u128 lo = rng();
  return ((hi << 64) | lo) & ((u128{1} << bits) - 1);
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("isqrt fixtures") {
  CHECK(isqrt(Nat(0)) == Nat(0));
  CHECK(isqrt(Nat(710649)) == Nat(843));  // 843^2 = 710649
  CHECK(isqrt(Nat(2529)) == Nat(50));
  CHECK(oracle::slow_isqrt(2529) == 50);
  CHECK(isqrt(Nat(1)) == Nat(1));
  CHECK(isqrt(Nat(3)) == Nat(1));
  CHECK(isqrt(Nat(4)) == Nat(2));
  CHECK(isqrt(Nat::of(nat_max_raw)) == Nat::of(oracle::slow_isqrt(nat_max_raw)));
}

TEST_CASE("isqrt postcondition on random 126-bit values") {
  for (int i = 0; i < 20000; ++i) {
    const Nat n = Nat::of(random_u128(126));
    const Nat r = isqrt(n);
    CHECK(r.raw() * r.raw() <= n.raw());
    CHECK((r.raw() + 1) * (r.raw() + 1) > n.raw());
    CHECK(r.raw() == oracle::slow_isqrt(n.raw()));
  }
}

TEST_CASE("perfect_square fixtures") {
  CHECK(!perfect_square(Nat(2529)));
  CHECK(perfect_square(Nat(2226064)) == Nat(1492));
  CHECK(perfect_square(Nat(1)) == Nat(1));
  CHECK(perfect_square(Nat(0)) == Nat(0));
  CHECK(!perfect_square(Nat(2)));
  CHECK(!perfect_square(Nat(1696)));
  CHECK(!perfect_square(Nat(2255625)));
  CHECK(!perfect_square(Nat(5664976)));
  CHECK(!perfect_square(Nat(74684569)));
  CHECK(perfect_square(Nat(3549456)) == Nat(1884));
}

TEST_CASE("residue pre-filters never reject an actual square") {
  for (int i = 0; i < 1000000; ++i) {
    const u128 r = random_u128(63);
    const auto root = perfect_square(Nat::of(r * r));
    REQUIRE(root.has_value());
    REQUIRE(root->raw() == r);
  }
}

TEST_CASE("perfect_square agrees with the slow oracle") {
  for (int i = 0; i < 20000; ++i) {
    const u128 n = random_u128(100);
    CHECK(perfect_square(Nat::of(n)).has_value() == oracle::slow_is_square(n));
  }
}

TEST_CASE("gcd fixtures") {
  CHECK(gcd(Nat(0), Nat(7)) == Nat(7));
  CHECK(gcd(Nat(7), Nat(0)) == Nat(7));
  CHECK(gcd(Nat(0), Nat(0)) == Nat(0));
  CHECK(gcd3(Nat(117), Nat(44), Nat(240)) == Nat(1));
  CHECK(gcd3(Nat(158125), Nat(144900), Nat(13200)) == Nat(25));
  CHECK(oracle::slow_gcd(oracle::slow_gcd(158125, 144900), 13200) == 25);
}

TEST_CASE("gcd properties") {
  for (int i = 0; i < 5000; ++i) {
    const Nat a = Nat::of(random_u128(60));
    const Nat b = Nat::of(random_u128(60));
    const Nat c = Nat::of(random_u128(60));
    const Nat k = Nat::of(random_u128(30) + 1);
    CHECK(gcd(a, b) == gcd(b, a));
    CHECK(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)));
    CHECK(gcd(k * a, k * b) == k * gcd(a, b));
    CHECK(gcd(a, b).raw() == oracle::slow_gcd(a.raw(), b.raw()));
  }
}

TEST_CASE("v2 fixtures") {
  CHECK(v2(Nat(117)) == 0u);
  CHECK(v2(Nat(44)) == 2u);
  CHECK(v2(Nat(240)) == 4u);
  CHECK(v2(Nat(1)) == 0u);
  CHECK(v2(Nat::of(u128{1} << 100)) == 100u);
  CHECK_THROWS_AS(v2(Nat(0)), std::invalid_argument);
}

TEST_CASE("overflow is signaled, never wrapped") {
  const Nat big = Nat::of(u128{1} << 126);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * Nat(2), std::overflow_error);
  CHECK_THROWS_AS(sq(big), std::overflow_error);
  CHECK_THROWS_AS(Nat(1) - Nat(2), std::overflow_error);
  CHECK_THROWS_AS(Nat::of(u128{1} << 127), std::overflow_error);
  CHECK(Nat::of(nat_max_raw) + Nat(0) == Nat::of(nat_max_raw));
}

TEST_CASE("division guards") {
  CHECK(Nat(7) / Nat(2) == Nat(3));
  CHECK(Nat(7) % Nat(2) == Nat(1));
  CHECK_THROWS_AS(Nat(1) / Nat(0), std::invalid_argument);
  CHECK_THROWS_AS(Nat(1) % Nat(0), std::invalid_argument);
}

TEST_CASE("decimal round trip") {
  CHECK(to_string(Nat(0)) == "0");
  CHECK(to_string(Nat::of(nat_max_raw)) == "170141183460469231731687303715884105727");
  CHECK(parse_nat("170141183460469231731687303715884105727") == Nat::of(nat_max_raw));
  CHECK_THROWS_AS(parse_nat("170141183460469231731687303715884105728"), std::out_of_range);
  CHECK_THROWS_AS(parse_nat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_nat("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nat("-3"), std::invalid_argument);
  for (int i = 0; i < 2000; ++i) {
    const Nat n = Nat::of(random_u128(120));
    CHECK(parse_nat(to_string(n)) == n);
  }
}

}  // TEST_SUITE
