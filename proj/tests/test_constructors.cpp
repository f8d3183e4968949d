#include <doctest.h>

#include <random>

#include "brickforge/constructors.hpp"
#include "brickforge/errors.hpp"

using namespace brickforge;

namespace {

PythTriple T(std::uint64_t u, std::uint64_t v, std::uint64_t w) {
  return make_triple(Nat(u), Nat(v), Nat(w));
}

Brick B(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, std::uint64_t e,
        std::uint64_t f) {
  return Brick{Nat(a), Nat(b), Nat(c), Nat(d), Nat(e), Nat(f)};
}

std::vector<PythTriple> random_triples(std::size_t count, std::uint64_t m_max,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PythTriple> out;
  while (out.size() < count) {
    const Nat m = Nat(rng() % m_max + 2);
    const Nat n = Nat(rng() % (m.raw() - 1) + 1);
    if (m.odd() == n.odd() || gcd(m, n) != 1) continue;
    out.push_back(euclid(m, n));
  }
  return out;
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("theorem1 fixtures") {
  const auto row1 = theorem1(make_leg_pair(Nat(7), Nat(20)), T(7, 24, 25), T(99, 20, 101));
  REQUIRE(row1.has_value());
  CHECK(*row1 == B(693, 140, 480, 707, 843, 500));

  const auto row5 = theorem1(make_leg_pair(Nat(1), Nat(4)), T(11, 60, 61), T(117, 44, 125));
  REQUIRE(row5.has_value());
  CHECK(*row5 == B(117, 44, 240, 125, 267, 244));

  // Product condition fails: v0*u1 = 12, u0*v2 = 36.
  CHECK(!theorem1(make_leg_pair(Nat(3), Nat(4)), T(3, 4, 5), T(5, 12, 13)));
}

TEST_CASE("corollary1 fixtures") {
  const auto row1 = corollary1(T(7, 24, 25), T(99, 20, 101));
  REQUIRE(row1.has_value());
  CHECK(*row1 == B(693, 140, 480, 707, 843, 500));

  CHECK(!corollary1(T(3, 4, 5), T(5, 12, 13)));  // 2529 is not a square
  CHECK(!corollary1(T(3, 4, 5), T(3, 4, 5)));    // 337 is not a square
}

TEST_CASE("theorem2 fixtures") {
  const auto row1 = theorem2(make_leg_pair(Nat(11), Nat(17)), T(11, 60, 61), T(17, 144, 145));
  REQUIRE(row1.has_value());
  CHECK(*row1 == B(187, 1020, 1584, 1037, 1595, 1884));

  const auto row2 = theorem2(make_leg_pair(Nat(21), Nat(55)), T(21, 20, 29), T(55, 48, 73));
  REQUIRE(row2.has_value());
  CHECK(*row2 == B(1155, 1100, 1008, 1595, 1533, 1492));

  // Product holds (15 = 15) but 1696 is not a square.
  CHECK(!theorem2(make_leg_pair(Nat(3), Nat(5)), T(3, 4, 5), T(5, 12, 13)));

  CHECK_THROWS_AS(theorem2(make_leg_pair(Nat(3), Nat(4)), T(3, 4, 5), T(5, 12, 13)),
                  std::invalid_argument);  // even v0
}

TEST_CASE("corollary2 fixtures") {
  const auto row1 = corollary2(T(11, 60, 61), T(17, 144, 145));
  REQUIRE(row1.has_value());
  CHECK(*row1 == B(187, 1020, 1584, 1037, 1595, 1884));

  const auto row4 = corollary2(T(275, 252, 373), T(575, 48, 577));
  REQUIRE(row4.has_value());
  CHECK(*row4 == B(158125, 144900, 13200, 214475, 158675, 145500));
  CHECK(!verify_brick(row4->a, row4->b, row4->c).is_primitive);  // gcd 25

  CHECK(!corollary2(T(3, 4, 5), T(5, 12, 13)));  // 1696 again
}

TEST_CASE("theorem3 fixtures") {
  const auto row1 = theorem3(make_leg_pair(Nat(3), Nat(4)), T(11, 60, 61), T(39, 80, 89));
  REQUIRE(row1.has_value());
  CHECK(*row1 == B(117, 44, 240, 125, 267, 244));

  const auto row2 = theorem3(make_leg_pair(Nat(5), Nat(12)), T(21, 20, 29), T(55, 48, 73));
  REQUIRE(row2.has_value());
  CHECK(*row2 == B(275, 252, 240, 373, 365, 348));

  CHECK(!theorem3(make_leg_pair(Nat(3), Nat(4)), T(3, 4, 5), T(3, 4, 5)));  // 16 != 12
}

TEST_CASE("edge identities hold exactly on constructor output") {
  const auto th1 = theorem1(make_leg_pair(Nat(7), Nat(20)), T(7, 24, 25), T(99, 20, 101));
  CHECK(th1->b == Nat(20) * Nat(7));
  CHECK(th1->b == Nat(7) * Nat(20));  // v0*u1 == u0*v2
  const auto th2 = theorem2(make_leg_pair(Nat(11), Nat(17)), T(11, 60, 61), T(17, 144, 145));
  CHECK(th2->a == Nat(11) * Nat(17));  // u0*u2 == v0*u1
  const auto th3 = theorem3(make_leg_pair(Nat(3), Nat(4)), T(11, 60, 61), T(39, 80, 89));
  CHECK(th3->c == Nat(4) * Nat(60));  // v0*v1 == u0*v2
}

TEST_CASE("lift_pair fixtures") {
  const auto [a1, a2] = lift_pair(T(3, 4, 5));
  CHECK(a1 == T(11, 60, 61));
  CHECK(a2 == T(39, 80, 89));

  const auto [b1, b2] = lift_pair(T(5, 12, 13));
  CHECK(b1 == T(69, 260, 269));
  CHECK(b2 == T(407, 624, 745));

  const auto [c1, c2] = lift_pair(T(21, 20, 29));
  CHECK(c1 == T(923, 2436, 2605));
  CHECK(c2 == T(759, 2320, 2441));
}

TEST_CASE("lift_pair output satisfies the theorem-3 product condition") {
  for (const PythTriple& t0 : enumerate_primitive(Nat(300))) {
    const auto [t1, t2] = lift_pair(t0);
    CHECK(t0.v * t1.v == t0.u * t2.v);
    CHECK(gcd(t1.u, t1.v) == Nat(1));
    CHECK(gcd(t2.u, t2.v) == Nat(1));
  }
}

TEST_CASE("sounderson fixtures") {
  CHECK(sounderson(T(3, 4, 5)) == B(117, 44, 240, 125, 267, 244));
  CHECK(sounderson(T(5, 12, 13)) == B(2035, 828, 3120, 2197, 3725, 3228));
  CHECK(sounderson(T(7, 24, 25)) == B(11753, 10296, 16800, 15625, 20503, 19704));
  CHECK(sounderson(T(15, 8, 17)) == B(495, 4888, 8160, 4913, 8175, 9512));
}

TEST_CASE("sounderson equals theorem3 over the lifted pair, with d = w^3") {
  for (const PythTriple& t0 : enumerate_primitive(Nat(1000))) {
    const Brick direct = sounderson(t0);
    const auto [t1, t2] = lift_pair(t0);
    const auto via_theorem = theorem3(make_leg_pair(t0.u, t0.v), t1, t2);
    REQUIRE(via_theorem.has_value());
    CHECK(direct == *via_theorem);
    CHECK(direct.d == t0.w * t0.w * t0.w);
    CHECK(verify_brick(direct.a, direct.b, direct.c).is_euler);
  }
}

TEST_CASE("corollaries are theorem instances up to scale") {
  const auto triples = enumerate_primitive(Nat(150));
  for (const PythTriple& t1 : triples) {
    for (const PythTriple& t2 : triples) {
      if (const auto cor = corollary1(t1, t2)) {
        const Nat g = gcd(t1.u, t2.v);
        const auto th = theorem1(make_leg_pair(t1.u / g, t2.v / g), t1, t2);
        REQUIRE(th.has_value());
        CHECK(th->a * g == cor->a);
        CHECK(th->b * g == cor->b);
        CHECK(th->c * g == cor->c);
      }
      if (const auto cor = corollary2(t1, t2)) {
        const Nat g = gcd(t1.u, t2.u);
        const auto th = theorem2(make_leg_pair(t1.u / g, t2.u / g), t1, t2);
        REQUIRE(th.has_value());
        CHECK(th->a * g == cor->a);
        CHECK(th->b * g == cor->b);
        CHECK(th->c * g == cor->c);
      }
    }
  }
}

TEST_CASE("perfect cuboid construction rejects bad inputs") {
  // The conjectures' trivial (1,0,1) solution produces a zero edge; the
  // typed triple boundary already refuses to build it.
  CHECK_THROWS_AS(perfect_from_parts(Nat(1), Nat(0), Nat(1), Nat(3), Nat(4), Nat(5)),
                  DegenerateEdge);
  CHECK_THROWS_AS(make_triple(Nat(1), Nat(0), Nat(1)), std::invalid_argument);
  // (5*5)^2 + (4*12)^2 = 2929 is not a square.
  CHECK_THROWS_AS(perfect_from_counterexample(T(3, 4, 5), T(5, 12, 13)), HypothesisNotMet);
  CHECK_THROWS_AS(perfect_from_parts(Nat(1), Nat(2), Nat(3), Nat(3), Nat(4), Nat(5)),
                  std::invalid_argument);  // not a Pythagorean triple
}

TEST_CASE("cuboid algebraic identities hold for any two primitive triples") {
  const auto first = random_triples(1000, 200, 7);
  const auto second = random_triples(1000, 200, 11);
  for (std::size_t i = 0; i < first.size(); ++i) {
    const Nat x = first[i].u, y = first[i].v, z = first[i].w;
    const Nat u = second[i].u, v = second[i].v, w = second[i].w;
    CHECK(sq(z * u) + sq(y * v) == sq(x * u) + sq(y * w));
    CHECK(sq(z * v) + sq(y * u) == sq(x * v) + sq(y * w));
    CHECK(sq(x * u) + sq(x * v) == sq(x * w));
    CHECK(sq(x * u) + sq(x * v) + sq(y * w) == sq(w * z));
  }
}

}  // TEST_SUITE
