#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "brickforge/triples.hpp"

namespace brickforge {

/// Euler brick: edges (a, b, c) with integer face diagonals
/// d = sqrt(a^2+b^2), e = sqrt(a^2+c^2), f = sqrt(b^2+c^2).
struct Brick {
  Nat a;
  Nat b;
  Nat c;
  Nat d;
  Nat e;
  Nat f;

  friend bool operator==(const Brick&, const Brick&) = default;
};

struct BrickReport {
  std::array<Nat, 3> edges{};
  std::optional<std::array<Nat, 3>> diagonals;  // set only when all three are integers
  bool is_euler = false;
  bool is_primitive = false;
  std::optional<Nat> space_diagonal;  // set iff a^2+b^2+c^2 is a perfect square

  friend bool operator==(const BrickReport&, const BrickReport&) = default;
};

/// gcd factors and underlying primitive triples of the three faces:
/// k1*t1 = (a,b,d), k2*t2 = (a,c,e), k3*t3 = (b,c,f), up to leg order.
struct Decomposition {
  Nat k1;
  Nat k2;
  Nat k3;
  PythTriple t1;
  PythTriple t2;
  PythTriple t3;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Tests all three face sums plus the space-diagonal condition.
/// Edges must be positive.
BrickReport verify_brick(Nat a, Nat b, Nat c);

/// The verified brick for (a, b, c), or empty when some face diagonal is
/// not an integer.
std::optional<Brick> try_brick(Nat a, Nat b, Nat c);

/// Divides the edges by gcd3 and reorders them into strictly increasing
/// 2-adic valuation with v2(a) = 0; diagonals are recomputed, never
/// trusted. Throws NonCanonicalizable on a valuation tie.
Brick normalize(const Brick& br);

/// The brick with edges (bc, ac, ab); diagonals recomputed and verified.
Brick derived_brick(const Brick& br);

Decomposition decompose(const Brick& br);

std::ostream& operator<<(std::ostream& os, const Brick& br);

}  // namespace brickforge
